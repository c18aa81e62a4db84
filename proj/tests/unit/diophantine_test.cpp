// Copyright 2026 The pspc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "pspc/diophantine.hpp"
#include "pspc/errors.hpp"

namespace pspc {
namespace {

struct OracleCount {
  std::uint64_t eq = 0;
  std::uint64_t ineq = 0;
};

// Enumerates the full cube with 50-digit powers.
OracleCount oracle_count(std::int64_t m, int k, const oracle::High& c) {
  std::vector<oracle::High> pw(static_cast<std::size_t>(m + 1));
  std::vector<std::int64_t> fl(static_cast<std::size_t>(m + 1));
  for (std::int64_t i = 1; i <= m; ++i) {
    pw[i] = oracle::power(i, c);
    fl[i] = boost::multiprecision::floor(pw[i]).convert_to<std::int64_t>();
  }
  OracleCount out;
  std::vector<std::int64_t> idx(static_cast<std::size_t>(2 * k), 1);
  for (;;) {
    std::int64_t s = 0;
    oracle::High r = 0;
    for (int j = 0; j < 2 * k; ++j) {
      const auto v = idx[j];
      s += j < k ? fl[v] : -fl[v];
      r += j < k ? pw[v] : -pw[v];
    }
    if (s == 0) ++out.eq;
    if (boost::multiprecision::abs(r) <= k) ++out.ineq;
    int j = 0;
    while (j < 2 * k && ++idx[j] > m) idx[j++] = 1;
    if (j == 2 * k) break;
  }
  return out;
}

TEST(Counting, SmallExamples) {
  const auto c = PsExponent::parse("2.5");
  const auto one = mitm_count(3, 1, c);
  EXPECT_EQ(one.g_equation, 3u);
  EXPECT_EQ(one.g_inequality, 3u);
  const auto trivial = brute_force_count(1, 3, c);
  EXPECT_EQ(trivial.g_equation, 1u);
  EXPECT_EQ(trivial.g_inequality, 1u);
  EXPECT_THROW(mitm_count(0, 1, c), ArgumentError);
  EXPECT_THROW(mitm_count(5, 0, c), ArgumentError);
}

TEST(Counting, MitmMatchesBruteAndOracle) {
  const std::pair<const char*, oracle::High> exps[] = {
      {"2.1", oracle::High(21) / 10}, {"2.5", oracle::High(5) / 2}, {"e", oracle::High(std::numbers::e)}};
  for (const auto& [text, ch] : exps) {
    const auto c = PsExponent::parse(text);
    for (int k = 1; k <= 2; ++k) {
      for (std::int64_t m = 1; m <= 12; ++m) {
        const auto a = mitm_count(m, k, c);
        const auto b = brute_force_count(m, k, c);
        ASSERT_EQ(a.g_equation, b.g_equation) << text << " k=" << k << " M=" << m;
        ASSERT_EQ(a.g_inequality, b.g_inequality) << text << " k=" << k << " M=" << m;
        if (m <= 8) {
          const auto o = oracle_count(m, k, ch);
          ASSERT_EQ(a.g_equation, o.eq) << text << " k=" << k << " M=" << m;
          ASSERT_EQ(a.g_inequality, o.ineq) << text << " k=" << k << " M=" << m;
        }
      }
    }
  }
}

TEST(Counting, DiagonalLowerBoundsAndMonotonicity) {
  const auto c = PsExponent::parse("2.5");
  for (int k = 1; k <= 3; ++k) {
    std::uint64_t prev_eq = 0, prev_ineq = 0;
    for (std::int64_t m = 1; m <= 20; ++m) {
      const auto r = mitm_count(m, k, c);
      // permutations of the diagonal give at least M^k
      EXPECT_GE(static_cast<double>(r.g_equation), std::pow(static_cast<double>(m), k));
      EXPECT_GE(r.g_inequality, r.g_equation) << "k=" << k << " M=" << m;
      EXPECT_GE(r.g_equation, prev_eq);
      EXPECT_GE(r.g_inequality, prev_ineq);
      prev_eq = r.g_equation;
      prev_ineq = r.g_inequality;
    }
  }
}

TEST(Counting, Guards) {
  const auto c = PsExponent::parse("2.5");
  EXPECT_THROW(brute_force_count(200, 2, c), ResourceError);
  EXPECT_THROW(mitm_count(10'001, 2, c), ResourceError);
  EXPECT_THROW(brute_force_count(32, 3, c), ResourceError);
  EXPECT_NO_THROW(brute_force_count(5, 3, c));
}

TEST(TheoremK, Values) {
  EXPECT_EQ(theorem_k(PsExponent::parse("2.5")), 22);
  EXPECT_EQ(theorem_k(PsExponent::parse("2.1")), 16);
  EXPECT_EQ(theorem_k(PsExponent::parse("3")), 29);
  EXPECT_THROW(theorem_k(PsExponent::parse("2")), ArgumentError);
  EXPECT_THROW(theorem_k(PsExponent::parse("1.5")), ArgumentError);
}

TEST(GrowthFit, Slopes) {
  std::vector<std::pair<double, double>> exact;
  for (double m : {4.0, 8.0, 16.0, 32.0}) exact.emplace_back(m, 7.0 * std::pow(m, 3.0));
  EXPECT_NEAR(fit_growth_exponent(exact), 3.0, 1e-12);

  auto scaled = exact;
  for (auto& p : scaled) p.second *= 1000.0;
  EXPECT_NEAR(fit_growth_exponent(scaled), fit_growth_exponent(exact), 1e-12);

  const std::vector<std::pair<double, double>> two = {{2, 4}, {4, 16}};
  EXPECT_THROW(fit_growth_exponent(two), ArgumentError);
  const std::vector<std::pair<double, double>> same = {{4, 4}, {4, 16}, {4, 8}};
  EXPECT_THROW(fit_growth_exponent(same), ArgumentError);
  const std::vector<std::pair<double, double>> zero = {{2, 0}, {4, 16}, {8, 8}};
  EXPECT_THROW(fit_growth_exponent(zero), ArgumentError);
}

}  // namespace
}  // namespace pspc
