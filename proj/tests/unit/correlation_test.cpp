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
#include <cstring>

#include "oracles.hpp"
#include "pspc/correlation.hpp"
#include "pspc/errors.hpp"
#include "pspc/spectrum.hpp"

namespace pspc {
namespace {

const PsExponent kC = PsExponent::parse("2.5");

PsParams small_params(std::int64_t n, std::int64_t m, const PsExponent& c = kC) {
  PsParams p;
  p.c = c;
  p.n = n;
  p.m = m;
  p.cutoff = n / 2;
  return p;
}

// (1/(NM)) sum_m sum_n Lambda(n) Lambda(n + floor(m^c)), optionally wrapped mod N.
double oracle_average(std::int64_t n, std::int64_t m, std::int64_t p, std::int64_t q, bool wrap) {
  long double acc = 0;
  for (std::int64_t j = 1; j <= m; ++j) {
    const std::int64_t s = oracle::floor_root(j, p, q);
    for (std::int64_t i = 1; i <= n; ++i) {
      std::int64_t t = i + s;
      if (wrap) t = (t - 1) % n + 1;
      acc += static_cast<long double>(oracle::lambda(i)) * oracle::lambda(t);
    }
  }
  return static_cast<double>(acc / (static_cast<long double>(n) * m));
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

TEST(Params, TheoremModeExample) {
  const auto p = theorem_params(kC, 1.0, 10'000'000, ParamMode::kTheorem);
  EXPECT_NEAR(p.b_exp, 1.2, 1e-15);
  EXPECT_EQ(p.k, 22);
  EXPECT_NEAR(p.b, 182.0, 1e-12);
  EXPECT_EQ(p.b_eff, p.b);
  const double l = std::log(1e7);
  EXPECT_EQ(p.m, static_cast<std::int64_t>(std::floor(std::pow(1e7, 0.4) / std::pow(l, 1.2))));
  EXPECT_NEAR(p.gamma, 1.0 / (l * l), 1e-18);
  // log^182 N dwarfs N
  EXPECT_EQ(p.cutoff, 0);
  ASSERT_FALSE(p.warnings.empty());
}

TEST(Params, ExplorationModeExample) {
  const auto p = theorem_params(kC, 1.0, 10'000'000, ParamMode::kExploration, 3.0);
  EXPECT_EQ(p.m, 630);
  EXPECT_EQ(p.b_eff, 3.0);
  EXPECT_EQ(p.cutoff, static_cast<std::int64_t>(std::floor(1e7 / std::pow(std::log(1e7), 3.0))));
  EXPECT_TRUE(p.warnings.empty());
}

TEST(Params, ExplorationMIsExact) {
  // 4^2.5 = 32 exactly
  EXPECT_EQ(exploration_m(32, kC), 4);
  EXPECT_EQ(exploration_m(31, kC), 3);
  EXPECT_EQ(exploration_m(1, kC), 1);
  for (std::int64_t n = 1; n <= 5000; ++n) {
    const auto m = exploration_m(n, kC);
    ASSERT_LE(oracle::floor_root(m, 5, 2), n);
    // (m+1)^(5/2) > n  <=>  (m+1)^5 > n^2
    ASSERT_GT(oracle::Big(m + 1) * (m + 1) * (m + 1) * (m + 1) * (m + 1), oracle::Big(n) * n) << n;
  }
  const auto c3 = PsExponent::parse("3");
  EXPECT_EQ(exploration_m(1'000'000'000, c3), 1000);
  EXPECT_EQ(exploration_m(999'999'999, c3), 999);
}

TEST(Params, Errors) {
  EXPECT_THROW(theorem_params(PsExponent::parse("3"), 1.0, 1000, ParamMode::kTheorem), ArgumentError);
  EXPECT_THROW(theorem_params(PsExponent::parse("1.5"), 1.0, 1000, ParamMode::kTheorem), ArgumentError);
  EXPECT_NO_THROW(theorem_params(PsExponent::parse("3"), 1.0, 1000, ParamMode::kExploration));
  EXPECT_THROW(theorem_params(kC, 0.5, 1000, ParamMode::kExploration), ArgumentError);
  EXPECT_THROW(theorem_params(kC, 1.0, 15, ParamMode::kExploration), ArgumentError);
  EXPECT_THROW(theorem_params(kC, 1.0, 1000, ParamMode::kExploration, -1.0), ArgumentError);
}

TEST(Params, TinyMIsClampedWithWarning) {
  const auto p = theorem_params(kC, 5.0, 20, ParamMode::kTheorem);
  EXPECT_EQ(p.m, 1);
  EXPECT_GE(p.warnings.size(), 1u);
}

TEST(Direct, HandExample) {
  const auto t = build_lambda_table(11);
  const auto p = small_params(10, 1);
  const double l2 = std::log(2.0), l3 = std::log(3.0), l5 = std::log(5.0), l7 = std::log(7.0);
  const double want = (l2 * l3 + l3 * l2 + l2 * l5 + l7 * l2 + l2 * l3) / 10.0;
  EXPECT_NEAR(direct_average(p, t), want, 1e-15);
  EXPECT_NEAR(direct_average(p, t, DirectPath::kLiteral), want, 1e-15);
  EXPECT_NEAR(wrapped_average(p, t), want, 1e-15);
}

TEST(Direct, ConstantTable) {
  const auto ones = LambdaTable::from_values(std::vector<double>(200, 1.0));
  const auto p = small_params(100, 2);  // shifts 1, 5
  EXPECT_EQ(direct_average(p, ones), 1.0);
  EXPECT_EQ(direct_average(p, ones, DirectPath::kLiteral), 1.0);
  EXPECT_EQ(wrapped_average(p, ones), 1.0);
}

TEST(Direct, MatchesOracle) {
  for (const auto& [n, m] : {std::pair{50, 4}, {101, 6}, {300, 9}}) {
    const auto p = small_params(n, m);
    const auto t = build_lambda_table(static_cast<std::uint64_t>(n + oracle::floor_root(m, 5, 2)));
    EXPECT_NEAR(direct_average(p, t), oracle_average(n, m, 5, 2, false), 1e-12);
    EXPECT_NEAR(direct_average(p, t, DirectPath::kLiteral), oracle_average(n, m, 5, 2, false), 1e-12);
    EXPECT_NEAR(wrapped_average(p, t), oracle_average(n, m, 5, 2, true), 1e-12);
  }
}

TEST(Direct, TableTooShort) {
  const auto p = small_params(100, 3);  // largest shift floor(3^2.5) = 15
  EXPECT_THROW(direct_average(p, build_lambda_table(114)), ArgumentError);
  EXPECT_NO_THROW(direct_average(p, build_lambda_table(115)));
  EXPECT_THROW(wrapped_average(p, build_lambda_table(99)), ArgumentError);
}

TEST(Direct, ThreadCountDoesNotChangeBits) {
  const auto p = theorem_params(kC, 1.0, 200'000, ParamMode::kExploration, 3.0);
  const auto t = build_lambda_table(static_cast<std::uint64_t>(p.n + correlation_shifts(p).back()));
  EXPECT_TRUE(same_bits(direct_average(p, t, DirectPath::kPerShift, 1),
                        direct_average(p, t, DirectPath::kPerShift, 3)));
  EXPECT_TRUE(same_bits(wrapped_average(p, t, 1), wrapped_average(p, t, 4)));
}

TEST(Spectral, IdentityWithWrapped) {
  const auto t = build_lambda_table(1 << 16);
  for (std::int64_t n : {101, 127, 1024, 4097}) {
    for (const char* cs : {"2.1", "2.5", "e"}) {
      const auto p = theorem_params(PsExponent::parse(cs), 1.0, n, ParamMode::kExploration, 3.0);
      const auto s = lambda_hat(t, static_cast<std::uint64_t>(n));
      const double w = wrapped_average(p, t);
      for (auto path : {FourierPath::kXiSum, FourierPath::kAutocorrelation}) {
        const auto f = fourier_average(p, s, path);
        EXPECT_NEAR(f.value, w, 1e-9 * (1.0 + w)) << n << " " << cs;
        EXPECT_LE(std::abs(f.imag), 1e-9);
      }
    }
  }
}

TEST(Spectral, PathsAgreeAtLargeN) {
  const std::int64_t n = 1 << 16;
  const auto t = build_lambda_table(static_cast<std::uint64_t>(n));
  const auto s = lambda_hat(t, static_cast<std::uint64_t>(n));
  const auto p = theorem_params(kC, 1.0, n, ParamMode::kExploration, 3.0);
  const auto a = fourier_average(p, s, FourierPath::kXiSum);
  const auto b = fourier_average(p, s, FourierPath::kAutocorrelation);
  EXPECT_NEAR(a.value, b.value, 1e-9 * (1.0 + std::abs(a.value)));
  EXPECT_EQ(fourier_average(p, s).path, FourierPath::kAutocorrelation);
  const auto small = theorem_params(kC, 1.0, 1000, ParamMode::kExploration);
  EXPECT_EQ(fourier_average(small, lambda_hat(t, 1000)).path, FourierPath::kXiSum);
  EXPECT_THROW(fourier_average(p, lambda_hat(t, 1000)), ArgumentError);
}

TEST(Decompose, MainTermIsPsiSquared) {
  const auto t = build_lambda_table(1000);
  const auto s = lambda_hat(t, 1000);
  const auto p = theorem_params(kC, 1.0, 1000, ParamMode::kExploration, 3.0);
  const auto d = decompose(p, s);
  const double psi = chebyshev_psi(t, 1000.0);
  EXPECT_NEAR(d.main_term, (psi / 1000.0) * (psi / 1000.0), 1e-12);
}

TEST(Decompose, ReconstructsForEveryCutoff) {
  const auto t = build_lambda_table(4096);
  for (std::int64_t n : {1000, 1001, 4096}) {
    const auto s = lambda_hat(t, static_cast<std::uint64_t>(n));
    auto p = theorem_params(kC, 1.0, n, ParamMode::kExploration, 3.0);
    const double spectral = fourier_average(p, s, FourierPath::kXiSum).value;
    for (std::int64_t cut : {std::int64_t{0}, std::int64_t{1}, std::int64_t{7}, n / 3, n / 2}) {
      p.cutoff = cut;
      const auto d = decompose(p, s);
      EXPECT_NEAR(d.reconstruction, spectral, 1e-9 * (1.0 + std::abs(spectral))) << n << " cut=" << cut;
      EXPECT_NEAR(d.reconstruction, d.main_term + d.sigma1 + d.sigma2, 1e-15);
      if (cut == 0) EXPECT_EQ(d.sigma1, 0.0);
      if (cut == n / 2) EXPECT_EQ(d.sigma2, 0.0);
    }
  }
}

TEST(Decompose, FoldingWeights) {
  // with the cutoff at N/2 - 1 only the self-mirrored xi = N/2 sits in sigma2
  const std::int64_t n = 64;
  const auto t = build_lambda_table(64);
  const auto s = lambda_hat(t, 64);
  auto p = theorem_params(kC, 1.0, n, ParamMode::kExploration, 3.0);
  p.cutoff = n / 2 - 1;
  const auto d = decompose(p, s);
  EXPECT_EQ(d.sigma2, d.sigma2_one_sided);
  EXPECT_NEAR(d.sigma1, 2.0 * d.sigma1_one_sided, 1e-15);
}

TEST(Report, Fields) {
  const std::int64_t n = 4097;
  const auto p = theorem_params(kC, 1.0, n, ParamMode::kExploration, 3.0);
  const auto t = build_lambda_table(static_cast<std::uint64_t>(n + correlation_shifts(p).back()));
  const auto s = lambda_hat(t, static_cast<std::uint64_t>(n));
  CorrelationOptions opts;
  opts.both_fourier_paths = true;
  const auto r = correlation_report(p, t, s, opts);
  ASSERT_TRUE(r.direct.has_value());
  ASSERT_TRUE(r.spectral_other_path.has_value());
  EXPECT_NEAR(*r.spectral_other_path, r.spectral, 1e-9 * (1.0 + r.spectral));
  EXPECT_LE(r.identity_residual, 1e-9 * (1.0 + r.spectral));
  EXPECT_LE(r.reconstruction_residual, 1e-9);
  EXPECT_EQ(r.identity_residual, std::abs(r.wrapped - r.spectral));
  const double mc = std::pow(static_cast<double>(p.m), 2.5);
  EXPECT_NEAR(r.wrap_error_bound, mc * std::pow(std::log(4097.0), 2) / 4097.0, 1e-12 * r.wrap_error_bound);

  opts.include_direct = false;
  const auto small_table = build_lambda_table(static_cast<std::uint64_t>(n));
  EXPECT_FALSE(correlation_report(p, small_table, s, opts).direct.has_value());
}

TEST(Report, WrapGapWithinBound) {
  for (std::int64_t n : {10'000, 100'000}) {
    const auto p = theorem_params(kC, 1.0, n, ParamMode::kExploration, 3.0);
    const auto shift_max = correlation_shifts(p).back();
    const auto t = build_lambda_table(static_cast<std::uint64_t>(n + shift_max));
    const double gap = std::abs(direct_average(p, t) - wrapped_average(p, t));
    const double mc = static_cast<double>(shift_max);
    EXPECT_LE(gap, 4.0 * (mc / n) * std::pow(std::log(n + mc), 2)) << n;
  }
}

TEST(Report, OffMainTermsAreSmallAtScale) {
  const std::int64_t n = 1 << 20;
  const auto t = build_lambda_table(static_cast<std::uint64_t>(n));
  const auto s = lambda_hat(t, static_cast<std::uint64_t>(n));
  const auto p = theorem_params(kC, 1.0, n, ParamMode::kExploration, 3.0);
  const auto d = decompose(p, s);
  EXPECT_LE(std::abs(d.sigma1) + std::abs(d.sigma2), 0.5);
  EXPECT_NEAR(d.main_term, 1.0, 0.02);
}

}  // namespace
}  // namespace pspc
