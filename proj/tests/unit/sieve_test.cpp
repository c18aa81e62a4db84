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
#include <vector>

#include "oracles.hpp"
#include "pspc/errors.hpp"
#include "pspc/sieve.hpp"

namespace pspc {
namespace {

TEST(LambdaTable, LimitOneIsSingleZero) {
  const auto t = build_lambda_table(1);
  ASSERT_EQ(t.limit(), 1u);
  EXPECT_EQ(t[1], 0.0);
}

TEST(LambdaTable, SmallValues) {
  const auto t = build_lambda_table(10);
  EXPECT_EQ(t[8], std::log(2.0));
  EXPECT_EQ(t[9], std::log(3.0));
  EXPECT_EQ(t[6], 0.0);
  EXPECT_EQ(t[1], 0.0);
  const std::vector<std::uint64_t> expected = {2, 3, 4, 5, 7, 8, 9};
  EXPECT_EQ(t.prime_powers(), expected);
}

TEST(LambdaTable, MatchesTrialDivision) {
  const std::uint64_t limit = 10'000;
  const auto t = build_lambda_table(limit);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const double want = oracle::lambda(n);
    // within one ulp of the libm logarithm
    EXPECT_LE(std::abs(t[n] - want), std::nextafter(want, 1e300) - want) << "n=" << n;
  }
}

TEST(LambdaTable, PrimePowersShareOneValue) {
  const auto t = build_lambda_table(1 << 12);
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    for (std::uint64_t q = p * p; q <= t.limit(); q *= p) EXPECT_EQ(t[q], t[p]) << q;
  }
}

TEST(LambdaTable, SegmentSizeDoesNotChangeBits) {
  SieveOptions small;
  small.segment_size = 1 << 10;
  SieveOptions large;
  large.segment_size = 1 << 16;
  EXPECT_EQ(build_lambda_table(300'001, small), build_lambda_table(300'001, large));
}

TEST(LambdaTable, ThreadCountDoesNotChangeBits) {
  SieveOptions one;
  one.segment_size = 1 << 12;
  SieveOptions four = one;
  four.threads = 4;
  EXPECT_EQ(build_lambda_table(200'000, one), build_lambda_table(200'000, four));
}

TEST(LambdaTable, BudgetGuard) {
  SieveOptions opts;
  opts.memory_budget = 1000;
  EXPECT_THROW(build_lambda_table(1001, opts), ResourceError);
  EXPECT_NO_THROW(build_lambda_table(1000, opts));
  EXPECT_THROW(build_lambda_table(0), ArgumentError);
}

TEST(LambdaTable, CheckedAccess) {
  const auto t = build_lambda_table(10);
  EXPECT_THROW(t.at(11), ArgumentError);
  EXPECT_EQ(t.at(7), std::log(7.0));
}

TEST(Chebyshev, HandValues) {
  const auto t = build_lambda_table(10);
  EXPECT_EQ(chebyshev_psi(t, 1.0), 0.0);
  const double want = 3 * std::log(2.0) + 2 * std::log(3.0) + std::log(5.0) + std::log(7.0);
  EXPECT_NEAR(chebyshev_psi(t, 10.0), want, 1e-12);
  EXPECT_NEAR(chebyshev_psi(t, 10.0), 7.8320, 1e-4);
  EXPECT_NEAR(chebyshev_psi(t, 9.99), chebyshev_psi(t, 9.0), 0.0);
  EXPECT_THROW(chebyshev_psi(t, 0.5), ArgumentError);
  EXPECT_THROW(chebyshev_psi(t, 11.0), ArgumentError);
}

TEST(Chebyshev, Monotone) {
  const auto t = build_lambda_table(5000);
  double prev = 0.0;
  for (int x = 1; x <= 5000; ++x) {
    const double v = chebyshev_psi(t, x);
    EXPECT_GE(v, prev);
    prev = v;
  }
}

TEST(Chebyshev, PrimeNumberTheoremScale) {
  const auto t = build_lambda_table(10'000'000);
  EXPECT_NEAR(chebyshev_psi(t, 1e7) / 1e7, 1.0, 0.01);
}

TEST(Cesaro, Averages) {
  const std::vector<double> one = {5.0};
  EXPECT_EQ(cesaro_average(one, 1.0), 5.0);
  const std::vector<double> three = {1.0, 2.0, 3.0};
  EXPECT_EQ(cesaro_average(three, 3.0), 2.0);
  EXPECT_EQ(cesaro_average(three, 2.7), 1.5);
  const auto t = build_lambda_table(10);
  EXPECT_NEAR(cesaro_average(t.values(), 10.0), 0.78320, 1e-5);
  EXPECT_THROW(cesaro_average(three, 0.5), ArgumentError);
  EXPECT_THROW(cesaro_average(three, 4.0), ArgumentError);
}

}  // namespace
}  // namespace pspc
