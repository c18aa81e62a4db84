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

#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "pspc/precise_power.hpp"

namespace pspc {

enum class CountMethod { kBrute, kMitm };

/// Solution counts over the cube [1, M]^(2k) for
///   floor(m_1^c) + ... + floor(m_k^c) - floor(m_{k+1}^c) - ... - floor(m_2k^c) = 0
/// and the real inequality |m_1^c + ... - m_2k^c| <= k (boundary included).
struct DiophCount {
  std::int64_t m = 0;
  int k = 0;
  PsExponent c;
  std::uint64_t g_equation = 0;
  std::uint64_t g_inequality = 0;
  CountMethod method = CountMethod::kBrute;
};

inline constexpr double kBruteForceGuard = 1e9;  // M^(2k)
inline constexpr double kMitmGuard = 1e8;        // M^k

// Full 2k-fold enumeration. Throws ResourceError past the guard.
DiophCount brute_force_count(std::int64_t m, int k, const PsExponent& c);

// Meet in the middle: hash-join on exact k-fold floor sums for the equation,
// sorted real k-fold sums with a width-k window for the inequality.
DiophCount mitm_count(std::int64_t m, int k, const PsExponent& c);

// Least-squares slope of log2(count) against log2(M).
double fit_growth_exponent(std::span<const std::pair<double, double>> counts);

// Smallest k with 2k > (floor(2c) + 1)(floor(2c) + 2) + 1; needs c > 2.
int theorem_k(const PsExponent& c);

}  // namespace pspc
