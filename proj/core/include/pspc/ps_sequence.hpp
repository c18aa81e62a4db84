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

#include <complex>
#include <cstdint>
#include <vector>

#include "pspc/precise_power.hpp"

namespace pspc {

enum class ExpSumKind { kFloorPhase, kPurePower };

struct ExpSum {
  std::int64_t m = 0;
  double parameter = 0.0;  // theta or u
  std::complex<double> value;
  ExpSumKind kind = ExpSumKind::kFloorPhase;
};

// Exactly floor(m^c).
std::int64_t ps_floor(std::int64_t m, const PsExponent& c);
// m^c - floor(m^c) in [0, 1), zero exactly when m^c is an integer.
double frac_pow(std::int64_t m, const PsExponent& c);

// floor(m^c) for m = 1..count.
std::vector<std::int64_t> ps_floors(std::int64_t count, const PsExponent& c);

// (1/M) sum_{m<=M} e(theta * floor(m^c)).
ExpSum exp_sum_floor(std::int64_t m, double theta, const PsExponent& c);
ExpSum exp_sum_floor(const std::vector<std::int64_t>& floors, double theta);

// (1/M) sum_{m<=M} e(u * m^c).
ExpSum exp_sum_pow(std::int64_t m, double u, const PsExponent& c);
ExpSum exp_sum_pow(const PowerTable& table, double u);

// Unnormalized sum of e(u * m^c) over first <= m <= last.
std::complex<double> power_sum_range(const PowerTable& table, double u, std::int64_t first,
                                     std::int64_t last);

// F^(1/(2^(q+2)-2)) X^(1-(q+2)/(2^(q+2)-2)) + X/F with the constant set to 1.
double vdc_bound(double f, double x, int q);

struct DyadicBlock {
  int j = 0;
  double f = 0.0;  // |u| X^c
  double x = 0.0;  // 2^j
  double block_bound = 0.0;
  double empirical = 0.0;  // |sum_{m in [2^j, 2^(j+1)) cap [1, M]} e(u m^c)|
};

// One entry per dyadic block j = 0..floor(log2 M).
std::vector<DyadicBlock> dyadic_blocks(const PowerTable& table, double u);

// Sum of the block bounds; bounds |sum_{m<=M} e(u m^c)| up to the constant.
double dyadic_vdc_bound(std::int64_t m, double u, const PsExponent& c);

enum class UMode { kEmpirical, kBound };

// 1/K + sum_{k<=K} |E_{m<=M} e((k - xi/N) m^c)| / k, with the expectation
// replaced by dyadic_vdc_bound / M in bound mode.
double u_of_xi(std::int64_t xi, std::int64_t n, std::int64_t m, std::int64_t k_max, const PsExponent& c,
               UMode mode);
double u_of_xi(std::int64_t xi, std::int64_t n, const PowerTable& table, std::int64_t k_max, UMode mode);

// Smallest K at which the bound-mode tail sum reaches 1/K, i.e. where the
// two summands of U cross.
std::int64_t equalizing_k(std::int64_t xi, std::int64_t n, std::int64_t m, const PsExponent& c);

}  // namespace pspc
