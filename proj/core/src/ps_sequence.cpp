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

#include "pspc/ps_sequence.hpp"

#include <cmath>
#include <string>

#include "pspc/errors.hpp"
#include "pspc/summation.hpp"

namespace pspc {

std::int64_t ps_floor(std::int64_t m, const PsExponent& c) {
  if (c.rational_form()) return ps_floor_exact_root(m, c);
  return ps_floor_float(m, c);
}

double frac_pow(std::int64_t m, const PsExponent& c) { return precise_power(m, c).frac; }

std::vector<std::int64_t> ps_floors(std::int64_t count, const PsExponent& c) {
  std::vector<std::int64_t> out;
  if (count < 1) return out;
  check_table_size(count, c);
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t m = 1; m <= count; ++m) out.push_back(ps_floor(m, c));
  return out;
}

ExpSum exp_sum_floor(const std::vector<std::int64_t>& floors, double theta) {
  if (floors.empty()) throw ArgumentError("exp_sum_floor needs M >= 1");
  ComplexCompensatedSum acc;
  for (const auto f : floors) acc.add(unit_phase(frac_of_product(theta, f)));
  const auto m = static_cast<std::int64_t>(floors.size());
  return {m, theta, acc.value() / static_cast<double>(m), ExpSumKind::kFloorPhase};
}

ExpSum exp_sum_floor(std::int64_t m, double theta, const PsExponent& c) {
  if (m < 1) throw ArgumentError("exp_sum_floor needs M >= 1");
  return exp_sum_floor(ps_floors(m, c), theta);
}

std::complex<double> power_sum_range(const PowerTable& table, double u, std::int64_t first,
                                     std::int64_t last) {
  ComplexCompensatedSum acc;
  for (std::int64_t m = first; m <= last; ++m) acc.add(unit_phase(power_phase(u, table[m])));
  return acc.value();
}

ExpSum exp_sum_pow(const PowerTable& table, double u) {
  const auto m = table.count();
  const auto total = power_sum_range(table, u, 1, m);
  return {m, u, total / static_cast<double>(m), ExpSumKind::kPurePower};
}

ExpSum exp_sum_pow(std::int64_t m, double u, const PsExponent& c) {
  if (m < 1) throw ArgumentError("exp_sum_pow needs M >= 1");
  return exp_sum_pow(PowerTable(m, c), u);
}

double vdc_bound(double f, double x, int q) {
  if (!(f > 0.0) || !(x >= 1.0) || q < 0) throw ArgumentError("vdc_bound requires F > 0, X >= 1, q >= 0");
  const double denom = std::ldexp(1.0, q + 2) - 2.0;
  return std::pow(f, 1.0 / denom) * std::pow(x, 1.0 - (q + 2) / denom) + x / f;
}

namespace {

int floor_log2(std::int64_t m) {
  int j = 0;
  while ((std::int64_t{2} << j) <= m) ++j;
  return j;
}

}  // namespace

std::vector<DyadicBlock> dyadic_blocks(const PowerTable& table, double u) {
  if (u == 0.0) throw ArgumentError("van der Corput blocks need u != 0");
  const auto m = table.count();
  const int q = table.exponent().vdc_order();
  const double c = table.exponent().value();
  std::vector<DyadicBlock> blocks;
  for (int j = 0; j <= floor_log2(m); ++j) {
    DyadicBlock b;
    b.j = j;
    b.x = std::ldexp(1.0, j);
    b.f = std::abs(u) * std::exp2(j * c);
    b.block_bound = vdc_bound(b.f, b.x, q);
    const std::int64_t first = std::int64_t{1} << j;
    const std::int64_t last = std::min(m, (std::int64_t{2} << j) - 1);
    b.empirical = std::abs(power_sum_range(table, u, first, last));
    blocks.push_back(b);
  }
  return blocks;
}

double dyadic_vdc_bound(std::int64_t m, double u, const PsExponent& c) {
  if (m < 2) throw ArgumentError("dyadic_vdc_bound needs M >= 2");
  if (u == 0.0) throw ArgumentError("dyadic_vdc_bound is meaningless at u = 0");
  const int q = c.vdc_order();
  CompensatedSum acc;
  for (int j = 0; j <= floor_log2(m); ++j) {
    acc.add(vdc_bound(std::abs(u) * std::exp2(j * c.value()), std::ldexp(1.0, j), q));
  }
  return acc.value();
}

namespace {

double shifted_frequency(std::int64_t k, std::int64_t xi, std::int64_t n) {
  return static_cast<double>(k) - static_cast<double>(xi) / static_cast<double>(n);
}

}  // namespace

double u_of_xi(std::int64_t xi, std::int64_t n, const PowerTable& table, std::int64_t k_max, UMode mode) {
  if (k_max < 1) throw ArgumentError("U(xi) needs K >= 1");
  if (n < 1) throw ArgumentError("U(xi) needs N >= 1");
  CompensatedSum acc(1.0 / static_cast<double>(k_max));
  const auto m = table.count();
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const double u = shifted_frequency(k, xi, n);
    const double term = mode == UMode::kEmpirical
                            ? std::abs(exp_sum_pow(table, u).value)
                            : dyadic_vdc_bound(m, u, table.exponent()) / static_cast<double>(m);
    acc.add(term / static_cast<double>(k));
  }
  return acc.value();
}

double u_of_xi(std::int64_t xi, std::int64_t n, std::int64_t m, std::int64_t k_max, const PsExponent& c,
               UMode mode) {
  if (mode == UMode::kBound) {
    // Bound mode needs no power table.
    if (k_max < 1) throw ArgumentError("U(xi) needs K >= 1");
    CompensatedSum acc(1.0 / static_cast<double>(k_max));
    for (std::int64_t k = 1; k <= k_max; ++k) {
      acc.add(dyadic_vdc_bound(m, shifted_frequency(k, xi, n), c) / static_cast<double>(m) /
              static_cast<double>(k));
    }
    return acc.value();
  }
  return u_of_xi(xi, n, PowerTable(m, c), k_max, mode);
}

std::int64_t equalizing_k(std::int64_t xi, std::int64_t n, std::int64_t m, const PsExponent& c) {
  constexpr std::int64_t kCap = 1'000'000;
  CompensatedSum tail;
  for (std::int64_t k = 1; k <= kCap; ++k) {
    tail.add(dyadic_vdc_bound(m, shifted_frequency(k, xi, n), c) / static_cast<double>(m) /
             static_cast<double>(k));
    if (tail.value() >= 1.0 / static_cast<double>(k)) return k;
  }
  return kCap;
}

}  // namespace pspc
