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

#include "pspc/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "pspc/errors.hpp"
#include "pspc/ps_sequence.hpp"
#include "pspc/summation.hpp"

namespace pspc {

double CircleMeasure::total_mass() const {
  if (kind == MeasureKind::kMu) return std::abs(std::accumulate(complex_weights.begin(), complex_weights.end(),
                                                                std::complex<double>{}));
  return compensated_total(weights);
}

CircleMeasure CircleMeasure::uniform(std::vector<double> points) {
  if (points.empty()) throw ArgumentError("uniform measure needs at least one atom");
  CircleMeasure mu;
  mu.kind = MeasureKind::kMu3;
  mu.weights.assign(points.size(), 1.0 / static_cast<double>(points.size()));
  mu.points = std::move(points);
  return mu;
}

namespace {

constexpr double kDegeneracy = 1e-6;

double frac01(double x) { return x - std::floor(x); }

}  // namespace

MeasureSet build_measures(const PowerTable& table, std::int64_t xi, std::int64_t n) {
  if (n < 1 || xi < 0 || xi >= n) throw ArgumentError("measures need 0 <= xi < N");
  const auto m = table.count();
  const double inv_m = 1.0 / static_cast<double>(m);

  std::vector<double> points(static_cast<std::size_t>(m));
  std::vector<double> cosines(points.size()), sines(points.size());
  std::vector<std::complex<double>> tilts(points.size());
  CompensatedSum sum_cos, sum_sin;
  for (std::int64_t i = 1; i <= m; ++i) {
    const auto& v = table[i];
    const auto idx = static_cast<std::size_t>(i - 1);
    points[idx] = v.frac;
    const auto z = unit_phase(rational_power_phase(xi, n, v));  // e(xi m^c / N)
    cosines[idx] = z.real();
    sines[idx] = z.imag();
    tilts[idx] = std::conj(z) * inv_m;
    sum_cos.add(z.real());
    sum_sin.add(z.imag());
  }

  MeasureSet set;
  set.c1 = sum_cos.value() * inv_m;
  set.c2 = sum_sin.value() * inv_m;
  if (1.0 + set.c1 < kDegeneracy || 1.0 + set.c2 < kDegeneracy) {
    throw ArgumentError("tilted measure is degenerate: 1 + c1 or 1 + c2 below 1e-6");
  }

  set.mu.kind = MeasureKind::kMu;
  set.mu.points = points;
  set.mu.complex_weights = std::move(tilts);

  const double norm1 = 1.0 / (static_cast<double>(m) * (1.0 + set.c1));
  const double norm2 = 1.0 / (static_cast<double>(m) * (1.0 + set.c2));
  set.mu1.kind = MeasureKind::kMu1;
  set.mu2.kind = MeasureKind::kMu2;
  set.mu1.points = points;
  set.mu2.points = points;
  set.mu1.weights.resize(points.size());
  set.mu2.weights.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    set.mu1.weights[i] = (1.0 + cosines[i]) * norm1;
    set.mu2.weights[i] = (1.0 + sines[i]) * norm2;
  }
  set.mu3 = CircleMeasure::uniform(std::move(points));
  for (auto* mu : {&set.mu, &set.mu1, &set.mu2, &set.mu3}) {
    mu->c1 = set.c1;
    mu->c2 = set.c2;
  }
  return set;
}

MeasureSet build_measures(std::int64_t m, const PsExponent& c, std::int64_t xi, std::int64_t n) {
  if (m < 1) throw ArgumentError("measures need M >= 1");
  return build_measures(PowerTable(m, c), xi, n);
}

std::complex<double> measure_fourier(const CircleMeasure& mu, std::int64_t k) {
  if (k < 1) throw ArgumentError("measure Fourier coefficients are taken at k >= 1");
  ComplexCompensatedSum acc;
  const double kd = static_cast<double>(k);
  for (std::size_t i = 0; i < mu.points.size(); ++i) {
    const auto e = unit_phase(-frac01(kd * mu.points[i]));
    if (mu.kind == MeasureKind::kMu) {
      acc.add(mu.complex_weights[i] * e);
    } else {
      acc.add(mu.weights[i] * e);
    }
  }
  return acc.value();
}

double arc_discrepancy(const CircleMeasure& mu) {
  if (!mu.is_probability()) throw ArgumentError("arc discrepancy needs a probability measure");
  if (mu.points.empty()) throw ArgumentError("arc discrepancy needs at least one atom");
  std::vector<std::size_t> order(mu.points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return mu.points[a] < mu.points[b] || (mu.points[a] == mu.points[b] && a < b);
  });

  // G(t) = mu([0, t]) - t. An arc (s, t] has mu - Leb = G(t) - G(s); the
  // complementary arc gives the negative, so the sup over arcs (open, closed
  // or half-open, by one-sided limits at atoms) is max G - min G over the
  // values G(x-) and G(x) at every atom, together with G(0-) = 0.
  double hi = 0.0, lo = 0.0;
  CompensatedSum mass;
  for (std::size_t i = 0; i < order.size();) {
    const double x = mu.points[order[i]];
    const double before = mass.value() - x;
    std::size_t j = i;
    while (j < order.size() && mu.points[order[j]] == x) {
      mass.add(mu.weights[order[j]]);
      ++j;
    }
    const double after = mass.value() - x;
    hi = std::max({hi, before, after});
    lo = std::min({lo, before, after});
    i = j;
  }
  return hi - lo;
}

double erdos_turan_rhs(const CircleMeasure& mu, std::int64_t k_max) {
  if (k_max < 1) throw ArgumentError("Erdos-Turan bound needs K >= 1");
  CompensatedSum acc(1.0 / static_cast<double>(k_max));
  for (std::int64_t k = 1; k <= k_max; ++k) {
    acc.add(std::abs(measure_fourier(mu, k)) / static_cast<double>(k));
  }
  return 10.0 * acc.value();
}

namespace {

// Phase of (k + sign * xi/N) m^c, with k m^c reduced through the exact floor.
double shifted_phase(std::int64_t k, int sign, std::int64_t xi, std::int64_t n, const PowerValue& v) {
  const double base = frac01(static_cast<double>(k) * v.frac);
  return frac01(base + sign * rational_power_phase(xi, n, v));
}

double shifted_mean_abs(const PowerTable& table, std::int64_t k, int sign, std::int64_t xi, std::int64_t n) {
  ComplexCompensatedSum acc;
  for (const auto& v : table.values()) acc.add(unit_phase(shifted_phase(k, sign, xi, n, v)));
  return std::abs(acc.value()) / static_cast<double>(table.count());
}

void check_le(std::vector<BoundViolation>& out, const char* name, std::int64_t index, double lhs, double rhs) {
  if (lhs > rhs + kChainSlack) out.push_back({name, index, lhs, rhs});
}

}  // namespace

CoefficientBoundReport check_coefficient_bounds(const PowerTable& table, const MeasureSet& measures,
                                                std::int64_t xi, std::int64_t n, std::int64_t k_max) {
  if (k_max < 1) throw ArgumentError("coefficient bounds need K >= 1");
  CoefficientBoundReport report;
  report.min_slack = std::numeric_limits<double>::infinity();
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const double minus = shifted_mean_abs(table, k, -1, xi, n);
    const double plus = shifted_mean_abs(table, k, +1, xi, n);
    const double mu3 = std::abs(measure_fourier(measures.mu3, k));
    const double rhs = 2.0 * (minus + plus + mu3);
    const double lhs1 = std::abs(measure_fourier(measures.mu1, k));
    const double lhs2 = std::abs(measure_fourier(measures.mu2, k));
    report.min_slack = std::min({report.min_slack, rhs - lhs1, rhs - lhs2});
    check_le(report.violations, "coefficient-bound-mu1", k, lhs1, rhs);
    check_le(report.violations, "coefficient-bound-mu2", k, lhs2, rhs);
  }
  return report;
}

CoefficientBoundReport check_coefficient_bounds(std::int64_t m, const PsExponent& c, std::int64_t xi,
                                                std::int64_t n, std::int64_t k_max) {
  const PowerTable table(m, c);
  return check_coefficient_bounds(table, build_measures(table, xi, n), xi, n, k_max);
}

std::int64_t partition_cell(std::int64_t m, const PsExponent& c, const PowerValue& v, std::int64_t cells) {
  if (v.exact_integer) return 0;
  const double x = v.frac * static_cast<double>(cells);
  if (std::abs(x - std::nearbyint(x)) >= 1e-9) {
    return std::clamp<std::int64_t>(static_cast<std::int64_t>(std::floor(x)), 0, cells - 1);
  }
  const HighFloat h = high_precision_power(m, c);
  HighFloat scaled = (h - boost::multiprecision::floor(h)) * cells;
  const HighFloat nearest = boost::multiprecision::round(scaled);
  if (boost::multiprecision::abs(scaled - nearest) < HighFloat("1e-40")) scaled = nearest;
  const auto cell = boost::multiprecision::floor(scaled).convert_to<std::int64_t>();
  return std::clamp<std::int64_t>(cell, 0, cells - 1);
}

PartitionChainReport check_partition_chain(std::int64_t m, const PsExponent& c, std::int64_t xi,
                                           std::int64_t n, Rational gamma, std::int64_t k_max) {
  if (gamma.num != 1 || gamma.den < 2) throw ArgumentError("gamma must be 1/L with integer L >= 2");
  if (k_max < 1) throw ArgumentError("partition chain needs K >= 1");
  const std::int64_t cells = gamma.den;
  const double g = 1.0 / static_cast<double>(cells);
  const PowerTable table(m, c);
  const MeasureSet measures = build_measures(table, xi, n);
  const double inv_m = 1.0 / static_cast<double>(m);
  const double ratio = static_cast<double>(xi) / static_cast<double>(n);
  const double smoothing = 4.0 * std::numbers::pi * ratio * g;

  PartitionChainReport r;
  r.c1 = measures.c1;
  r.c2 = measures.c2;

  // |E e(-xi floor(m^c) / N)| with exact residues.
  {
    ComplexCompensatedSum acc;
    for (const auto& v : table.values()) {
      __int128 res = (static_cast<__int128>(xi) * v.floor) % n;
      acc.add(unit_phase(-static_cast<double>(res) / static_cast<double>(n)));
    }
    r.lhs = std::abs(acc.value()) * inv_m;
  }

  std::vector<ComplexCompensatedSum> cell_mu(static_cast<std::size_t>(cells));
  std::vector<CompensatedSum> cell_mu1(cell_mu.size()), cell_mu2(cell_mu.size()), cell_mu3(cell_mu.size());
  for (std::int64_t i = 1; i <= m; ++i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    const auto cell = static_cast<std::size_t>(partition_cell(i, c, table[i], cells));
    cell_mu[cell].add(measures.mu.complex_weights[idx]);
    cell_mu1[cell].add(measures.mu1.weights[idx]);
    cell_mu2[cell].add(measures.mu2.weights[idx]);
    cell_mu3[cell].add(measures.mu3.weights[idx]);
  }

  CompensatedSum partition;
  r.cell_min_slack = std::numeric_limits<double>::infinity();
  r.cell_min_slack_corrected = r.cell_min_slack;
  for (std::size_t j = 0; j < cell_mu.size(); ++j) {
    const double mu_p = std::abs(cell_mu[j].value());
    partition.add(mu_p);
    const double cell_rhs = 5.0 * (std::abs(cell_mu1[j].value() - g) + std::abs(cell_mu2[j].value() - g) +
                                   std::abs(cell_mu3[j].value() - g));
    r.cell_min_slack = std::min(r.cell_min_slack, cell_rhs - mu_p);
    check_le(r.violations, "cell-bound", static_cast<std::int64_t>(j), mu_p, cell_rhs);
    // mu = (1 + c1) mu1 - mu3 - i((1 + c2) mu2 - mu3) leaves (c1 + i c2) mu3 over.
    const double corrected = cell_rhs + (std::abs(r.c1) + std::abs(r.c2)) * cell_mu3[j].value();
    r.cell_min_slack_corrected = std::min(r.cell_min_slack_corrected, corrected - mu_p);
    check_le(r.violations, "cell-bound-corrected", static_cast<std::int64_t>(j), mu_p, corrected);
  }
  r.partition_sum = partition.value();
  r.partition_rhs = r.partition_sum + smoothing;
  check_le(r.violations, "partition-bound", -1, r.lhs, r.partition_rhs);

  CompensatedSum coeffs(1.0 / static_cast<double>(k_max));
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const double s = std::abs(measure_fourier(measures.mu1, k)) + std::abs(measure_fourier(measures.mu2, k)) +
                     std::abs(measure_fourier(measures.mu3, k));
    coeffs.add(s / static_cast<double>(k));
  }
  r.chain_rhs = 100.0 / g * coeffs.value() + smoothing;
  check_le(r.violations, "erdos-turan-chain", -1, r.lhs, r.chain_rhs);

  const auto coeff = check_coefficient_bounds(table, measures, xi, n, k_max);
  r.coefficient_min_slack = coeff.min_slack;
  r.violations.insert(r.violations.end(), coeff.violations.begin(), coeff.violations.end());

  const char* names[] = {"erdos-turan-mu1", "erdos-turan-mu2", "erdos-turan-mu3"};
  const CircleMeasure* probs[] = {&measures.mu1, &measures.mu2, &measures.mu3};
  for (int i = 0; i < 3; ++i) {
    const double d = arc_discrepancy(*probs[i]);
    const double et = erdos_turan_rhs(*probs[i], k_max);
    if (i == 2) {
      r.d_exact = d;
      r.et_rhs = et;
    }
    check_le(r.violations, names[i], -1, d, et);
  }
  return r;
}

}  // namespace pspc
