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
#include <string>
#include <vector>

#include "pspc/precise_power.hpp"
#include "pspc/rational.hpp"

namespace pspc {

enum class MeasureKind {
  kMu,   // complex weights e(-xi m^c / N) / M
  kMu1,  // (1 + cos) / (M (1 + c1))
  kMu2,  // (1 + sin) / (M (1 + c2))
  kMu3,  // 1 / M
};

/// Atomic measure on the circle R/Z with atoms at `points`.
struct CircleMeasure {
  MeasureKind kind = MeasureKind::kMu3;
  std::vector<double> points;                          // in [0, 1)
  std::vector<double> weights;                         // real kinds
  std::vector<std::complex<double>> complex_weights;   // kMu only
  double c1 = 0.0;
  double c2 = 0.0;

  bool is_probability() const { return kind != MeasureKind::kMu; }
  double total_mass() const;

  // Equal weights 1/n at the given points.
  static CircleMeasure uniform(std::vector<double> points);
};

struct MeasureSet {
  CircleMeasure mu;
  CircleMeasure mu1;
  CircleMeasure mu2;
  CircleMeasure mu3;
  double c1 = 0.0;  // mean of cos(2 pi xi m^c / N)
  double c2 = 0.0;  // mean of sin(2 pi xi m^c / N)
};

// Atoms at {m^c}, m = 1..M, with the cosine/sine tilts of frequency xi/N.
// Throws ArgumentError when 1 + c1 or 1 + c2 falls below 1e-6.
MeasureSet build_measures(std::int64_t m, const PsExponent& c, std::int64_t xi, std::int64_t n);
MeasureSet build_measures(const PowerTable& table, std::int64_t xi, std::int64_t n);

// sum_j w_j e(-k x_j)
std::complex<double> measure_fourier(const CircleMeasure& mu, std::int64_t k);

// sup over arcs A of |mu(A) - Leb(A)|, exact for atomic probability measures.
double arc_discrepancy(const CircleMeasure& mu);

// 10 (1/K + sum_{k<=K} |mu^(k)| / k)
double erdos_turan_rhs(const CircleMeasure& mu, std::int64_t k_max);

struct BoundViolation {
  std::string check;
  std::int64_t index = 0;  // k or cell number, -1 for whole-sum checks
  double lhs = 0.0;
  double rhs = 0.0;
};

inline constexpr double kChainSlack = 1e-9;

/// For k <= K: |mu1^(k)|, |mu2^(k)| <= 2(|E e((k - xi/N) m^c)| + |E e((k + xi/N) m^c)| + |mu3^(k)|).
struct CoefficientBoundReport {
  double min_slack = 0.0;  // smallest rhs - lhs seen
  std::vector<BoundViolation> violations;
};

CoefficientBoundReport check_coefficient_bounds(std::int64_t m, const PsExponent& c, std::int64_t xi,
                                                std::int64_t n, std::int64_t k_max);
CoefficientBoundReport check_coefficient_bounds(const PowerTable& table, const MeasureSet& measures,
                                                std::int64_t xi, std::int64_t n, std::int64_t k_max);

/// Partition of the circle into cells [j/L, (j+1)/L) and the chain of
/// inequalities that bounds |E e(-xi floor(m^c) / N)|:
///   lhs <= sum_P |mu(P)| + 4 pi (xi/N) gamma                    (partition)
///   |mu(P)| <= 5 sum_{i=1..3} |mu_i(P) - Leb(P)|                (per cell)
///   |mu(P)| <= 5 sum_i |mu_i(P) - Leb(P)| + (|c1| + |c2|) mu3(P) (per cell, corrected)
///   lhs <= (100/gamma)(1/K + sum_k (|mu1^|+|mu2^|+|mu3^|)/k) + 4 pi (xi/N) gamma
/// plus the coefficient bounds above and Erdos-Turan for mu1..mu3.
/// The plain per-cell bound fails when mu_i(P) is close to Leb(P) but mu(P)
/// is not small (xi = 0 is the extreme case); the corrected form always holds.
struct PartitionChainReport {
  double lhs = 0.0;
  double partition_sum = 0.0;
  double partition_rhs = 0.0;
  double chain_rhs = 0.0;
  double cell_min_slack = 0.0;
  double cell_min_slack_corrected = 0.0;
  double coefficient_min_slack = 0.0;
  double d_exact = 0.0;  // arc discrepancy of mu3
  double et_rhs = 0.0;   // Erdos-Turan bound of mu3 at K
  double c1 = 0.0;
  double c2 = 0.0;
  std::vector<BoundViolation> violations;
};

// gamma must be 1/L with integer L >= 2.
PartitionChainReport check_partition_chain(std::int64_t m, const PsExponent& c, std::int64_t xi,
                                           std::int64_t n, Rational gamma, std::int64_t k_max);

// Cell index floor(L {m^c}) with 50-digit re-evaluation near cell edges.
std::int64_t partition_cell(std::int64_t m, const PsExponent& c, const PowerValue& v, std::int64_t cells);

}  // namespace pspc
