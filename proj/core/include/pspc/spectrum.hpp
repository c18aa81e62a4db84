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
#include <span>
#include <vector>

#include "pspc/sieve.hpp"

namespace pspc {

/// Discrete Fourier transform on Z/NZ: coeffs[xi] = sum_n f(n) e(-xi n / N).
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<std::complex<double>> coeffs) : coeffs_(std::move(coeffs)) {}

  std::uint64_t size() const { return coeffs_.size(); }
  std::complex<double> operator[](std::uint64_t xi) const { return coeffs_[xi]; }
  std::span<const std::complex<double>> coeffs() const { return coeffs_; }

 private:
  std::vector<std::complex<double>> coeffs_;
};

enum class TransformMode {
  kFast,    // FFT, any N
  kDirect,  // O(N^2) reference sum, N <= kDirectTransformLimit
};

inline constexpr std::uint64_t kDirectTransformLimit = 4096;

// Lambda(1..N) placed on Z/NZ; Lambda(N) sits at residue 0.
std::vector<double> circular_lambda(const LambdaTable& table, std::uint64_t n);

Spectrum lambda_hat(const LambdaTable& table, std::uint64_t n, TransformMode mode = TransformMode::kFast);

// Relative Parseval residual |sum Lambda^2 - (1/N) sum |hat|^2| / sum Lambda^2
// (absolute when the weights are all zero).
double verify_parseval(const LambdaTable& table, const Spectrum& spectrum);

// Inverse transform; result[n - 1] is the recovered weight at n = 1..N.
std::vector<double> fourier_invert(const Spectrum& spectrum);

struct RationalApprox {
  std::int64_t a = 0;
  std::int64_t q = 1;
  double err = 0.0;  // |xi/N - a/q|
};

// Last continued-fraction convergent a/q of xi/N with q <= max_denominator.
// Dirichlet's guarantee |xi/N - a/q| <= 1/(q * max_denominator) holds.
RationalApprox dirichlet_approx(std::int64_t xi, std::int64_t n, std::int64_t max_denominator);

// (N / sqrt(q) + N^(4/5) + sqrt(qN)) log^4 N with the unknown constant set to 1.
double vinogradov_rhs(double n, double q);

struct BandPeak {
  std::uint64_t xi = 0;
  double value = 0.0;
};

// argmax / max of |coeffs[xi]| over lo <= xi <= hi; ties go to the smallest xi.
BandPeak band_sup(const Spectrum& spectrum, std::uint64_t lo, std::uint64_t hi);

}  // namespace pspc
