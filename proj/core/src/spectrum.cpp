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

#include "pspc/spectrum.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "fft.hpp"
#include "pspc/errors.hpp"
#include "pspc/summation.hpp"

namespace pspc {

std::vector<double> circular_lambda(const LambdaTable& table, std::uint64_t n) {
  if (n > table.limit()) {
    throw ArgumentError("transform length " + std::to_string(n) + " exceeds table limit " +
                        std::to_string(table.limit()));
  }
  std::vector<double> x(n);
  for (std::uint64_t k = 1; k <= n; ++k) x[k % n] = table[k];
  return x;
}

Spectrum lambda_hat(const LambdaTable& table, std::uint64_t n, TransformMode mode) {
  if (n < 2) throw ArgumentError("transform length must be at least 2");
  const auto x = circular_lambda(table, n);
  if (mode == TransformMode::kFast) return Spectrum(detail::fft_real(x));

  if (n > kDirectTransformLimit) {
    throw ArgumentError("direct transform limited to N <= " + std::to_string(kDirectTransformLimit));
  }
  std::vector<std::complex<double>> xc(x.begin(), x.end());
  auto coeffs = detail::dft_direct(xc, detail::FftDirection::kForward);
  return Spectrum(std::move(coeffs));
}

double verify_parseval(const LambdaTable& table, const Spectrum& spectrum) {
  const std::uint64_t n = spectrum.size();
  if (n == 0 || n > table.limit()) throw ArgumentError("spectrum length does not match the table");
  CompensatedSum time_side;
  for (std::uint64_t k = 1; k <= n; ++k) time_side.add(table[k] * table[k]);
  CompensatedSum freq_side;
  for (const auto& c : spectrum.coeffs()) freq_side.add(std::norm(c));
  const double lhs = time_side.value();
  const double rhs = freq_side.value() / static_cast<double>(n);
  const double diff = std::abs(lhs - rhs);
  return lhs > 0.0 ? diff / lhs : diff;
}

std::vector<double> fourier_invert(const Spectrum& spectrum) {
  const std::uint64_t n = spectrum.size();
  if (n == 0) return {};
  const auto inv = detail::fft(spectrum.coeffs(), detail::FftDirection::kBackward);
  std::vector<double> out(n);
  for (std::uint64_t k = 1; k <= n; ++k) out[k - 1] = inv[k % n].real() / static_cast<double>(n);
  return out;
}

RationalApprox dirichlet_approx(std::int64_t xi, std::int64_t n, std::int64_t max_denominator) {
  if (n < 1 || xi < 0 || xi >= n) throw ArgumentError("dirichlet_approx requires 0 <= xi < N");
  if (max_denominator < 1 || max_denominator > n) {
    throw ArgumentError("dirichlet_approx requires 1 <= Q <= N");
  }
  // Convergents h/k of xi/n from the Euclidean algorithm; h_{-1}/k_{-1} = 1/0.
  __int128 h_prev2 = 0, h_prev = 1, k_prev2 = 1, k_prev = 0;
  std::int64_t num = xi, den = n;
  std::int64_t best_p = 0, best_q = 1;
  while (den != 0) {
    const std::int64_t a = num / den;
    const std::int64_t rem = num % den;
    const __int128 h = a * h_prev + h_prev2;
    const __int128 k = a * k_prev + k_prev2;
    if (k > max_denominator) break;
    best_p = static_cast<std::int64_t>(h);
    best_q = static_cast<std::int64_t>(k);
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    num = den;
    den = rem;
  }
  const __int128 diff = static_cast<__int128>(xi) * best_q - static_cast<__int128>(best_p) * n;
  const double err = static_cast<double>(diff < 0 ? -diff : diff) /
                     (static_cast<double>(n) * static_cast<double>(best_q));
  return {best_p, best_q, err};
}

double vinogradov_rhs(double n, double q) {
  if (!(q >= 1.0) || !(n >= q)) throw ArgumentError("vinogradov_rhs requires 1 <= q <= N");
  const double log4 = std::pow(std::log(n), 4);
  return (n / std::sqrt(q) + std::pow(n, 0.8) + std::sqrt(q * n)) * log4;
}

BandPeak band_sup(const Spectrum& spectrum, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t n = spectrum.size();
  if (lo < 1 || hi < lo || hi + 1 > n) {
    throw ArgumentError("band_sup requires 1 <= lo <= hi <= N - 1");
  }
  BandPeak best{lo, std::abs(spectrum[lo])};
  for (std::uint64_t xi = lo + 1; xi <= hi; ++xi) {
    const double v = std::abs(spectrum[xi]);
    if (v > best.value) best = {xi, v};
  }
  return best;
}

}  // namespace pspc
