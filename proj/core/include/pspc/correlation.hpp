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
#include <optional>
#include <string>
#include <vector>

#include "pspc/precise_power.hpp"
#include "pspc/sieve.hpp"
#include "pspc/spectrum.hpp"

namespace pspc {

enum class ParamMode {
  kTheorem,      // M = floor(N^(1/c) / log^B N)
  kExploration,  // M = largest integer with M^c <= N
};

struct PsParams {
  PsExponent c;
  double a = 1.0;
  double b_exp = 0.0;  // B = (A + 2) / c
  int k = 0;           // theorem_k(c), 0 when c <= 2
  double b = 0.0;      // 4kA + 2Bc + 4k
  double b_eff = 0.0;  // exponent actually used for the cutoff
  std::int64_t n = 0;
  std::int64_t m = 0;
  double gamma = 0.0;  // 1 / log^(A+1) N
  std::int64_t cutoff = 0;  // floor(N / log^b_eff N), clamped to [0, N/2]
  ParamMode mode = ParamMode::kExploration;
  std::vector<std::string> warnings;
};

// b_eff defaults to the derived b.
PsParams theorem_params(const PsExponent& c, double a, std::int64_t n, ParamMode mode,
                        std::optional<double> b_eff = std::nullopt);

// Largest M >= 0 with M^c <= N, decided exactly.
std::int64_t exploration_m(std::int64_t n, const PsExponent& c);

// floor(m^c) for m = 1..M.
std::vector<std::int64_t> correlation_shifts(const PsParams& params);

enum class DirectPath {
  kPerShift,  // inner sum over n per shift, sparse in Lambda(n)
  kLiteral,   // plain double loop over n then m
};

// (1/M) sum_m (1/N) sum_{n<=N} Lambda(n) Lambda(n + floor(m^c)).
// The table must reach N + floor(M^c).
double direct_average(const PsParams& params, const LambdaTable& table,
                      DirectPath path = DirectPath::kPerShift, unsigned threads = 1);

// Same average with n and n + floor(m^c) reduced into 1..N modulo N.
double wrapped_average(const PsParams& params, const LambdaTable& table, unsigned threads = 1);

enum class FourierPath {
  kXiSum,            // sum over xi of |hat|^2 E_m e(-xi floor(m^c) / N)
  kAutocorrelation,  // inverse transform of |hat|^2, sampled at the shifts
};

struct FourierAverage {
  double value = 0.0;
  double imag = 0.0;
  FourierPath path = FourierPath::kAutocorrelation;
};

// (1/N^2) sum_xi |hat(xi)|^2 E_m e(-xi floor(m^c) / N).
FourierAverage fourier_average(const PsParams& params, const Spectrum& spectrum, FourierPath path);
// Autocorrelation path above N = 2^14, xi-sum below.
FourierAverage fourier_average(const PsParams& params, const Spectrum& spectrum);

/// main + sigma1 + sigma2 split of the xi-sum. Terms at xi and N - xi are
/// conjugate, so each one-sided sum over 1 <= xi < N/2 is doubled; xi = N/2
/// (even N) is its own mirror and counted once.
struct Decomposition {
  double main_term = 0.0;          // (hat(0) / N)^2
  double sigma1_one_sided = 0.0;   // Re sum_{1 <= xi <= cutoff}
  double sigma2_one_sided = 0.0;   // Re sum_{cutoff < xi <= N/2}
  double sigma1 = 0.0;             // folded
  double sigma2 = 0.0;             // folded
  double reconstruction = 0.0;     // main + sigma1 + sigma2
};

Decomposition decompose(const PsParams& params, const Spectrum& spectrum);

struct CorrelationReport {
  std::optional<double> direct;
  double wrapped = 0.0;
  double spectral = 0.0;
  double spectral_imag = 0.0;
  std::optional<double> spectral_other_path;  // the non-default Fourier path, when requested
  double main_term = 0.0;
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  double sigma1_one_sided = 0.0;
  double sigma2_one_sided = 0.0;
  double wrap_error_bound = 0.0;  // M^c log^2 N / N
  double identity_residual = 0.0;        // |wrapped - spectral|
  double reconstruction_residual = 0.0;  // |main + sigma1 + sigma2 - spectral| / (1 + |spectral|)
};

struct CorrelationOptions {
  bool include_direct = true;
  bool both_fourier_paths = false;
  unsigned threads = 1;
};

// `table` must reach N + floor(M^c) when include_direct is set, N otherwise.
CorrelationReport correlation_report(const PsParams& params, const LambdaTable& table, const Spectrum& spectrum,
                                     const CorrelationOptions& options = {});

}  // namespace pspc
