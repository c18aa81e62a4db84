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

#include "pspc/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include "fft.hpp"
#include "pspc/diophantine.hpp"
#include "pspc/errors.hpp"
#include "pspc/ps_sequence.hpp"
#include "pspc/summation.hpp"

namespace pspc {

namespace {

constexpr std::int64_t kAutocorrelationDefaultAbove = std::int64_t{1} << 14;

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

bool fits_below(std::int64_t m, std::int64_t n, const PsExponent& c) {
  if (m == 0) return true;
  const PowerValue v = precise_power(m, c);
  return v.floor < n || (v.floor == n && v.exact_integer);
}

// Evaluates fn(shift) for every shift on a fixed contiguous partition, so the
// per-shift results (and their ordered total) do not depend on `threads`.
template <class Fn>
std::vector<double> per_shift(const std::vector<std::int64_t>& shifts, unsigned threads, Fn fn) {
  std::vector<double> out(shifts.size());
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(shifts.size(), 1));
  auto run = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) out[i] = fn(shifts[i]);
  };
  if (workers == 1) {
    run(0, shifts.size());
    return out;
  }
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (shifts.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = std::min(shifts.size(), w * chunk);
      const std::size_t hi = std::min(shifts.size(), lo + chunk);
      pool.emplace_back(run, lo, hi);
    }
  }  // joined here, before `out` is returned
  return out;
}

double ordered_mean(const std::vector<double>& inner, std::int64_t n) {
  const double total = compensated_total(inner);
  return total / (static_cast<double>(n) * static_cast<double>(inner.size()));
}

void check_spectrum(const PsParams& params, const Spectrum& spectrum) {
  if (spectrum.size() != static_cast<std::uint64_t>(params.n)) {
    throw ArgumentError("spectrum length " + std::to_string(spectrum.size()) + " does not match N = " +
                        std::to_string(params.n));
  }
}

std::vector<double> power_spectrum(const Spectrum& spectrum) {
  std::vector<double> p(spectrum.size());
  for (std::uint64_t xi = 0; xi < spectrum.size(); ++xi) p[xi] = std::norm(spectrum[xi]);
  return p;
}

// Unnormalized sum_m e(-xi s_m / N) for xi = 0..last, through a twiddle table.
class ShiftPhases {
 public:
  ShiftPhases(const std::vector<std::int64_t>& shifts, std::int64_t n)
      : n_(static_cast<std::uint64_t>(n)), roots_(detail::unit_roots(n_)) {
    residues_.reserve(shifts.size());
    for (auto s : shifts) residues_.push_back(static_cast<std::uint64_t>(s) % n_);
  }

  std::complex<double> at(std::uint64_t xi) const {
    std::complex<double> acc{};
    for (auto r : residues_) acc += roots_[static_cast<std::size_t>((static_cast<unsigned __int128>(xi) * r) % n_)];
    return acc;
  }

 private:
  std::uint64_t n_;
  std::vector<std::complex<double>> roots_;
  std::vector<std::uint64_t> residues_;
};

}  // namespace

std::int64_t exploration_m(std::int64_t n, const PsExponent& c) {
  if (n < 1) throw ArgumentError("exploration M needs N >= 1");
  auto m = static_cast<std::int64_t>(std::floor(std::pow(static_cast<double>(n), 1.0 / c.value())));
  m = std::max<std::int64_t>(m, 0);
  while (fits_below(m + 1, n, c)) ++m;
  while (m > 0 && !fits_below(m, n, c)) --m;
  return m;
}

PsParams theorem_params(const PsExponent& c, double a, std::int64_t n, ParamMode mode,
                        std::optional<double> b_eff) {
  if (n < 16) throw ArgumentError("parameters need N >= 16");
  if (!(a >= 1.0) || !std::isfinite(a)) throw ArgumentError("parameters need A >= 1");
  if (!(c.value() > 1.0)) throw ArgumentError("parameters need c > 1");
  if (mode == ParamMode::kTheorem && (c.is_integer() || !(c.value() > 2.0))) {
    throw ArgumentError("theorem mode needs a non-integer c > 2");
  }
  if (b_eff && (!std::isfinite(*b_eff) || *b_eff < 0.0)) throw ArgumentError("b_eff must be finite and >= 0");

  PsParams p;
  p.c = c;
  p.a = a;
  p.n = n;
  p.mode = mode;
  const double log_n = std::log(static_cast<double>(n));
  p.b_exp = (a + 2.0) / c.value();
  p.k = (c.value() > 2.0 && !c.is_integer()) ? theorem_k(c) : 0;
  p.b = 4.0 * p.k * a + 2.0 * p.b_exp * c.value() + 4.0 * p.k;
  p.b_eff = b_eff.value_or(p.b);
  p.gamma = 1.0 / std::pow(log_n, a + 1.0);

  if (mode == ParamMode::kTheorem) {
    const double m_real = std::pow(static_cast<double>(n), 1.0 / c.value()) / std::pow(log_n, p.b_exp);
    p.m = static_cast<std::int64_t>(std::floor(m_real));
    if (p.m < 1) {
      p.warnings.push_back("M = N^(1/c) / log^B N is " + format_real(m_real) + " < 1; clamped to 1");
      p.m = 1;
    }
  } else {
    p.m = exploration_m(n, c);
  }

  const double cutoff_real = static_cast<double>(n) / std::pow(log_n, p.b_eff);
  if (cutoff_real < 1.0) {
    p.warnings.push_back("cutoff N / log^b N is " + format_real(cutoff_real) +
                         " < 1; sigma1 is empty and sigma2 covers every xi");
  }
  p.cutoff = std::min<std::int64_t>(static_cast<std::int64_t>(std::floor(cutoff_real)), n / 2);
  return p;
}

std::vector<std::int64_t> correlation_shifts(const PsParams& params) {
  if (params.m < 1) throw ArgumentError("correlation needs M >= 1");
  return ps_floors(params.m, params.c);
}

double direct_average(const PsParams& params, const LambdaTable& table, DirectPath path, unsigned threads) {
  const auto shifts = correlation_shifts(params);
  const auto n = static_cast<std::uint64_t>(params.n);
  const std::uint64_t required = n + static_cast<std::uint64_t>(shifts.back());
  if (table.limit() < required) {
    throw ArgumentError("direct average needs a Lambda table up to N + floor(M^c) = " + std::to_string(required));
  }

  if (path == DirectPath::kLiteral) {
    CompensatedSum acc;
    for (std::uint64_t i = 1; i <= n; ++i) {
      for (auto s : shifts) acc.add(table[i] * table[i + static_cast<std::uint64_t>(s)]);
    }
    return acc.value() / (static_cast<double>(n) * static_cast<double>(shifts.size()));
  }

  std::vector<std::uint64_t> support;
  for (std::uint64_t i = 1; i <= n; ++i) {
    if (table[i] != 0.0) support.push_back(i);
  }
  const auto inner = per_shift(shifts, threads, [&](std::int64_t s) {
    CompensatedSum acc;
    for (auto i : support) acc.add(table[i] * table[i + static_cast<std::uint64_t>(s)]);
    return acc.value();
  });
  return ordered_mean(inner, params.n);
}

double wrapped_average(const PsParams& params, const LambdaTable& table, unsigned threads) {
  const auto shifts = correlation_shifts(params);
  const auto n = static_cast<std::uint64_t>(params.n);
  if (table.limit() < n) {
    throw ArgumentError("wrapped average needs a Lambda table up to N = " + std::to_string(n));
  }
  const auto w = circular_lambda(table, n);
  std::vector<std::uint64_t> support;
  for (std::uint64_t r = 0; r < n; ++r) {
    if (w[r] != 0.0) support.push_back(r);
  }
  const auto inner = per_shift(shifts, threads, [&](std::int64_t s) {
    const std::uint64_t shift = static_cast<std::uint64_t>(s) % n;
    CompensatedSum acc;
    for (auto r : support) {
      std::uint64_t t = r + shift;
      if (t >= n) t -= n;
      acc.add(w[r] * w[t]);
    }
    return acc.value();
  });
  return ordered_mean(inner, params.n);
}

FourierAverage fourier_average(const PsParams& params, const Spectrum& spectrum, FourierPath path) {
  check_spectrum(params, spectrum);
  const auto shifts = correlation_shifts(params);
  const auto n = static_cast<std::uint64_t>(params.n);
  const double scale = 1.0 / (static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(shifts.size()));
  const auto power = power_spectrum(spectrum);

  FourierAverage out;
  out.path = path;
  if (path == FourierPath::kXiSum) {
    const ShiftPhases phases(shifts, params.n);
    ComplexCompensatedSum acc;
    for (std::uint64_t xi = 0; xi < n; ++xi) acc.add(power[xi] * phases.at(xi));
    const auto total = acc.value() * scale;
    out.value = total.real();
    out.imag = total.imag();
    return out;
  }

  // r(d) = sum_xi |hat|^2 e(xi d / N) = N sum_n w(n) w(n + d)
  const std::vector<std::complex<double>> spec(power.begin(), power.end());
  const auto r = detail::ifft_to_real(spec);
  CompensatedSum acc;
  for (auto s : shifts) acc.add(r[static_cast<std::uint64_t>(s) % n]);
  out.value = acc.value() * scale;
  out.imag = 0.0;
  return out;
}

FourierAverage fourier_average(const PsParams& params, const Spectrum& spectrum) {
  return fourier_average(params, spectrum,
                         params.n > kAutocorrelationDefaultAbove ? FourierPath::kAutocorrelation
                                                                 : FourierPath::kXiSum);
}

Decomposition decompose(const PsParams& params, const Spectrum& spectrum) {
  check_spectrum(params, spectrum);
  const auto shifts = correlation_shifts(params);
  const auto n = static_cast<std::uint64_t>(params.n);
  const double nd = static_cast<double>(n);
  const double scale = 1.0 / (nd * nd * static_cast<double>(shifts.size()));
  const ShiftPhases phases(shifts, params.n);
  const auto cutoff = static_cast<std::uint64_t>(std::max<std::int64_t>(params.cutoff, 0));

  Decomposition d;
  d.main_term = std::norm(spectrum[0]) / (nd * nd);
  CompensatedSum s1, s2, f1, f2;
  for (std::uint64_t xi = 1; 2 * xi <= n; ++xi) {
    const double term = std::norm(spectrum[xi]) * phases.at(xi).real() * scale;
    const double weight = (2 * xi == n) ? 1.0 : 2.0;
    if (xi <= cutoff) {
      s1.add(term);
      f1.add(weight * term);
    } else {
      s2.add(term);
      f2.add(weight * term);
    }
  }
  d.sigma1_one_sided = s1.value();
  d.sigma2_one_sided = s2.value();
  d.sigma1 = f1.value();
  d.sigma2 = f2.value();
  CompensatedSum total(d.main_term);
  total.add(d.sigma1);
  total.add(d.sigma2);
  d.reconstruction = total.value();
  return d;
}

CorrelationReport correlation_report(const PsParams& params, const LambdaTable& table, const Spectrum& spectrum,
                                     const CorrelationOptions& options) {
  CorrelationReport r;
  if (options.include_direct) r.direct = direct_average(params, table, DirectPath::kPerShift, options.threads);
  r.wrapped = wrapped_average(params, table, options.threads);
  const auto spectral = fourier_average(params, spectrum);
  r.spectral = spectral.value;
  r.spectral_imag = spectral.imag;
  if (options.both_fourier_paths) {
    const auto other = spectral.path == FourierPath::kXiSum ? FourierPath::kAutocorrelation : FourierPath::kXiSum;
    r.spectral_other_path = fourier_average(params, spectrum, other).value;
  }
  const auto d = decompose(params, spectrum);
  r.main_term = d.main_term;
  r.sigma1 = d.sigma1;
  r.sigma2 = d.sigma2;
  r.sigma1_one_sided = d.sigma1_one_sided;
  r.sigma2_one_sided = d.sigma2_one_sided;
  const double nd = static_cast<double>(params.n);
  const double log_n = std::log(nd);
  r.wrap_error_bound = std::pow(static_cast<double>(params.m), params.c.value()) * log_n * log_n / nd;
  r.identity_residual = std::abs(r.wrapped - r.spectral);
  r.reconstruction_residual = std::abs(d.reconstruction - r.spectral) / (1.0 + std::abs(r.spectral));
  return r;
}

}  // namespace pspc
