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

#include "pspc_cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <utility>

#include "pspc/binary_cache.hpp"
#include "pspc/correlation.hpp"
#include "pspc/diophantine.hpp"
#include "pspc/discrepancy.hpp"
#include "pspc/ps_sequence.hpp"
#include "pspc/sieve.hpp"
#include "pspc/spectrum.hpp"

namespace pspc::cli {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

class Context {
 public:
  explicit Context(const VerifyOptions& options) : options_(options) {}

  bool full() const { return options_.profile == Profile::kFull; }

  LambdaTable table(std::uint64_t limit) const {
    SieveOptions opts;
    opts.threads = std::max(1u, options_.threads);
    return cached_lambda_table(options_.cache_dir, limit, opts);
  }

  Spectrum spectrum(const LambdaTable& table, std::uint64_t n) const {
    return cached_spectrum(options_.cache_dir, table, n);
  }

  unsigned threads() const { return std::max(1u, options_.threads); }

 private:
  VerifyOptions options_;
};

Outcome spectral_identity(const Context& ctx) {
  Outcome out;
  double worst = 0.0;
  for (std::int64_t n : {64, 101, 1024, 4097}) {
    const auto table = ctx.table(static_cast<std::uint64_t>(n));
    const auto spec = ctx.spectrum(table, static_cast<std::uint64_t>(n));
    for (const char* c : {"2.1", "2.5"}) {
      const auto params = theorem_params(PsExponent::parse(c), 1.0, n, ParamMode::kExploration, 3.0);
      const double wrapped = wrapped_average(params, table, ctx.threads());
      for (auto path : {FourierPath::kXiSum, FourierPath::kAutocorrelation}) {
        const auto f = fourier_average(params, spec, path);
        const double gap = std::abs(wrapped - f.value) / (1.0 + std::abs(f.value));
        worst = std::max(worst, gap);
        if (gap > 1e-9 || std::abs(f.imag) > 1e-9) out.passed = false;
      }
    }
  }
  out.detail = "max |wrapped - fourier| / (1 + |value|) = " + fmt(worst);
  return out;
}

Outcome parseval(const Context& ctx) {
  Outcome out;
  std::vector<std::uint64_t> sizes = {101, std::uint64_t{1} << 16};
  if (ctx.full()) sizes.push_back(std::uint64_t{1} << 20);
  std::ostringstream detail;
  for (auto n : sizes) {
    const auto table = ctx.table(n);
    const double r = verify_parseval(table, ctx.spectrum(table, n));
    if (!(r <= 1e-9)) out.passed = false;
    detail << (detail.tellp() > 0 ? "; " : "") << "N=" << n << " residual " << fmt(r);
  }
  out.detail = detail.str();
  return out;
}

Outcome pnt_sanity(const Context& ctx) {
  const std::uint64_t x = 10'000'000;
  const double ratio = chebyshev_psi(ctx.table(x), static_cast<double>(x)) / static_cast<double>(x);
  return {std::abs(ratio - 1.0) <= 0.01, "psi(1e7)/1e7 = " + fmt(ratio)};
}

double spectral_value(const Context& ctx, std::int64_t n) {
  const auto params = theorem_params(PsExponent::parse("2.5"), 1.0, n, ParamMode::kExploration, 3.0);
  const auto table = ctx.table(static_cast<std::uint64_t>(n));
  return fourier_average(params, ctx.spectrum(table, static_cast<std::uint64_t>(n)), FourierPath::kAutocorrelation)
      .value;
}

Outcome main_trend(const Context& ctx) {
  std::vector<std::int64_t> sizes = {100'000, 1'000'000};
  if (ctx.full()) sizes.push_back(10'000'000);
  std::vector<double> values;
  std::ostringstream detail;
  for (auto n : sizes) {
    values.push_back(spectral_value(ctx, n));
    detail << (detail.tellp() > 0 ? "; " : "") << "N=" << n << " value " << fmt(values.back());
  }
  const double last = std::abs(values.back() - 1.0);
  const double first = std::abs(values.front() - 1.0);
  return {last <= 0.25 && last <= first + 0.10, detail.str()};
}

Outcome decomposition(const Context& ctx) {
  Outcome out;
  const std::int64_t n = ctx.full() ? (std::int64_t{1} << 20) : (std::int64_t{1} << 16);
  const auto table = ctx.table(static_cast<std::uint64_t>(n));
  const auto spec = ctx.spectrum(table, static_cast<std::uint64_t>(n));
  double worst = 0.0, main = 0.0;
  for (double b_eff : {2.0, 3.0, 5.0}) {
    const auto params = theorem_params(PsExponent::parse("2.5"), 1.0, n, ParamMode::kExploration, b_eff);
    const double spectral = fourier_average(params, spec, FourierPath::kAutocorrelation).value;
    const auto d = decompose(params, spec);
    const double gap = std::abs(d.reconstruction - spectral) / (1.0 + std::abs(spectral));
    worst = std::max(worst, gap);
    main = d.main_term;
    if (gap > 1e-9) out.passed = false;
  }
  if (std::abs(main - 1.0) > 0.02) out.passed = false;
  out.detail = "N=" + std::to_string(n) + " max reconstruction gap " + fmt(worst) + ", main_term " + fmt(main);
  return out;
}

Outcome diophantine(const Context& ctx) {
  Outcome out;
  std::size_t mismatches = 0, cases = 0;
  for (const char* c : {"2.1", "2.5"}) {
    const auto e = PsExponent::parse(c);
    for (int k = 1; k <= 2; ++k) {
      for (std::int64_t m = 1; m <= 12; ++m) {
        const auto a = mitm_count(m, k, e);
        const auto b = brute_force_count(m, k, e);
        ++cases;
        if (a.g_equation != b.g_equation || a.g_inequality != b.g_inequality) ++mismatches;
      }
    }
  }
  std::vector<std::pair<double, double>> points;
  std::vector<std::int64_t> ms = {16, 32, 64};
  if (ctx.full()) ms.push_back(128);
  const auto c = PsExponent::parse("2.5");
  for (auto m : ms) {
    points.emplace_back(static_cast<double>(m), static_cast<double>(mitm_count(m, 3, c).g_equation));
  }
  const double slope = fit_growth_exponent(points);
  out.passed = mismatches == 0 && slope >= 2.9 && slope <= 3.8;
  out.detail = std::to_string(mismatches) + "/" + std::to_string(cases) + " mitm/brute mismatches; k=3 slope " +
               fmt(slope);
  return out;
}

Outcome erdos_turan(const Context&) {
  Outcome out;
  double worst_ratio = 0.0;
  for (std::int64_t m : {100, 1000}) {
    const PowerTable table(m, PsExponent::parse("2.5"));
    std::vector<double> points;
    for (const auto& v : table.values()) points.push_back(v.frac);
    const auto mu = CircleMeasure::uniform(std::move(points));
    const double d = arc_discrepancy(mu);
    for (std::int64_t k : {10, 100}) {
      const double rhs = erdos_turan_rhs(mu, k);
      worst_ratio = std::max(worst_ratio, d / rhs);
      if (d > rhs) out.passed = false;
    }
  }
  double worst_gap = 0.0;
  for (std::int64_t m : {4, 16, 64}) {
    std::vector<double> points;
    for (std::int64_t j = 0; j < m; ++j) points.push_back(static_cast<double>(j) / static_cast<double>(m));
    const double gap = std::abs(arc_discrepancy(CircleMeasure::uniform(std::move(points))) - 1.0 / m);
    worst_gap = std::max(worst_gap, gap);
    if (gap > 1e-12) out.passed = false;
  }
  out.detail = "max D/ET " + fmt(worst_ratio) + ", equally spaced |D - 1/M| " + fmt(worst_gap);
  return out;
}

Outcome inequality_chain(const Context&) {
  Outcome out;
  const auto c = PsExponent::parse("2.5");
  const std::int64_t n = 100;
  std::size_t violations = 0, runs = 0;
  double min_cell = std::numeric_limits<double>::infinity();
  double min_corrected = min_cell;
  for (std::int64_t m : {100, 500}) {
    for (std::int64_t xi : {10, 30, 49}) {
      for (std::int64_t cells : {8, 32}) {
        for (std::int64_t k : {20, 100}) {
          const auto r = check_partition_chain(m, c, xi, n, Rational{1, cells}, k);
          violations += r.violations.size();
          min_cell = std::min(min_cell, r.cell_min_slack);
          min_corrected = std::min(min_corrected, r.cell_min_slack_corrected);
          ++runs;
        }
      }
    }
  }
  out.passed = violations == 0;
  out.detail = std::to_string(violations) + " violations over " + std::to_string(runs) +
               " grid points; min per-cell slack " + fmt(min_cell) + " (corrected " + fmt(min_corrected) + ")";
  return out;
}

Outcome van_der_corput(const Context& ctx) {
  Outcome out;
  const auto c = PsExponent::parse("2.5");
  const int top = ctx.full() ? 14 : 12;
  const PowerTable table((std::int64_t{2} << top) - 1, c);
  double fitted = 0.0;
  for (const auto& b : dyadic_blocks(table, 1.0)) {
    if (b.j >= 4 && b.j <= top) fitted = std::max(fitted, b.empirical / b.block_bound);
  }

  // U(xi) M^(-(c - q - 2) / (2^(q+2) - 1)) with q = 1.
  const int q = c.vdc_order();
  const double scale_exp = -(c.value() - q - 2) / (std::ldexp(1.0, q + 2) - 1.0);
  const std::int64_t n = std::int64_t{1} << 16;
  const int last = ctx.full() ? 12 : 10;
  std::vector<double> scores;
  for (int e = 7; e <= last; ++e) {
    const std::int64_t m = std::int64_t{1} << e;
    const PowerTable t(m, c);
    double best = 0.0;
    for (std::int64_t j = 0; j < 64; ++j) {
      const std::int64_t xi = (2 * j + 1) * n / 256;
      const auto k = equalizing_k(xi, n, m, c);
      best = std::max(best, u_of_xi(xi, n, t, k, UMode::kEmpirical));
    }
    scores.push_back(best * std::pow(static_cast<double>(m), scale_exp));
  }
  double worst_growth = 0.0;
  for (std::size_t i = 1; i < scores.size(); ++i) worst_growth = std::max(worst_growth, scores[i] / scores[i - 1]);

  out.passed = fitted <= 10.0 && worst_growth <= 1.5;
  out.detail = "fitted C " + fmt(fitted) + "; max U-score growth per doubling " + fmt(worst_growth);
  return out;
}

Outcome vinogradov(const Context& ctx) {
  const std::uint64_t n = std::uint64_t{1} << 16;
  const auto table = ctx.table(n);
  const auto spec = ctx.spectrum(table, n);
  const auto q_max = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(n))));
  std::size_t failures = 0;
  double worst = 0.0;
  for (std::uint64_t xi = 1; xi <= n / 2; ++xi) {
    const auto approx = dirichlet_approx(static_cast<std::int64_t>(xi), static_cast<std::int64_t>(n), q_max);
    const double ratio = std::abs(spec[xi]) / vinogradov_rhs(static_cast<double>(n), static_cast<double>(approx.q));
    worst = std::max(worst, ratio);
    if (ratio > 1.0) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " frequencies above the bound; max ratio " + fmt(worst)};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  Outcome (*run)(const Context&);
};

constexpr Criterion kCriteria[] = {
    {1, "spectral-identity", 5, spectral_identity},
    {2, "parseval", 10, parseval},
    {3, "pnt-sanity", 10, pnt_sanity},
    {4, "main-trend", 90, main_trend},
    {5, "decomposition", 30, decomposition},
    {6, "diophantine-counting", 120, diophantine},
    {7, "erdos-turan", 5, erdos_turan},
    {8, "inequality-chain", 10, inequality_chain},
    {9, "van-der-corput-shape", 60, van_der_corput},
    {10, "vinogradov-dominance", 30, vinogradov},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options, const ResultSink& sink) {
  const Context ctx(options);
  std::vector<CriterionResult> results;
  for (const auto& c : kCriteria) {
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.limit_seconds = c.limit_seconds;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = c.run(ctx);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > r.limit_seconds) {
      r.passed = false;
      r.detail += " (over the runtime limit)";
    }
    if (sink) sink(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result_line(const CriterionResult& r) {
  char head[128];
  std::snprintf(head, sizeof head, "[%s] %2d %-22s (%.2f s / %.0f s): ", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.limit_seconds);
  return head + r.detail;
}

}  // namespace pspc::cli
