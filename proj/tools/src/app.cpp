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

#include "pspc_cli/app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "pspc/binary_cache.hpp"
#include "pspc/correlation.hpp"
#include "pspc/diophantine.hpp"
#include "pspc/discrepancy.hpp"
#include "pspc/errors.hpp"
#include "pspc/ps_sequence.hpp"
#include "pspc/sieve.hpp"
#include "pspc/spectrum.hpp"
#include "pspc_cli/config.hpp"
#include "pspc_cli/verify.hpp"

namespace pspc::cli {

namespace {

using Json = nlohmann::ordered_json;

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

SieveOptions sieve_options(const ExperimentConfig& cfg) {
  SieveOptions opts;
  opts.threads = resolve_threads(cfg.threads);
  return opts;
}

void emit(const ExperimentConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw ArgumentError("cannot write output file " + cfg.output);
  file << text;
}

void emit_json(const ExperimentConfig& cfg, Json doc, std::ostream& out) {
  Json wrapped;
  wrapped["schema_version"] = kSchemaVersion;
  for (auto& [key, value] : doc.items()) wrapped[key] = value;
  emit(cfg, wrapped.dump(2) + "\n", out);
}

// Shortest round-trip text for a double in CSV cells.
std::string csv_number(double x) {
  return Json(x).dump();
}

void require_format(const ExperimentConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw ArgumentError("unsupported --format '" + cfg.format + "' for this command");
}

PsExponent exponent(const ExperimentConfig& cfg) {
  try {
    return PsExponent::parse(cfg.c);
  } catch (const std::invalid_argument&) {
    throw ArgumentError("cannot parse exponent c = '" + cfg.c + "'");
  }
}

int cmd_sieve(const ExperimentConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  if (cfg.limit < 1) throw ArgumentError("sieve needs --limit >= 1");
  const auto table = cached_lambda_table(cfg.cache_dir, cfg.limit, sieve_options(cfg));
  Json doc;
  doc["limit"] = cfg.limit;
  doc["psi"] = chebyshev_psi(table, static_cast<double>(cfg.limit));
  doc["prime_powers"] = table.prime_powers().size();
  emit_json(cfg, doc, out);
  return kExitOk;
}

int cmd_spectrum(const ExperimentConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  if (cfg.n < 1) throw ArgumentError("spectrum needs --n >= 1");
  const auto table = cached_lambda_table(cfg.cache_dir, cfg.n, sieve_options(cfg));
  const Spectrum spec =
      cfg.direct ? lambda_hat(table, cfg.n, TransformMode::kDirect) : cached_spectrum(cfg.cache_dir, table, cfg.n);
  Json doc;
  doc["n"] = cfg.n;
  doc["psi"] = chebyshev_psi(table, static_cast<double>(cfg.n));
  doc["parseval_residual"] = verify_parseval(table, spec);
  if (cfg.band_lo.has_value() != cfg.band_hi.has_value()) throw ArgumentError("--band needs both lo and hi");
  if (cfg.band_lo) {
    const auto peak = band_sup(spec, *cfg.band_lo, *cfg.band_hi);
    doc["band_sup"] = {{"xi", peak.xi}, {"value", peak.value}};
  } else {
    doc["band_sup"] = nullptr;
  }
  emit_json(cfg, doc, out);
  return kExitOk;
}

int cmd_expsum(const ExperimentConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  if (cfg.theta.has_value() == cfg.u.has_value()) throw ArgumentError("expsum needs exactly one of --theta, --u");
  const double param = cfg.theta ? *cfg.theta : *cfg.u;
  std::string kind = cfg.kind.empty() ? (cfg.theta ? "floor" : "pow") : cfg.kind;
  const auto c = exponent(cfg);
  ExpSum s;
  if (kind == "floor") {
    s = exp_sum_floor(cfg.m, param, c);
  } else if (kind == "pow") {
    s = exp_sum_pow(cfg.m, param, c);
  } else {
    throw ArgumentError("--kind must be floor or pow");
  }
  Json doc;
  doc["m"] = cfg.m;
  doc["c"] = c.to_string();
  doc["kind"] = kind;
  doc["param"] = param;
  doc["re"] = s.value.real();
  doc["im"] = s.value.imag();
  doc["abs"] = std::abs(s.value);
  emit_json(cfg, doc, out);
  return kExitOk;
}

int cmd_vdc(const ExperimentConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  if (!cfg.u) throw ArgumentError("vdc needs --u");
  const auto c = exponent(cfg);
  const double bound = dyadic_vdc_bound(cfg.m, *cfg.u, c);
  Json blocks = Json::array();
  for (const auto& b : dyadic_blocks(PowerTable(cfg.m, c), *cfg.u)) {
    blocks.push_back({{"j", b.j}, {"F", b.f}, {"X", b.x}, {"block_bound", b.block_bound}, {"empirical", b.empirical}});
  }
  Json doc;
  doc["m"] = cfg.m;
  doc["u"] = *cfg.u;
  doc["c"] = c.to_string();
  doc["q"] = c.vdc_order();
  doc["bound"] = bound;
  doc["blocks"] = blocks;
  emit_json(cfg, doc, out);
  return kExitOk;
}

int cmd_dioph(const ExperimentConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "csv"});
  if (cfg.m_list.empty()) throw ArgumentError("dioph needs --m-list");
  const auto c = exponent(cfg);
  std::vector<DiophCount> rows;
  for (auto m : cfg.m_list) rows.push_back(cfg.brute ? brute_force_count(m, cfg.k, c) : mitm_count(m, cfg.k, c));

  auto method_name = [](CountMethod m) { return m == CountMethod::kBrute ? "brute" : "mitm"; };
  if (cfg.format == "csv") {
    std::ostringstream csv;
    csv << "schema_version,M,k,c,g_equation,g_inequality,method\n";
    for (const auto& r : rows) {
      csv << kSchemaVersion << ',' << r.m << ',' << r.k << ',' << c.to_string() << ',' << r.g_equation << ','
          << r.g_inequality << ',' << method_name(r.method) << '\n';
    }
    emit(cfg, csv.str(), out);
    return kExitOk;
  }

  Json doc;
  Json items = Json::array();
  std::vector<std::pair<double, double>> eq, ineq;
  for (const auto& r : rows) {
    items.push_back({{"M", r.m},
                     {"k", r.k},
                     {"c", c.to_string()},
                     {"g_equation", r.g_equation},
                     {"g_inequality", r.g_inequality},
                     {"method", method_name(r.method)}});
    eq.emplace_back(static_cast<double>(r.m), static_cast<double>(r.g_equation));
    ineq.emplace_back(static_cast<double>(r.m), static_cast<double>(r.g_inequality));
  }
  doc["rows"] = items;
  const std::set<std::int64_t> distinct(cfg.m_list.begin(), cfg.m_list.end());
  if (distinct.size() >= 3) {
    doc["slope_equation"] = fit_growth_exponent(eq);
    doc["slope_inequality"] = fit_growth_exponent(ineq);
  } else {
    doc["slope_equation"] = nullptr;
    doc["slope_inequality"] = nullptr;
  }
  emit_json(cfg, doc, out);
  return kExitOk;
}

int cmd_discrepancy(const ExperimentConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  const auto ratio = parse_rational(cfg.xi_over_n);
  if (!ratio || ratio->num < 0 || ratio->num >= ratio->den) {
    throw ArgumentError("--xi-over-n must be a fraction in [0, 1), e.g. 3/10");
  }
  const auto gamma = parse_rational(cfg.gamma);
  if (!gamma) throw ArgumentError("--gamma must be written 1/L");
  const auto c = exponent(cfg);
  const auto r = check_partition_chain(cfg.m, c, ratio->num, ratio->den, *gamma, cfg.k_max);
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"check", v.check}, {"index", v.index}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  }
  Json doc;
  doc["m"] = cfg.m;
  doc["c"] = c.to_string();
  doc["xi"] = ratio->num;
  doc["n"] = ratio->den;
  doc["gamma"] = gamma->to_string();
  doc["k_max"] = cfg.k_max;
  doc["c1"] = r.c1;
  doc["c2"] = r.c2;
  doc["d_exact"] = r.d_exact;
  doc["et_rhs"] = r.et_rhs;
  doc["chain_lhs"] = r.lhs;
  doc["partition_rhs"] = r.partition_rhs;
  doc["chain_rhs"] = r.chain_rhs;
  doc["cell_min_slack"] = r.cell_min_slack;
  doc["cell_min_slack_corrected"] = r.cell_min_slack_corrected;
  doc["coefficient_min_slack"] = r.coefficient_min_slack;
  doc["violations"] = violations;
  emit_json(cfg, doc, out);
  return r.violations.empty() ? kExitOk : kExitInvariant;
}

ParamMode parse_mode(const std::string& mode) {
  if (mode == "exploration") return ParamMode::kExploration;
  if (mode == "theorem") return ParamMode::kTheorem;
  throw ArgumentError("--mode must be theorem or exploration");
}

struct CorrelationRun {
  PsParams params;
  CorrelationReport report;
};

CorrelationRun correlate_once(const ExperimentConfig& cfg, std::int64_t n) {
  if (cfg.paths != "all" && cfg.paths != "fast") throw ArgumentError("--paths must be all or fast");
  const bool all = cfg.paths == "all";
  CorrelationRun run;
  run.params = theorem_params(exponent(cfg), cfg.a, n, parse_mode(cfg.mode), cfg.b_eff);
  const auto shifts = correlation_shifts(run.params);
  const auto limit = static_cast<std::uint64_t>(n) + (all ? static_cast<std::uint64_t>(shifts.back()) : 0);
  const auto table = cached_lambda_table(cfg.cache_dir, limit, sieve_options(cfg));
  const auto spec = cached_spectrum(cfg.cache_dir, table, static_cast<std::uint64_t>(n));
  CorrelationOptions opts;
  opts.include_direct = all;
  opts.both_fourier_paths = all;
  opts.threads = resolve_threads(cfg.threads);
  run.report = correlation_report(run.params, table, spec, opts);
  return run;
}

bool identities_hold(const CorrelationReport& r) {
  return r.identity_residual <= 1e-9 * (1.0 + std::abs(r.spectral)) && r.reconstruction_residual <= 1e-9;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

int cmd_correlate(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.n_list.empty()) {
    require_format(cfg, {"csv", "json"});
    std::ostringstream csv;
    csv << "schema_version,N,M,cutoff,direct,wrapped,spectral,main_term,sigma1,sigma2,wrap_error_bound,"
           "identity_residual,reconstruction_residual\n";
    Json rows = Json::array();
    bool ok = true;
    for (auto n : cfg.n_list) {
      const auto run = correlate_once(cfg, n);
      const auto& r = run.report;
      ok = ok && identities_hold(r);
      csv << kSchemaVersion << ',' << n << ',' << run.params.m << ',' << run.params.cutoff << ','
          << (r.direct ? csv_number(*r.direct) : "") << ',' << csv_number(r.wrapped) << ','
          << csv_number(r.spectral) << ',' << csv_number(r.main_term) << ',' << csv_number(r.sigma1) << ','
          << csv_number(r.sigma2) << ',' << csv_number(r.wrap_error_bound) << ',' << csv_number(r.identity_residual)
          << ',' << csv_number(r.reconstruction_residual) << '\n';
      rows.push_back({{"N", n}, {"M", run.params.m}, {"spectral", r.spectral}, {"direct", optional_number(r.direct)}});
    }
    if (cfg.format == "csv") {
      emit(cfg, csv.str(), out);
    } else {
      emit_json(cfg, Json{{"rows", rows}}, out);
    }
    return ok ? kExitOk : kExitInvariant;
  }

  require_format(cfg, {"json"});
  const auto run = correlate_once(cfg, static_cast<std::int64_t>(cfg.n));
  const auto& p = run.params;
  const auto& r = run.report;
  for (const auto& w : p.warnings) err << "warning: " << w << '\n';

  Json params;
  params["c"] = p.c.to_string();
  params["A"] = p.a;
  params["B"] = p.b_exp;
  params["k"] = p.k;
  params["b"] = p.b;
  params["b_eff"] = p.b_eff;
  params["N"] = p.n;
  params["M"] = p.m;
  params["gamma"] = p.gamma;
  params["cutoff"] = p.cutoff;
  params["mode"] = cfg.mode;
  params["warnings"] = p.warnings;

  Json report;
  report["direct"] = optional_number(r.direct);
  report["wrapped"] = r.wrapped;
  report["spectral"] = r.spectral;
  report["spectral_imag"] = r.spectral_imag;
  report["spectral_other_path"] = optional_number(r.spectral_other_path);
  report["main_term"] = r.main_term;
  report["sigma1"] = r.sigma1;
  report["sigma2"] = r.sigma2;
  report["sigma1_one_sided"] = r.sigma1_one_sided;
  report["sigma2_one_sided"] = r.sigma2_one_sided;
  report["wrap_error_bound"] = r.wrap_error_bound;
  report["identity_residual"] = r.identity_residual;
  report["reconstruction_residual"] = r.reconstruction_residual;

  emit_json(cfg, Json{{"params", params}, {"report", report}}, out);
  return identities_hold(r) ? kExitOk : kExitInvariant;
}

int cmd_verify(const ExperimentConfig& cfg, std::ostream& out) {
  VerifyOptions opts;
  if (cfg.profile == "quick") {
    opts.profile = Profile::kQuick;
  } else if (cfg.profile == "full") {
    opts.profile = Profile::kFull;
  } else {
    throw ArgumentError("--profile must be quick or full");
  }
  opts.cache_dir = cfg.cache_dir;
  opts.threads = resolve_threads(cfg.threads);
  std::size_t passed = 0;
  const auto results = run_acceptance(opts, [&](const CriterionResult& r) {
    out << format_result_line(r) << '\n' << std::flush;
  });
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  out << passed << "/" << results.size() << " criteria passed\n";
  return passed == results.size() ? kExitOk : kExitInvariant;
}

// Finds --config PATH or --config=PATH ahead of full parsing.
std::optional<std::string> find_config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  CLI::App app{"Numerical workbench for prime pairs at Piatetski-Shapiro distances", "pspc"};
  app.require_subcommand(1);

  std::string config_path;
  try {
    if (const auto path = find_config_path(args)) cfg = load_config(*path);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitArgument;
  }

  // Shared flags are accepted before or after the subcommand name.
  auto add_shared = [&](CLI::App* a) {
    a->add_option("--config", config_path, "key=value file presetting any flag");
    a->add_option("--cache-dir", cfg.cache_dir, "cache directory (default: $PSPC_CACHE_DIR)");
    a->add_option("--output", cfg.output, "write the result here instead of stdout");
    a->add_option("--format", cfg.format, "json or csv");
    a->add_option("--threads", cfg.threads, "worker threads, 0 for all cores");
  };
  add_shared(&app);

  auto* sieve = app.add_subcommand("sieve", "von Mangoldt table and psi(L)");
  sieve->add_option("--limit", cfg.limit, "table limit L");

  auto* spectrum = app.add_subcommand("spectrum", "transform of Lambda on Z/NZ");
  spectrum->add_option("--n", cfg.n, "modulus N");
  spectrum->add_flag("--direct", cfg.direct, "O(N^2) reference transform");
  std::vector<std::uint64_t> band;
  spectrum->add_option("--band", band, "lo hi: report the largest |hat| in this range")->expected(2);

  auto* expsum = app.add_subcommand("expsum", "Weyl sums over floor(m^c) or m^c");
  expsum->add_option("--m", cfg.m);
  expsum->add_option("--c", cfg.c);
  expsum->add_option("--theta", cfg.theta, "E e(theta floor(m^c))");
  expsum->add_option("--u", cfg.u, "E e(u m^c)");
  expsum->add_option("--kind", cfg.kind, "floor or pow");

  auto* vdc = app.add_subcommand("vdc", "dyadic van der Corput bound");
  vdc->add_option("--m", cfg.m);
  vdc->add_option("--u", cfg.u);
  vdc->add_option("--c", cfg.c);

  auto* dioph = app.add_subcommand("dioph", "solution counts of the Piatetski-Shapiro equation");
  dioph->add_option("--m-list", cfg.m_list, "comma-separated M values")->delimiter(',');
  dioph->add_option("--k", cfg.k);
  dioph->add_option("--c", cfg.c);
  dioph->add_flag("--brute", cfg.brute, "full enumeration instead of meet in the middle");

  auto* disc = app.add_subcommand("discrepancy", "measures, Erdos-Turan and the partition chain");
  disc->add_option("--m", cfg.m);
  disc->add_option("--c", cfg.c);
  disc->add_option("--xi-over-n", cfg.xi_over_n, "frequency as a fraction xi/N");
  disc->add_option("--gamma", cfg.gamma, "cell width 1/L");
  disc->add_option("--k-max", cfg.k_max, "Fourier cutoff K");

  auto* corr = app.add_subcommand("correlate", "E_m E_n Lambda(n) Lambda(n + floor(m^c))");
  corr->add_option("--n", cfg.n);
  corr->add_option("--c", cfg.c);
  corr->add_option("--a", cfg.a);
  corr->add_option("--mode", cfg.mode, "theorem or exploration");
  corr->add_option("--b-eff", cfg.b_eff, "cutoff exponent for sigma1/sigma2");
  corr->add_option("--paths", cfg.paths, "all or fast");
  corr->add_option("--n-list", cfg.n_list, "comma-separated sweep over N")->delimiter(',');

  auto* verify = app.add_subcommand("verify-all", "run the acceptance suite");
  verify->add_option("--profile", cfg.profile, "quick or full");

  for (auto* sub : app.get_subcommands({})) add_shared(sub);

  std::vector<const char*> argv{"pspc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitArgument;
  }

  if (!band.empty()) {
    cfg.band_lo = band[0];
    cfg.band_hi = band[1];
  }
  if (cfg.cache_dir.empty()) {
    if (const char* env = std::getenv("PSPC_CACHE_DIR")) cfg.cache_dir = env;
  }

  try {
    if (sieve->parsed()) return cmd_sieve(cfg, out);
    if (spectrum->parsed()) return cmd_spectrum(cfg, out);
    if (expsum->parsed()) return cmd_expsum(cfg, out);
    if (vdc->parsed()) return cmd_vdc(cfg, out);
    if (dioph->parsed()) return cmd_dioph(cfg, out);
    if (disc->parsed()) return cmd_discrepancy(cfg, out);
    if (corr->parsed()) return cmd_correlate(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitArgument;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitArgument;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitArgument;
}

}  // namespace pspc::cli
