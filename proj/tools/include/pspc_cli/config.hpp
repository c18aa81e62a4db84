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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pspc::cli {

/// Every parameter any subcommand reads, with its default. Loaded from a
/// plain key=value file via --config, then overridden by command-line flags.
struct ExperimentConfig {
  // shared
  std::string cache_dir;
  std::string output;          // empty: stdout
  std::string format = "json";  // json | csv
  unsigned threads = 1;         // 0: hardware concurrency

  // sieve
  std::uint64_t limit = 1'000'000;

  // spectrum, correlate
  std::uint64_t n = 101;
  bool direct = false;
  std::optional<std::uint64_t> band_lo;
  std::optional<std::uint64_t> band_hi;

  // expsum, vdc, dioph, discrepancy, correlate
  std::int64_t m = 100;
  std::string c = "2.5";
  std::optional<double> theta;
  std::optional<double> u;
  std::string kind;  // floor | pow; empty: floor with --theta, pow with --u

  // dioph
  std::vector<std::int64_t> m_list;
  int k = 2;
  bool brute = false;

  // discrepancy
  std::string xi_over_n = "3/10";
  std::string gamma = "1/8";
  std::int64_t k_max = 20;

  // correlate
  double a = 1.0;
  std::string mode = "exploration";  // exploration | theorem
  double b_eff = 3.0;
  std::string paths = "all";  // all | fast
  std::vector<std::int64_t> n_list;

  // verify-all
  std::string profile = "quick";  // quick | full

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// One "key=value" line per field in a fixed order; unset optionals are written
// with an empty value.
std::string serialize(const ExperimentConfig& config);

// Blank lines and lines starting with '#' are skipped. Unknown keys and
// malformed values throw ArgumentError. Keys not present keep `base` values.
ExperimentConfig parse_config(std::string_view text, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});

std::vector<std::int64_t> parse_int_list(std::string_view text);
std::string format_int_list(const std::vector<std::int64_t>& values);

}  // namespace pspc::cli
