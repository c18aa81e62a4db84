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

#include "pspc_cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "pspc/errors.hpp"

namespace pspc::cli {

namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  if constexpr (std::is_floating_point_v<T>) {
    // std::from_chars for double is not in libstdc++ 11.
    std::string copy(text);
    char* end = nullptr;
    value = std::strtod(copy.c_str(), &end);
    if (copy.empty() || end != copy.c_str() + copy.size()) {
      throw ArgumentError("config: bad number for " + std::string(key) + ": '" + copy + "'");
    }
  } else {
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      throw ArgumentError("config: bad integer for " + std::string(key) + ": '" + std::string(text) + "'");
    }
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ArgumentError("config: bad boolean for " + std::string(key) + ": '" + std::string(text) + "'");
}

template <class T>
std::string opt_to_string(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_floating_point_v<T>) {
    return format_double(*v);
  } else {
    return std::to_string(*v);
  }
}

template <class T>
std::optional<T> opt_from_string(std::string_view key, std::string_view text) {
  if (text.empty()) return std::nullopt;
  return parse_number<T>(key, text);
}

struct Field {
  const char* key;
  std::function<std::string(const ExperimentConfig&)> get;
  std::function<void(ExperimentConfig&, std::string_view)> set;
};

#define PSPC_STRING_FIELD(name)                                                   \
  Field {                                                                         \
    #name, [](const ExperimentConfig& c) { return c.name; },                      \
        [](ExperimentConfig& c, std::string_view v) { c.name = std::string(v); } \
  }
#define PSPC_NUMBER_FIELD(name, type)                                                         \
  Field {                                                                                     \
    #name, [](const ExperimentConfig& c) { return std::to_string(c.name); },                  \
        [](ExperimentConfig& c, std::string_view v) { c.name = parse_number<type>(#name, v); } \
  }
#define PSPC_DOUBLE_FIELD(name)                                                                 \
  Field {                                                                                       \
    #name, [](const ExperimentConfig& c) { return format_double(c.name); },                     \
        [](ExperimentConfig& c, std::string_view v) { c.name = parse_number<double>(#name, v); } \
  }
#define PSPC_OPTIONAL_FIELD(name, type)                                                            \
  Field {                                                                                          \
    #name, [](const ExperimentConfig& c) { return opt_to_string(c.name); },                        \
        [](ExperimentConfig& c, std::string_view v) { c.name = opt_from_string<type>(#name, v); } \
  }
#define PSPC_BOOL_FIELD(name)                                                          \
  Field {                                                                              \
    #name, [](const ExperimentConfig& c) { return std::string(c.name ? "true" : "false"); }, \
        [](ExperimentConfig& c, std::string_view v) { c.name = parse_bool(#name, v); }  \
  }
#define PSPC_LIST_FIELD(name)                                                      \
  Field {                                                                          \
    #name, [](const ExperimentConfig& c) { return format_int_list(c.name); },      \
        [](ExperimentConfig& c, std::string_view v) { c.name = parse_int_list(v); } \
  }

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      PSPC_STRING_FIELD(cache_dir),
      PSPC_STRING_FIELD(output),
      PSPC_STRING_FIELD(format),
      PSPC_NUMBER_FIELD(threads, unsigned),
      PSPC_NUMBER_FIELD(limit, std::uint64_t),
      PSPC_NUMBER_FIELD(n, std::uint64_t),
      PSPC_BOOL_FIELD(direct),
      PSPC_OPTIONAL_FIELD(band_lo, std::uint64_t),
      PSPC_OPTIONAL_FIELD(band_hi, std::uint64_t),
      PSPC_NUMBER_FIELD(m, std::int64_t),
      PSPC_STRING_FIELD(c),
      PSPC_OPTIONAL_FIELD(theta, double),
      PSPC_OPTIONAL_FIELD(u, double),
      PSPC_STRING_FIELD(kind),
      PSPC_LIST_FIELD(m_list),
      PSPC_NUMBER_FIELD(k, int),
      PSPC_BOOL_FIELD(brute),
      PSPC_STRING_FIELD(xi_over_n),
      PSPC_STRING_FIELD(gamma),
      PSPC_NUMBER_FIELD(k_max, std::int64_t),
      PSPC_DOUBLE_FIELD(a),
      PSPC_STRING_FIELD(mode),
      PSPC_DOUBLE_FIELD(b_eff),
      PSPC_STRING_FIELD(paths),
      PSPC_LIST_FIELD(n_list),
      PSPC_STRING_FIELD(profile),
  };
  return table;
}

#undef PSPC_STRING_FIELD
#undef PSPC_NUMBER_FIELD
#undef PSPC_DOUBLE_FIELD
#undef PSPC_OPTIONAL_FIELD
#undef PSPC_BOOL_FIELD
#undef PSPC_LIST_FIELD

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    out.push_back(parse_number<std::int64_t>("list", item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_int_list(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string serialize(const ExperimentConfig& config) {
  std::string out;
  for (const auto& f : fields()) {
    out += f.key;
    out += '=';
    out += f.get(config);
    out += '\n';
  }
  return out;
}

ExperimentConfig parse_config(std::string_view text, ExperimentConfig base) {
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ArgumentError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    std::string key(trim(line.substr(0, eq)));
    std::replace(key.begin(), key.end(), '-', '_');
    const auto value = trim(line.substr(eq + 1));
    const auto& table = fields();
    const auto it = std::find_if(table.begin(), table.end(), [&](const Field& f) { return key == f.key; });
    if (it == table.end()) throw ArgumentError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    it->set(base, value);
  }
  return base;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), std::move(base));
}

}  // namespace pspc::cli
