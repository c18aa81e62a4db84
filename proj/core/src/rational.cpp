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

#include "pspc/rational.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

#include "pspc/errors.hpp"

namespace pspc {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  const auto* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto p = parse_int(text.substr(0, slash));
    auto q = parse_int(text.substr(slash + 1));
    if (!p || !q || *q == 0) return std::nullopt;
    return Rational::make(*p, *q);
  }

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  std::string digits(text.substr(0, dot));
  std::string fraction = dot == std::string_view::npos ? std::string() : std::string(text.substr(dot + 1));
  if (digits.empty() && fraction.empty()) return std::nullopt;
  for (char ch : digits + fraction) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
  }
  while (!fraction.empty() && fraction.back() == '0') fraction.pop_back();
  if (digits.size() + fraction.size() > 18) return std::nullopt;

  std::int64_t den = 1;
  for (std::size_t i = 0; i < fraction.size(); ++i) den *= 10;
  auto whole = parse_int(digits.empty() ? std::string_view("0") : std::string_view(digits));
  auto frac = parse_int(fraction.empty() ? std::string_view("0") : std::string_view(fraction));
  if (!whole || !frac) return std::nullopt;
  if (*whole > (std::numeric_limits<std::int64_t>::max() - *frac) / den) return std::nullopt;
  std::int64_t num = *whole * den + *frac;
  if (negative) num = -num;
  return Rational::make(num, den);
}

}  // namespace pspc
