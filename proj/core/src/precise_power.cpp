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

#include "pspc/precise_power.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pspc/errors.hpp"

namespace pspc {

namespace mp = boost::multiprecision;

PsExponent PsExponent::rational(std::int64_t p, std::int64_t q) {
  const auto r = Rational::make(p, q);
  PsExponent c;
  c.value_ = r.to_double();
  if (!(c.value_ > 1.0)) throw ArgumentError("exponent c must exceed 1, got " + r.to_string());
  if (r.num <= kMaxExactNumerator) c.rational_ = r;
  return c;
}

PsExponent PsExponent::real(double value) {
  if (!std::isfinite(value) || !(value > 1.0)) {
    throw ArgumentError("exponent c must be a finite real above 1");
  }
  PsExponent c;
  c.value_ = value;
  return c;
}

PsExponent PsExponent::parse(std::string_view text) {
  if (text == "e") return real(std::numbers::e);
  if (auto r = parse_rational(text)) return rational(r->num, r->den);
  try {
    std::size_t used = 0;
    const std::string s(text);
    const double v = std::stod(s, &used);
    if (used != s.size()) throw ArgumentError("invalid exponent '" + s + "'");
    return real(v);
  } catch (const std::logic_error&) {
    throw ArgumentError("invalid exponent '" + std::string(text) + "'");
  }
}

bool PsExponent::is_integer() const {
  if (rational_) return rational_->den == 1;
  return value_ == std::floor(value_);
}

HighFloat PsExponent::high_value() const {
  if (rational_) return HighFloat(rational_->num) / HighFloat(rational_->den);
  return HighFloat(value_);
}

std::string PsExponent::to_string() const {
  if (rational_) return rational_->to_string();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

int PsExponent::vdc_order() const {
  if (rational_) {
    // ceil((p - 2q) / q) for q > 0
    const std::int64_t num = rational_->num - 2 * rational_->den;
    const std::int64_t q = rational_->den;
    const std::int64_t ceil = num >= 0 ? (num + q - 1) / q : -((-num) / q);
    return static_cast<int>(std::max<std::int64_t>(0, ceil));
  }
  return std::max(0, static_cast<int>(std::ceil(value_ - 2.0)));
}

namespace {

constexpr double kTwo63 = 9223372036854775808.0;
constexpr double kTieMargin = 1e-9;
const HighFloat kHighTie("1e-40");
const HighFloat kHighTieRelative("1e-45");

using u128 = unsigned __int128;

u128 pow_saturating(u128 base, std::int64_t e) {
  constexpr u128 kMax = ~u128{0};
  u128 r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (base != 0 && r > kMax / base) return kMax;
    r *= base;
  }
  return r;
}

struct RootResult {
  std::int64_t root;
  bool exact;
};

// floor(x^(1/q)) where x = m^p.
RootResult integer_root(std::int64_t m, std::int64_t p, std::int64_t q) {
  const long double guess = std::pow(static_cast<long double>(m), static_cast<long double>(p) / q);
  if (static_cast<double>(p) * std::log2(static_cast<double>(m)) < 120.0) {
    const u128 x = pow_saturating(static_cast<u128>(m), p);
    u128 r = static_cast<u128>(std::floor(guess));
    while (r > 0 && pow_saturating(r, q) > x) --r;
    while (pow_saturating(r + 1, q) <= x) ++r;
    return {static_cast<std::int64_t>(r), pow_saturating(r, q) == x};
  }
  const mp::cpp_int x = mp::pow(mp::cpp_int(m), static_cast<unsigned>(p));
  // Newton from above converges monotonically to the floor root.
  mp::cpp_int r = mp::cpp_int(static_cast<std::int64_t>(guess * (1.0L + 1e-15L))) + 2;
  if (q > 1) {
    for (;;) {
      const mp::cpp_int next = ((q - 1) * r + x / mp::pow(r, static_cast<unsigned>(q - 1))) / q;
      if (next >= r) break;
      r = next;
    }
  }
  while (mp::pow(r, static_cast<unsigned>(q)) > x) --r;
  while (mp::pow(r + 1, static_cast<unsigned>(q)) <= x) ++r;
  return {r.convert_to<std::int64_t>(), mp::pow(r, static_cast<unsigned>(q)) == x};
}

void check_range(std::int64_t m, const PsExponent& c) {
  if (m < 1) throw ArgumentError("power base m must be at least 1");
  const double approx = std::pow(static_cast<double>(m), c.value());
  if (approx >= kTwo63 * (1 - 1e-12)) {
    if (high_precision_power(m, c) >= HighFloat(kTwo63)) {
      throw RangeError("m^c exceeds 2^63 - 1 for m = " + std::to_string(m));
    }
  }
}

// Floor and fraction from a 50-digit value, snapping ties within 1e-40
// or 1e-45 relative, whichever is larger (pow loses a few of the 50 digits).
PowerValue split_high(const HighFloat& h) {
  HighFloat fl = mp::floor(h);
  HighFloat f = h - fl;
  const HighFloat rel = h * kHighTieRelative;
  const HighFloat tie = rel > kHighTie ? rel : kHighTie;
  if (f < tie) return {fl.convert_to<std::int64_t>(), 0.0, true};
  if (1 - f < tie) return {fl.convert_to<std::int64_t>() + 1, 0.0, true};
  double fd = f.convert_to<double>();
  if (fd >= 1.0) fd = std::nextafter(1.0, 0.0);
  return {fl.convert_to<std::int64_t>(), fd, false};
}

// Error bound of a double pow for this magnitude, including the rounding of c itself.
double float_margin(double approx, std::int64_t m, const PsExponent& c) {
  return kTieMargin + 4e-16 * approx * (2.0 + c.value() * std::log(static_cast<double>(m)));
}

}  // namespace

void check_table_size(std::int64_t count, const PsExponent& c) {
  check_range(count, c);
  if (count > kMaxPowerTableEntries) {
    throw ResourceError("tables of m^c are limited to " + std::to_string(kMaxPowerTableEntries) + " entries");
  }
}

HighFloat high_precision_power(std::int64_t m, const PsExponent& c) {
  if (m < 1) throw ArgumentError("power base m must be at least 1");
  if (m == 1) return HighFloat(1);
  return mp::pow(HighFloat(m), c.high_value());
}

PowerValue precise_power(std::int64_t m, const PsExponent& c) {
  check_range(m, c);
  if (m == 1) return {1, 0.0, true};
  const double approx = std::pow(static_cast<double>(m), c.value());
  const double margin = float_margin(approx, m, c);

  if (const auto& r = c.rational_form()) {
    const auto root = integer_root(m, r->num, r->den);
    if (root.exact) return {root.root, 0.0, true};
    const double f = approx - static_cast<double>(root.root);
    if (approx < 256.0 && f > margin && f < 1.0 - margin) return {root.root, f, false};
    const HighFloat h = high_precision_power(m, c) - HighFloat(root.root);
    double fd = h.convert_to<double>();
    fd = std::clamp(fd, 0.0, std::nextafter(1.0, 0.0));
    return {root.root, fd, false};
  }

  const double f = approx - std::floor(approx);
  if (approx < 256.0 && f > margin && f < 1.0 - margin) {
    return {static_cast<std::int64_t>(std::floor(approx)), f, false};
  }
  return split_high(high_precision_power(m, c));
}

std::int64_t ps_floor_exact_root(std::int64_t m, const PsExponent& c) {
  const auto& r = c.rational_form();
  if (!r) throw ArgumentError("exact root path needs a rational exponent");
  check_range(m, c);
  return integer_root(m, r->num, r->den).root;
}

std::int64_t ps_floor_float(std::int64_t m, const PsExponent& c) {
  check_range(m, c);
  const double approx = std::pow(static_cast<double>(m), c.value());
  const double f = approx - std::floor(approx);
  const double margin = float_margin(approx, m, c);
  if (approx < 4503599627370496.0 && f > margin && f < 1.0 - margin) {
    return static_cast<std::int64_t>(std::floor(approx));
  }
  return split_high(high_precision_power(m, c)).floor;
}

PowerTable::PowerTable(std::int64_t count, const PsExponent& c) : exponent_(c) {
  if (count < 1) throw ArgumentError("power table needs at least one entry");
  check_table_size(count, c);
  values_.reserve(static_cast<std::size_t>(count));
  for (std::int64_t m = 1; m <= count; ++m) values_.push_back(precise_power(m, c));
}

namespace {

inline double frac01(double x) { return x - std::floor(x); }

}  // namespace

double frac_of_product(double u, std::int64_t n) {
  // |n| < 2^63 splits into two parts exactly representable as doubles.
  const std::int64_t hi = n & ~std::int64_t{(1 << 26) - 1};
  const std::int64_t lo = n - hi;
  double acc = 0.0;
  for (const std::int64_t part : {hi, lo}) {
    const double x = static_cast<double>(part);
    const double p = u * x;
    const double e = std::fma(u, x, -p);
    acc += frac01(p) + frac01(e);
  }
  return frac01(acc);
}

double power_phase(double u, const PowerValue& v) {
  return frac01(frac_of_product(u, v.floor) + u * v.frac);
}

double rational_power_phase(std::int64_t xi, std::int64_t n, const PowerValue& v) {
  const __int128 prod = static_cast<__int128>(xi) * v.floor;
  __int128 r = prod % n;
  if (r < 0) r += n;
  const double dn = static_cast<double>(n);
  return frac01(static_cast<double>(r) / dn + static_cast<double>(xi) * v.frac / dn);
}

std::complex<double> unit_phase(double t) {
  t -= std::floor(t + 0.5);
  const double ang = 2.0 * std::numbers::pi * t;
  return {std::cos(ang), std::sin(ang)};
}

}  // namespace pspc
