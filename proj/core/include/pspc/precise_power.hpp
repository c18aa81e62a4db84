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

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pspc/rational.hpp"

namespace pspc {

// 50 significant decimal digits.
using HighFloat = boost::multiprecision::cpp_bin_float_50;

/// Exponent c of the sequence floor(m^c).
///
/// A rational form p/q is kept when c was given exactly (e.g. "2.5" or
/// "21/10") and p is small enough for exact integer roots of m^p; floors are
/// then computed without any floating point. Otherwise c is the double value.
class PsExponent {
 public:
  static constexpr std::int64_t kMaxExactNumerator = 256;

  // Unset exponent (value 0); only useful as a placeholder before assignment.
  PsExponent() = default;

  static PsExponent rational(std::int64_t p, std::int64_t q);
  static PsExponent real(double c);
  // "p/q" and finite decimals become rational; "e" is Euler's number.
  static PsExponent parse(std::string_view text);

  double value() const { return value_; }
  const std::optional<Rational>& rational_form() const { return rational_; }
  bool is_integer() const;
  HighFloat high_value() const;
  std::string to_string() const;

  // ceil(c - 2), clamped at 0: the derivative order used for van der Corput bounds.
  int vdc_order() const;

 private:
  double value_ = 0.0;
  std::optional<Rational> rational_;
};

/// m^c split as an exact integer part plus a fraction accurate to ~1e-15.
struct PowerValue {
  std::int64_t floor = 0;
  double frac = 0.0;          // in [0, 1)
  bool exact_integer = false;  // m^c is an integer, frac == 0 exactly
};

// m^c at 50 digits (exact rational exponent when c has one).
HighFloat high_precision_power(std::int64_t m, const PsExponent& c);

// Exact floor plus fraction. Throws RangeError when m^c >= 2^63.
PowerValue precise_power(std::int64_t m, const PsExponent& c);

// floor(m^c) via exact integer q-th root of m^p; requires a rational exponent.
std::int64_t ps_floor_exact_root(std::int64_t m, const PsExponent& c);
// floor(m^c) from a double evaluation, escalated to 50 digits near integers.
std::int64_t ps_floor_float(std::int64_t m, const PsExponent& c);

inline constexpr std::int64_t kMaxPowerTableEntries = 100'000'000;

// Throws RangeError when count^c >= 2^63 and ResourceError past kMaxPowerTableEntries.
void check_table_size(std::int64_t count, const PsExponent& c);

/// precise_power for m = 1..M, computed once and shared by the exponential
/// sum, measure and counting code.
class PowerTable {
 public:
  PowerTable(std::int64_t count, const PsExponent& c);

  std::int64_t count() const { return static_cast<std::int64_t>(values_.size()); }
  const PsExponent& exponent() const { return exponent_; }
  // 1 <= m <= count()
  const PowerValue& operator[](std::int64_t m) const { return values_[static_cast<std::size_t>(m - 1)]; }
  const std::vector<PowerValue>& values() const { return values_; }

 private:
  PsExponent exponent_;
  std::vector<PowerValue> values_;
};

// Fractional part of u * n in [0, 1), with u * n formed without rounding
// (error-free FMA products on a 26-bit split of n).
double frac_of_product(double u, std::int64_t n);

// Fractional part of u * m^c.
double power_phase(double u, const PowerValue& v);

// Fractional part of (xi / N) * m^c; the integer part of the product is
// reduced modulo N exactly.
double rational_power_phase(std::int64_t xi, std::int64_t n, const PowerValue& v);

// e(t) = exp(2 pi i t); t is reduced to [-1/2, 1/2) first.
std::complex<double> unit_phase(double t);

}  // namespace pspc
