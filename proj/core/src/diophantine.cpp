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

#include "pspc/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pspc/errors.hpp"

namespace pspc {

namespace {

constexpr double kBoundaryMargin = 1e-9;

void check_shape(std::int64_t m, int k) {
  if (m < 1) throw ArgumentError("counting needs M >= 1");
  if (k < 1) throw ArgumentError("counting needs k >= 1");
}

double cube_size(std::int64_t m, int dims) { return std::pow(static_cast<double>(m), dims); }

/// Decides |d_int + d_frac| <= k where d_int is exact and |d_frac| < k.
/// Calls `exact()` (a 50-digit evaluation of the signed difference) only when
/// d_frac lies within the margin of a boundary.
template <class Exact>
bool within_window(std::int64_t d_int, double d_frac, int k, Exact&& exact) {
  const double upper = static_cast<double>(k - d_int);
  const double lower = static_cast<double>(-k - d_int);
  if (std::abs(d_frac - upper) < kBoundaryMargin || std::abs(d_frac - lower) < kBoundaryMargin) {
    const HighFloat diff = exact();
    const HighFloat slack = HighFloat(k) - boost::multiprecision::abs(diff);
    // Exact ties (slack at the 50-digit noise floor) count as solutions.
    return slack > HighFloat(-1e-40);
  }
  return d_frac <= upper && d_frac >= lower;
}

class HighPowers {
 public:
  HighPowers(std::int64_t m, const PsExponent& c) : m_(m), c_(c) {}
  const HighFloat& operator[](std::int64_t x) {
    if (values_.empty()) {
      values_.reserve(static_cast<std::size_t>(m_));
      for (std::int64_t i = 1; i <= m_; ++i) values_.push_back(high_precision_power(i, c_));
    }
    return values_[static_cast<std::size_t>(x - 1)];
  }

 private:
  std::int64_t m_;
  PsExponent c_;
  std::vector<HighFloat> values_;
};

}  // namespace

DiophCount brute_force_count(std::int64_t m, int k, const PsExponent& c) {
  check_shape(m, k);
  if (cube_size(m, 2 * k) > kBruteForceGuard) {
    throw ResourceError("brute-force count needs M^(2k) <= 1e9");
  }
  const PowerTable powers(m, c);
  HighPowers high(m, c);
  const int dims = 2 * k;
  std::vector<std::int64_t> idx(static_cast<std::size_t>(dims), 1);
  DiophCount out{m, k, c, 0, 0, CountMethod::kBrute};

  for (;;) {
    std::int64_t d_int = 0;
    double d_frac = 0.0;
    for (int i = 0; i < dims; ++i) {
      const auto& v = powers[idx[static_cast<std::size_t>(i)]];
      if (i < k) {
        d_int += v.floor;
        d_frac += v.frac;
      } else {
        d_int -= v.floor;
        d_frac -= v.frac;
      }
    }
    if (d_int == 0) ++out.g_equation;
    const bool in = within_window(d_int, d_frac, k, [&] {
      HighFloat s = 0;
      for (int i = 0; i < dims; ++i) {
        const auto& h = high[idx[static_cast<std::size_t>(i)]];
        s += i < k ? h : HighFloat(-h);
      }
      return s;
    });
    if (in) ++out.g_inequality;

    int pos = dims - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m) {
      idx[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
  }
  return out;
}

namespace {

struct PartialSum {
  double key;         // approximate real value, sort order
  std::int64_t whole; // exact sum of floors
  double frac;        // sum of fractional parts
  std::uint64_t tuple; // base-M digits of the k-tuple
};

}  // namespace

DiophCount mitm_count(std::int64_t m, int k, const PsExponent& c) {
  check_shape(m, k);
  if (cube_size(m, k) > kMitmGuard) throw ResourceError("meet-in-the-middle count needs M^k <= 1e8");

  const PowerTable powers(m, c);
  HighPowers high(m, c);
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(m);

  std::vector<PartialSum> sums;
  sums.reserve(total);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t rest = t;
    std::int64_t whole = 0;
    double frac = 0.0;
    for (int i = 0; i < k; ++i) {
      const auto& v = powers[static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(m)) + 1];
      rest /= static_cast<std::uint64_t>(m);
      whole += v.floor;
      frac += v.frac;
    }
    sums.push_back({static_cast<double>(whole) + frac, whole, frac, t});
  }

  DiophCount out{m, k, c, 0, 0, CountMethod::kMitm};

  // Equation: sum over equal exact floor sums of count^2.
  {
    std::vector<std::int64_t> wholes;
    wholes.reserve(sums.size());
    for (const auto& s : sums) wholes.push_back(s.whole);
    std::sort(wholes.begin(), wholes.end());
    for (std::size_t i = 0; i < wholes.size();) {
      std::size_t j = i;
      while (j < wholes.size() && wholes[j] == wholes[i]) ++j;
      const std::uint64_t run = j - i;
      out.g_equation += run * run;
      i = j;
    }
  }

  // Inequality: for each s, count t with |s - t| <= k. Keys are exact to
  // ~1e-10 here; pairs within `band` of the window edge get an exact check.
  std::sort(sums.begin(), sums.end(), [](const PartialSum& a, const PartialSum& b) {
    return a.key < b.key || (a.key == b.key && a.tuple < b.tuple);
  });
  const double max_key = sums.back().key;
  const double band = 1e-6 + 1e-13 * max_key;
  const double width = static_cast<double>(k);

  auto tuple_high = [&](std::uint64_t t) {
    HighFloat s = 0;
    for (int i = 0; i < k; ++i) {
      s += high[static_cast<std::int64_t>(t % static_cast<std::uint64_t>(m)) + 1];
      t /= static_cast<std::uint64_t>(m);
    }
    return s;
  };
  auto exact_in = [&](const PartialSum& a, const PartialSum& b) {
    return within_window(a.whole - b.whole, a.frac - b.frac, k,
                         [&] { return tuple_high(a.tuple) - tuple_high(b.tuple); });
  };

  const std::size_t n = sums.size();
  std::size_t lo_amb = 0, lo_def = 0, hi_def = 0, hi_amb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = sums[i].key;
    while (lo_amb < n && sums[lo_amb].key < s - width - band) ++lo_amb;
    while (lo_def < n && sums[lo_def].key < s - width + band) ++lo_def;
    while (hi_def < n && sums[hi_def].key <= s + width - band) ++hi_def;
    while (hi_amb < n && sums[hi_amb].key <= s + width + band) ++hi_amb;
    out.g_inequality += hi_def - lo_def;
    for (std::size_t j = lo_amb; j < lo_def; ++j) out.g_inequality += exact_in(sums[i], sums[j]) ? 1 : 0;
    for (std::size_t j = hi_def; j < hi_amb; ++j) out.g_inequality += exact_in(sums[i], sums[j]) ? 1 : 0;
  }
  return out;
}

double fit_growth_exponent(std::span<const std::pair<double, double>> counts) {
  if (counts.size() < 3) throw ArgumentError("growth fit needs at least three points");
  double sx = 0, sy = 0;
  for (const auto& [mv, cnt] : counts) {
    if (!(mv > 0) || !(cnt > 0)) throw ArgumentError("growth fit needs positive M and counts");
    sx += std::log2(mv);
    sy += std::log2(cnt);
  }
  const double n = static_cast<double>(counts.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& [mv, cnt] : counts) {
    const double dx = std::log2(mv) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log2(cnt) - my);
  }
  std::vector<double> ms;
  for (const auto& pt : counts) ms.push_back(pt.first);
  std::sort(ms.begin(), ms.end());
  if (std::unique(ms.begin(), ms.end()) - ms.begin() < 3) {
    throw ArgumentError("growth fit needs at least three distinct M values");
  }
  return sxy / sxx;
}

int theorem_k(const PsExponent& c) {
  if (!(c.value() > 2.0)) throw ArgumentError("theorem_k requires c > 2");
  std::int64_t two_c_floor;
  if (const auto& r = c.rational_form()) {
    two_c_floor = (2 * r->num) / r->den;
  } else {
    two_c_floor = static_cast<std::int64_t>(std::floor(2.0 * c.value()));
  }
  const std::int64_t bound = (two_c_floor + 1) * (two_c_floor + 2) + 1;
  // smallest k with 2k > bound
  return static_cast<int>(bound / 2 + 1);
}

}  // namespace pspc
