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

#include "pspc/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "pspc/errors.hpp"
#include "pspc/summation.hpp"

namespace pspc {

LambdaTable LambdaTable::from_values(std::vector<double> values) {
  LambdaTable t;
  t.data_.reserve(values.size() + 1);
  t.data_.push_back(0.0);
  t.data_.insert(t.data_.end(), values.begin(), values.end());
  return t;
}

double LambdaTable::at(std::uint64_t n) const {
  if (n < 1 || n > limit()) {
    throw ArgumentError("Lambda index " + std::to_string(n) + " outside 1.." + std::to_string(limit()));
  }
  return data_[n];
}

std::vector<std::uint64_t> LambdaTable::prime_powers() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n < data_.size(); ++n) {
    if (data_[n] > 0.0) out.push_back(n);
  }
  return out;
}

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

struct BasePrime {
  std::uint64_t p;
  double log_p;
};

std::vector<BasePrime> base_primes(std::uint64_t bound) {
  std::vector<char> composite(bound + 1, 0);
  std::vector<BasePrime> primes;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back({i, std::log(static_cast<double>(i))});
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = 1;
  }
  return primes;
}

// Fills out[lo .. hi) (absolute indices), lo >= 2.
void sieve_segment(std::uint64_t lo, std::uint64_t hi, std::span<const BasePrime> primes,
                   std::vector<char>& composite, double* out) {
  const std::uint64_t len = hi - lo;
  composite.assign(len, 0);
  for (const auto& bp : primes) {
    const std::uint64_t p = bp.p;
    if (p * p >= hi) break;
    std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
    for (std::uint64_t j = start; j < hi; j += p) composite[j - lo] = 1;
  }
  for (std::uint64_t i = 0; i < len; ++i) {
    out[lo + i] = composite[i] ? 0.0 : std::log(static_cast<double>(lo + i));
  }
  // Higher powers of the base primes; log p is reused so Lambda(p^j) == Lambda(p) bitwise.
  for (const auto& bp : primes) {
    const std::uint64_t p = bp.p;
    if (p * p >= hi) break;
    for (std::uint64_t q = p * p; q < hi; q *= p) {
      if (q >= lo) out[q] = bp.log_p;
      if (q > (hi - 1) / p) break;
    }
  }
}

}  // namespace

LambdaTable build_lambda_table(std::uint64_t limit, const SieveOptions& options) {
  if (limit < 1) throw ArgumentError("sieve limit must be at least 1");
  if (limit > options.memory_budget) {
    throw ResourceError("sieve limit " + std::to_string(limit) + " exceeds memory budget of " +
                        std::to_string(options.memory_budget) + " entries");
  }
  if (options.segment_size == 0) throw ArgumentError("segment size must be positive");

  std::vector<double> values(limit, 0.0);
  // values[n - 1] = Lambda(n); shift so segments write by absolute n.
  double* by_n = values.data() - 1;

  const auto primes = base_primes(isqrt(limit));
  const std::uint64_t seg = options.segment_size;
  const std::uint64_t first = 2;
  if (limit >= first) {
    const std::uint64_t nseg = (limit - first) / seg + 1;
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(nseg)));
    auto worker = [&](unsigned tid) {
      std::vector<char> scratch;
      for (std::uint64_t s = tid; s < nseg; s += threads) {
        const std::uint64_t lo = first + s * seg;
        const std::uint64_t hi = std::min(limit + 1, lo + seg);
        sieve_segment(lo, hi, primes, scratch, by_n);
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    }
  }
  return LambdaTable::from_values(std::move(values));
}

double chebyshev_psi(const LambdaTable& table, double x) {
  if (!(x >= 1.0) || x > static_cast<double>(table.limit())) {
    throw ArgumentError("chebyshev_psi: x must lie in [1, " + std::to_string(table.limit()) + "]");
  }
  const auto n = static_cast<std::uint64_t>(std::floor(x));
  return compensated_total(table.values().first(n));
}

double cesaro_average(std::span<const double> values, double x) {
  if (!(x >= 1.0)) throw ArgumentError("cesaro_average: x must be at least 1");
  const auto n = static_cast<std::uint64_t>(std::floor(x));
  if (n > values.size()) throw ArgumentError("cesaro_average: floor(x) exceeds the array length");
  return compensated_total(values.first(n)) / static_cast<double>(n);
}

}  // namespace pspc
