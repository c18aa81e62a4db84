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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pspc {

struct SieveOptions {
  std::size_t segment_size = std::size_t{1} << 16;
  // Largest limit (number of table entries) a build may allocate.
  std::uint64_t memory_budget = 200'000'000;
  unsigned threads = 1;
};

/// Dense table of von Mangoldt weights Lambda(1..L), natural-log scale.
///
/// Lambda(p^j) is stored as the identical double log(p) for every j >= 1.
/// Built tables are immutable; copies are cheap to share across threads by
/// const reference.
class LambdaTable {
 public:
  LambdaTable() = default;

  // Wraps arbitrary arithmetic weights, values[i] being the weight at i + 1.
  // Used for synthetic inputs (constant or zero weights) in experiments.
  static LambdaTable from_values(std::vector<double> values);

  std::uint64_t limit() const { return data_.empty() ? 0 : data_.size() - 1; }

  // 0 <= n <= limit(); index 0 reads as 0.
  double operator[](std::uint64_t n) const { return data_[n]; }
  double at(std::uint64_t n) const;

  // Lambda(1..L) with values()[i] == Lambda(i + 1).
  std::span<const double> values() const {
    return data_.empty() ? std::span<const double>() : std::span<const double>(data_).subspan(1);
  }

  // The n <= L with Lambda(n) > 0, ascending.
  std::vector<std::uint64_t> prime_powers() const;

  friend bool operator==(const LambdaTable&, const LambdaTable&) = default;

 private:
  std::vector<double> data_;
};

LambdaTable build_lambda_table(std::uint64_t limit, const SieveOptions& options = {});

// psi(x) = sum of Lambda(n) over n <= x, compensated, ascending order.
double chebyshev_psi(const LambdaTable& table, double x);

// Mean of values[0 .. floor(x) - 1], i.e. the average over n = 1..floor(x).
double cesaro_average(std::span<const double> values, double x);

}  // namespace pspc
