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
#include <filesystem>
#include <optional>

#include "pspc/sieve.hpp"
#include "pspc/spectrum.hpp"

namespace pspc {

// On-disk layouts (all little-endian):
//   "PSLT" | u16 version | u64 L | L x f64          Lambda(1..L)
//   "PSSP" | u16 version | u64 N | 2N x f64         re/im interleaved
inline constexpr std::uint16_t kCacheVersion = 1;

void write_lambda_cache(const std::filesystem::path& path, const LambdaTable& table);
// nullopt on missing file, bad magic/version, size mismatch or truncation.
std::optional<LambdaTable> read_lambda_cache(const std::filesystem::path& path, std::uint64_t limit);

void write_spectrum_cache(const std::filesystem::path& path, const Spectrum& spectrum);
std::optional<Spectrum> read_spectrum_cache(const std::filesystem::path& path, std::uint64_t n);

std::filesystem::path lambda_cache_path(const std::filesystem::path& dir, std::uint64_t limit);
std::filesystem::path spectrum_cache_path(const std::filesystem::path& dir, std::uint64_t n);

// Loads from dir when a valid file exists, otherwise builds and (re)writes it.
// An empty dir disables caching.
LambdaTable cached_lambda_table(const std::filesystem::path& dir, std::uint64_t limit,
                                const SieveOptions& options = {});
Spectrum cached_spectrum(const std::filesystem::path& dir, const LambdaTable& table, std::uint64_t n);

}  // namespace pspc
