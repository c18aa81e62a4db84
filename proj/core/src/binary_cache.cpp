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

#include "pspc/binary_cache.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <string>
#include <system_error>

#include "pspc/errors.hpp"

namespace pspc {

namespace {

template <class T>
T to_little(T v) {
  if constexpr (std::endian::native == std::endian::big) {
    std::array<char, sizeof(T)> b;
    std::memcpy(b.data(), &v, sizeof(T));
    std::reverse(b.begin(), b.end());
    std::memcpy(&v, b.data(), sizeof(T));
  }
  return v;
}

template <class T>
void put(std::ostream& os, T v) {
  v = to_little(v);
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
bool get(std::istream& is, T& v) {
  if (!is.read(reinterpret_cast<char*>(&v), sizeof(T))) return false;
  v = to_little(v);
  return true;
}

void write_doubles(std::ostream& os, const double* data, std::size_t count) {
  if constexpr (std::endian::native == std::endian::little) {
    os.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(count * sizeof(double)));
  } else {
    for (std::size_t i = 0; i < count; ++i) put(os, data[i]);
  }
}

bool read_doubles(std::istream& is, double* data, std::size_t count) {
  if constexpr (std::endian::native == std::endian::little) {
    return static_cast<bool>(
        is.read(reinterpret_cast<char*>(data), static_cast<std::streamsize>(count * sizeof(double))));
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      if (!get(is, data[i])) return false;
    }
    return true;
  }
}

bool read_header(std::istream& is, const char (&magic)[5], std::uint64_t expected_count) {
  char m[4];
  if (!is.read(m, 4) || std::memcmp(m, magic, 4) != 0) return false;
  std::uint16_t version = 0;
  std::uint64_t count = 0;
  if (!get(is, version) || version != kCacheVersion) return false;
  if (!get(is, count) || count != expected_count) return false;
  return true;
}

// Writes to a sibling temp file and renames, so readers never see a partial file.
template <class Body>
void atomic_write(const std::filesystem::path& path, Body&& body) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open cache file " + tmp.string());
    body(os);
    if (!os) throw std::runtime_error("failed writing cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

void write_lambda_cache(const std::filesystem::path& path, const LambdaTable& table) {
  atomic_write(path, [&](std::ostream& os) {
    os.write("PSLT", 4);
    put<std::uint16_t>(os, kCacheVersion);
    put<std::uint64_t>(os, table.limit());
    write_doubles(os, table.values().data(), table.values().size());
  });
}

std::optional<LambdaTable> read_lambda_cache(const std::filesystem::path& path, std::uint64_t limit) {
  std::ifstream is(path, std::ios::binary);
  if (!is || !read_header(is, "PSLT", limit)) return std::nullopt;
  std::vector<double> values(limit);
  if (!read_doubles(is, values.data(), values.size())) return std::nullopt;
  if (is.peek() != std::char_traits<char>::eof()) return std::nullopt;
  return LambdaTable::from_values(std::move(values));
}

void write_spectrum_cache(const std::filesystem::path& path, const Spectrum& spectrum) {
  atomic_write(path, [&](std::ostream& os) {
    os.write("PSSP", 4);
    put<std::uint16_t>(os, kCacheVersion);
    put<std::uint64_t>(os, spectrum.size());
    const auto coeffs = spectrum.coeffs();
    write_doubles(os, reinterpret_cast<const double*>(coeffs.data()), 2 * coeffs.size());
  });
}

std::optional<Spectrum> read_spectrum_cache(const std::filesystem::path& path, std::uint64_t n) {
  std::ifstream is(path, std::ios::binary);
  if (!is || !read_header(is, "PSSP", n)) return std::nullopt;
  std::vector<std::complex<double>> coeffs(n);
  if (!read_doubles(is, reinterpret_cast<double*>(coeffs.data()), 2 * n)) return std::nullopt;
  if (is.peek() != std::char_traits<char>::eof()) return std::nullopt;
  return Spectrum(std::move(coeffs));
}

std::filesystem::path lambda_cache_path(const std::filesystem::path& dir, std::uint64_t limit) {
  return dir / ("lambda_" + std::to_string(limit) + ".pslt");
}

std::filesystem::path spectrum_cache_path(const std::filesystem::path& dir, std::uint64_t n) {
  return dir / ("spectrum_" + std::to_string(n) + ".pssp");
}

LambdaTable cached_lambda_table(const std::filesystem::path& dir, std::uint64_t limit,
                                const SieveOptions& options) {
  if (dir.empty()) return build_lambda_table(limit, options);
  const auto path = lambda_cache_path(dir, limit);
  if (auto hit = read_lambda_cache(path, limit)) return std::move(*hit);
  auto table = build_lambda_table(limit, options);
  write_lambda_cache(path, table);
  return table;
}

Spectrum cached_spectrum(const std::filesystem::path& dir, const LambdaTable& table, std::uint64_t n) {
  if (dir.empty()) return lambda_hat(table, n);
  const auto path = spectrum_cache_path(dir, n);
  if (auto hit = read_spectrum_cache(path, n)) return std::move(*hit);
  auto s = lambda_hat(table, n);
  write_spectrum_cache(path, s);
  return s;
}

}  // namespace pspc
