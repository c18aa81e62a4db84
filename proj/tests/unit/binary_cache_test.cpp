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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "pspc/binary_cache.hpp"
#include "pspc/spectrum.hpp"

namespace pspc {
namespace {

namespace fs = std::filesystem;

class CacheDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pspc_cache_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

TEST_F(CacheDir, LambdaRoundTrip) {
  const auto t = build_lambda_table(5000);
  const auto path = lambda_cache_path(dir_, 5000);
  write_lambda_cache(path, t);
  const auto back = read_lambda_cache(path, 5000);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, t);
  EXPECT_FALSE(read_lambda_cache(path, 4999).has_value());
}

TEST_F(CacheDir, SpectrumRoundTrip) {
  const auto t = build_lambda_table(257);
  const auto s = lambda_hat(t, 257);
  const auto path = spectrum_cache_path(dir_, 257);
  write_spectrum_cache(path, s);
  const auto back = read_spectrum_cache(path, 257);
  ASSERT_TRUE(back.has_value());
  ASSERT_EQ(back->size(), s.size());
  for (std::uint64_t i = 0; i < s.size(); ++i) EXPECT_EQ((*back)[i], s[i]);
}

TEST_F(CacheDir, BadMagicIsRejectedAndRebuilt) {
  const auto path = lambda_cache_path(dir_, 100);
  const auto fresh = cached_lambda_table(dir_, 100);
  {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(0);
    f.write("XXXX", 4);
  }
  EXPECT_FALSE(read_lambda_cache(path, 100).has_value());
  EXPECT_EQ(cached_lambda_table(dir_, 100), fresh);
  EXPECT_TRUE(read_lambda_cache(path, 100).has_value());
}

TEST_F(CacheDir, BadVersionIsRejected) {
  const auto path = spectrum_cache_path(dir_, 64);
  const auto t = build_lambda_table(64);
  write_spectrum_cache(path, lambda_hat(t, 64));
  {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(4);
    const char v[2] = {9, 0};
    f.write(v, 2);
  }
  EXPECT_FALSE(read_spectrum_cache(path, 64).has_value());
}

TEST_F(CacheDir, TruncatedFileIsRejected) {
  const auto path = lambda_cache_path(dir_, 1000);
  write_lambda_cache(path, build_lambda_table(1000));
  fs::resize_file(path, fs::file_size(path) - 8);
  EXPECT_FALSE(read_lambda_cache(path, 1000).has_value());
  EXPECT_FALSE(read_lambda_cache(dir_ / "missing.pslt", 1000).has_value());
}

TEST_F(CacheDir, WarmCacheGivesSameSpectrum) {
  const auto t = cached_lambda_table(dir_, 1024);
  const auto first = cached_spectrum(dir_, t, 1024);
  const auto second = cached_spectrum(dir_, t, 1024);
  for (std::uint64_t i = 0; i < first.size(); ++i) EXPECT_EQ(first[i], second[i]);
}

TEST(Cache, EmptyDirDisablesCaching) {
  EXPECT_EQ(cached_lambda_table("", 50), build_lambda_table(50));
}

}  // namespace
}  // namespace pspc
