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

// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Usage: acceptance_test [quick|full] [cache-dir]

#include <cstdlib>
#include <iostream>
#include <string>

#include "pspc_cli/verify.hpp"

int main(int argc, char** argv) {
  pspc::cli::VerifyOptions opts;
  opts.profile = pspc::cli::Profile::kFull;
  if (argc > 1) {
    const std::string p = argv[1];
    if (p == "quick") {
      opts.profile = pspc::cli::Profile::kQuick;
    } else if (p != "full") {
      std::cerr << "usage: acceptance_test [quick|full] [cache-dir]\n";
      return 2;
    }
  }
  if (argc > 2) {
    opts.cache_dir = argv[2];
  } else if (const char* env = std::getenv("PSPC_CACHE_DIR")) {
    opts.cache_dir = env;
  }

  int failed = 0;
  const auto results = pspc::cli::run_acceptance(opts, [&](const pspc::cli::CriterionResult& r) {
    std::cout << pspc::cli::format_result_line(r) << std::endl;
    if (!r.passed) ++failed;
  });
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
