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

#include <functional>
#include <string>
#include <vector>

namespace pspc::cli {

enum class Profile {
  kQuick,  // reduced grids for the heaviest criteria
  kFull,   // the acceptance grids as stated
};

struct VerifyOptions {
  Profile profile = Profile::kFull;
  std::string cache_dir;
  unsigned threads = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;
};

using ResultSink = std::function<void(const CriterionResult&)>;

// Runs the ten acceptance criteria in order. A criterion passes when its
// numeric check holds and it finished within its runtime limit.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options, const ResultSink& sink = {});

// "[PASS] 3 pnt-sanity (0.41 s / 10 s): ..."
std::string format_result_line(const CriterionResult& result);

}  // namespace pspc::cli
