// Copyright 2026 The WBC Authors
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

#ifndef WBC_BENCH_EVAL_CONFIG_H_
#define WBC_BENCH_EVAL_CONFIG_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace wbc::bench {

enum class RangeSet { kTrain, kTest };

RangeSet ParseRangeSet(std::string_view name);
std::string_view RangeSetName(RangeSet set);

struct EvalConfig {
  RangeSet ranges = RangeSet::kTest;  // command and env-param tables
  int episodes = 1000;                // per seed
  std::vector<uint64_t> seeds{1};     // environment seeds
  int num_envs = 100;                 // episodes simulated side by side
  double initial_base_speed = 0.0;    // > 0 gives the push-recovery variant
  int workspace_targets = 1000;
  double hold_time = 3.0;             // s per workspace target
  double achieve_threshold = 0.1;     // m
  Eigen::Vector3d enclosing_box{0.6, 0.35, 0.5};
  bool operator==(const EvalConfig&) const = default;
};

}  // namespace wbc::bench

#endif  // WBC_BENCH_EVAL_CONFIG_H_
