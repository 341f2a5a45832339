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

#ifndef WBC_IO_CONFIG_H_
#define WBC_IO_CONFIG_H_

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wbc/bench/eval_config.h"
#include "wbc/policy/networks.h"
#include "wbc/rl/ppo.h"
#include "wbc/sim/config.h"
#include "wbc/sim/env.h"
#include "wbc/sim/rewards.h"
#include "wbc/train/trainer.h"

namespace wbc::io {

// Invalid configuration text. The message carries the key path and, when the
// problem has a position in the source, its line and column.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Precision { kFloat32, kFloat64 };

Precision ParsePrecision(std::string_view name);
std::string_view PrecisionName(Precision p);

// Everything that determines a run. Serialized in full into checkpoints and
// log headers.
struct RunConfig {
  train::TrainConfig train;
  Precision precision = Precision::kFloat32;
  uint64_t terrain_seed = 3;
  std::string output_dir = "runs";
  sim::SimConfig sim;
  sim::CommandRanges commands_train = sim::CommandRanges::Train();
  sim::CommandRanges commands_test = sim::CommandRanges::Test();
  sim::EnvParamRanges params_train = sim::EnvParamRanges::Train();
  sim::EnvParamRanges params_test = sim::EnvParamRanges::Test();
  sim::RewardCoefficients rewards;
  policy::NetworkConfig network;
  rl::PpoConfig ppo;
  bench::EvalConfig eval;
};

// YAML text to config. Missing keys keep their defaults; unknown keys, type
// mismatches, and inverted ranges raise ConfigError.
RunConfig ParseConfig(std::string_view text);
RunConfig LoadConfigFile(const std::string& path);

// Effective configuration with every key present. ParseConfig(SerializeConfig(c))
// reproduces c exactly.
std::string SerializeConfig(const RunConfig& config);

// Applies one `dotted.key=value` override, e.g. `train.iterations=10`.
void ApplyOverride(RunConfig& config, std::string_view assignment);

bool SameConfig(const RunConfig& a, const RunConfig& b);

// Shared environment data for the given range set (train or test).
std::shared_ptr<sim::EnvContext> MakeEnvContext(const RunConfig& config,
                                                bench::RangeSet ranges);

}  // namespace wbc::io

#endif  // WBC_IO_CONFIG_H_
