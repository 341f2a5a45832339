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

#ifndef WBC_TRAIN_SCHEDULE_H_
#define WBC_TRAIN_SCHEDULE_H_

#include <string>
#include <string_view>

#include "wbc/nn/tensor.h"

namespace wbc::train {

enum class TrainMode {
  kRoa,
  kRma,
  kDomainRandomization,
  kExpertWithReg,
  kExpertNoReg,
  kSeparate,
  kUncoordinated,
};

TrainMode ParseTrainMode(std::string_view name);
std::string_view TrainModeName(TrainMode mode);

struct ModeTraits {
  bool encoder = false;     // privileged encoder mu
  bool adaptation = false;  // history adaptation module phi
  bool split_policy = false;
  bool beta_zero = false;   // no cross-stream credit at any step
};
ModeTraits TraitsOf(TrainMode mode);

enum class LatentSource { kZero, kEncoder, kAdaptation };
std::string_view LatentSourceName(LatentSource source);
// Latent used when evaluating a trained policy of this mode.
LatentSource EvalLatentSource(TrainMode mode);

// lambda(itr) = min(max((itr - start) / ramp, 0), 1).
struct LambdaSchedule {
  double start = 5000;
  double ramp = 5000;
  double operator()(double itr) const;
};

// True on the iterations whose rollouts act with the adaptation latent.
bool UsesAdaptationLatent(long itr, int period);

struct ScheduleConfig {
  TrainMode mode = TrainMode::kRoa;
  int iterations = 1500;
  long steps_per_iteration = 40L * 256;  // env steps collected per iteration
  double t_mix_fraction = 0.4;           // T_mix as a share of all env steps
  bool advantage_mixing = true;          // false: beta fixed at 1
  double lambda_start_fraction = 0.5;
  double lambda_ramp_fraction = 0.5;
  int adaptation_period = 20;  // H
  double rma_phase1_fraction = 0.7;
};

struct IterationPlan {
  LatentSource act = LatentSource::kZero;
  bool update_policy = false;      // pi, mu, critic
  bool update_adaptation = false;  // phi
  double lambda = 0.0;
  double beta = 0.0;
};

// Everything the driver does at `itr` follows from this pure function.
IterationPlan PlanIteration(const ScheduleConfig& config, long itr, double global_step);
LambdaSchedule MakeLambdaSchedule(const ScheduleConfig& config);
double TMix(const ScheduleConfig& config);
long RmaPhaseOneIterations(const ScheduleConfig& config);

}  // namespace wbc::train

#endif  // WBC_TRAIN_SCHEDULE_H_
