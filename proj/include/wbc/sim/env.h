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

#ifndef WBC_SIM_ENV_H_
#define WBC_SIM_ENV_H_

#include <array>
#include <cstdint>
#include <memory>
#include <span>

#include "wbc/io/binary.h"
#include "wbc/nn/tensor.h"
#include "wbc/sim/command.h"
#include "wbc/sim/config.h"
#include "wbc/sim/params.h"
#include "wbc/sim/rewards.h"
#include "wbc/sim/robot.h"
#include "wbc/sim/terrain.h"

namespace wbc::sim {

using Observation = std::array<double, kObsDim>;

// Immutable data shared by every environment instance.
struct EnvContext {
  SimConfig sim;
  CommandRanges commands = CommandRanges::Train();
  EnvParamRanges params = EnvParamRanges::Train();
  // Ranges used to normalize the privileged vector (always the training table).
  EnvParamRanges normalization = EnvParamRanges::Train();
  RewardCoefficients rewards;
  Terrain terrain;
};

enum class Termination { kNone, kHeight, kRoll, kPitch, kTilt, kTimeout, kFault };

// Early-termination rules plus the episode step limit. `command_local` is the
// current EE command position in the command frame.
Termination CheckTermination(const RobotState& state, double ground_height,
                             const Eigen::Vector3d& command_local, int step_count,
                             const SimConfig& config);

struct StepDiagnostics {
  RewardTerms terms;
  double vel_error = 0.0;     // |vx - vx_cmd| + |yaw_rate - yaw_rate_cmd|
  double ee_error = 0.0;      // L1 pose error
  double energy = 0.0;        // sum over 18 joints of |tau * qd|
  double base_ang_acc = 0.0;  // |delta omega| / control_dt
  Eigen::Vector3d ee_position = Eigen::Vector3d::Zero();       // world
  Eigen::Vector3d command_position = Eigen::Vector3d::Zero();  // world
  bool command_clamped = false;
};

struct StepResult {
  Observation obs{};
  double r_manip = 0.0;
  double r_loco = 0.0;
  Termination termination = Termination::kNone;
  JointVector torque = JointVector::Zero();
  JointVector velocity = JointVector::Zero();
  StepDiagnostics diag;

  bool done() const { return termination != Termination::kNone; }
  bool timeout() const { return termination == Termination::kTimeout; }
  bool fault() const { return termination == Termination::kFault; }
};

class Env {
 public:
  Env(std::shared_ptr<const EnvContext> context, uint64_t seed);

  // New parameters, pose, and command. Deterministic given the RNG stream.
  void Reset();
  StepResult Step(std::span<const double> action);

  Observation Observe() const;
  // Privileged vector normalized by the training ranges.
  std::array<double, kPrivDim> Privileged() const;

  const RobotState& state() const { return state_; }
  RobotState& mutable_state() { return state_; }
  const EnvParams& params() const { return params_; }
  void set_params(const EnvParams& p) { params_ = p; }
  const CommandState& command() const { return command_; }
  void set_command(const CommandState& c) { command_ = c; }
  int step_count() const { return step_count_; }
  const EnvContext& context() const { return *context_; }
  Rng& rng() { return rng_; }
  int command_failures() const { return command_failures_; }

  // Current EE command in the command frame.
  Eigen::Vector3d CommandLocal() const;
  Eigen::Vector3d CommandWorld() const;
  Eigen::Quaterniond CommandOrientationWorld() const;

  void Serialize(io::BinaryWriter& w) const;
  void Deserialize(io::BinaryReader& r);

 private:
  void ResampleCommand();
  double GroundUnderBase() const;

  std::shared_ptr<const EnvContext> context_;
  Rng rng_;
  RobotState state_;
  EnvParams params_;
  CommandState command_;
  std::array<double, kNumJoints> last_action_{};
  int step_count_ = 0;
  int command_failures_ = 0;
};

}  // namespace wbc::sim

#endif  // WBC_SIM_ENV_H_
