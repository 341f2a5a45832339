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

#ifndef WBC_SIM_TRAJECTORY_H_
#define WBC_SIM_TRAJECTORY_H_

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wbc/sim/env.h"

namespace wbc::sim {

// Everything a step produced that replay must reproduce.
struct RecordedStep {
  std::array<double, kNumJoints> action{};
  Observation obs{};
  double r_manip = 0.0;
  double r_loco = 0.0;
  int32_t termination = 0;
  std::array<double, kNumJoints> torque{};
  std::array<double, kNumJoints> velocity{};
  double vel_error = 0.0;
  double ee_error = 0.0;
  double energy = 0.0;
  double base_ang_acc = 0.0;
};

RecordedStep MakeRecordedStep(std::span<const double> action, const StepResult& result);

// One episode: the environment state right after reset, then every step.
// `context_text` identifies the environment configuration for replay.
struct Trajectory {
  std::string context_text;
  std::vector<uint8_t> initial_state;
  std::vector<RecordedStep> steps;
};

inline constexpr char kTrajectoryMagic[8] = {'W', 'B', 'C', 'T', 'R', 'A', 'J', '\0'};
inline constexpr uint32_t kTrajectoryVersion = 1;

// File of one or more trajectories with a trailing CRC-32.
void WriteTrajectories(const std::string& path, const std::vector<Trajectory>& trajectories);
std::vector<Trajectory> ReadTrajectories(const std::string& path);

struct ReplayReport {
  bool identical = true;
  int steps = 0;
  int first_mismatch = -1;  // step index, -1 when identical
  std::string detail;
};

// Re-simulates the recorded actions from the recorded initial state and
// compares every recorded quantity bit for bit.
ReplayReport Replay(const Trajectory& trajectory, std::shared_ptr<const EnvContext> context);

}  // namespace wbc::sim

#endif  // WBC_SIM_TRAJECTORY_H_
