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

#ifndef WBC_SIM_REWARDS_H_
#define WBC_SIM_REWARDS_H_

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "wbc/sim/robot.h"

namespace wbc::sim {

struct RewardCoefficients {
  double manip_following = 0.5;
  double manip_energy = 0.004;
  double loco_velocity = 0.5;
  double loco_yaw = 0.15;
  double loco_energy = 0.00005;
  double loco_alive = 0.2;
  double loco_alive_velocity = 0.5;
  bool operator==(const RewardCoefficients&) const = default;
};

// The three terms of each reward stream, kept separate for diagnostics.
struct RewardTerms {
  double manip_following = 0.0;
  double manip_energy = 0.0;
  double manip_alive = 0.0;
  double loco_following = 0.0;
  double loco_energy = 0.0;
  double loco_alive = 0.0;

  double manip() const { return manip_following + manip_energy + manip_alive; }
  double loco() const { return loco_following + loco_energy + loco_alive; }
};

// L1 norm of position error plus L1 norm of the axis-angle vector of
// target * actual^-1.
double PoseErrorL1(const Eigen::Vector3d& position, const Eigen::Quaterniond& orientation,
                   const Eigen::Vector3d& target_position,
                   const Eigen::Quaterniond& target_orientation);

struct RewardInputs {
  double vx = 0.0;        // base forward velocity (heading frame)
  double yaw_rate = 0.0;  // world-z angular velocity
  double vx_command = 0.0;
  double yaw_rate_command = 0.0;
  double ee_pose_error = 0.0;  // PoseErrorL1
  JointVector torque = JointVector::Zero();
  JointVector velocity = JointVector::Zero();
};

RewardTerms ComputeRewards(const RewardInputs& in, const RewardCoefficients& c);

}  // namespace wbc::sim

#endif  // WBC_SIM_REWARDS_H_
