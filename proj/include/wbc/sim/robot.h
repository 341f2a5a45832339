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

#ifndef WBC_SIM_ROBOT_H_
#define WBC_SIM_ROBOT_H_

#include <array>
#include <span>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "wbc/sim/config.h"
#include "wbc/sim/params.h"
#include "wbc/sim/terrain.h"

namespace wbc::sim {

using LegVector = Eigen::Matrix<double, kNumLegJoints, 1>;
using ArmVector = Eigen::Matrix<double, kNumArmJoints, 1>;
using JointVector = Eigen::Matrix<double, kNumJoints, 1>;

struct RobotState {
  Eigen::Vector3d base_pos = Eigen::Vector3d::Zero();
  Eigen::Quaterniond base_quat = Eigen::Quaterniond::Identity();
  Eigen::Vector3d base_lin_vel = Eigen::Vector3d::Zero();  // world frame
  Eigen::Vector3d base_ang_vel = Eigen::Vector3d::Zero();  // body frame
  LegVector leg_q = LegVector::Zero();
  LegVector leg_qd = LegVector::Zero();
  ArmVector arm_q = ArmVector::Zero();
  ArmVector arm_qd = ArmVector::Zero();
  std::array<bool, kNumFeet> contact{};
  double time = 0.0;

  bool AllFinite() const;
};

// Z-Y-X Euler angles of the base.
double Roll(const Eigen::Quaterniond& q);
double Pitch(const Eigen::Quaterniond& q);
double Yaw(const Eigen::Quaterniond& q);

enum class JointKind { kLeg, kArm };

// tau = strength * (kp * (target - q) - kd * qd), clipped to +-limit.
double PdTorque(double q, double qd, double target, JointKind kind, double strength,
                double limit, const SimConfig& config);

// target = default + clip(action, -1, 1) * delta_range. Leg slots 0..11,
// arm slots 12..17.
JointVector ActionToTargets(std::span<const double> action, const SimConfig& config);

struct LegKinematics {
  Eigen::Vector3d foot;      // body frame, foot sphere center
  Eigen::Matrix3d jacobian;  // d foot / d (abduction, hip, knee), body frame
};
LegKinematics LegForward(int leg, const Eigen::Vector3d& q, const SimConfig& config);

struct ArmKinematics {
  std::array<Eigen::Vector3d, kNumArmJoints> joint_pos;   // body frame
  std::array<Eigen::Vector3d, kNumArmJoints> joint_axis;  // body frame
  std::array<Eigen::Vector3d, kNumArmJoints> link_com;    // body frame
  Eigen::Vector3d ee_pos;                                 // body frame
  Eigen::Quaterniond ee_quat;                             // body frame
};
ArmKinematics ArmForward(const ArmVector& q, const SimConfig& config);

struct EePose {
  Eigen::Vector3d position;
  Eigen::Quaterniond orientation;
};
EePose EeWorldPose(const RobotState& state, const SimConfig& config);

// Per-joint torque and velocity after a control step (energy accounting).
struct ActuationLog {
  JointVector torque = JointVector::Zero();
  JointVector velocity = JointVector::Zero();
};

// Advances the state by one physics substep of config.control_dt /
// config.substeps using semi-implicit Euler.
void PhysicsSubstep(RobotState& state, const JointVector& targets, const EnvParams& params,
                    const Terrain& terrain, const SimConfig& config, ActuationLog* log);

// Height of the base above the default-pose feet at static contact
// equilibrium on flat ground.
double NominalBaseHeight(const EnvParams& params, const SimConfig& config);

}  // namespace wbc::sim

#endif  // WBC_SIM_ROBOT_H_
