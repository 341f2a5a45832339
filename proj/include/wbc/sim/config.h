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

#ifndef WBC_SIM_CONFIG_H_
#define WBC_SIM_CONFIG_H_

#include <array>
#include <vector>

#include <Eigen/Core>

namespace wbc::sim {

inline constexpr int kNumLegJoints = 12;
inline constexpr int kNumArmJoints = 6;
inline constexpr int kNumJoints = kNumLegJoints + kNumArmJoints;
inline constexpr int kNumFeet = 4;
inline constexpr int kObsDim = 72;
inline constexpr int kPrivDim = 8;

// Observation layout (offsets into the 72-dim vector).
namespace obs {
inline constexpr int kBase = 0;         // roll, pitch, body angular velocity (5)
inline constexpr int kArm = 5;          // arm q (6), arm qd (6)
inline constexpr int kLeg = 17;         // leg q - default (12), leg qd (12), contacts (4)
inline constexpr int kLastAction = 45;  // leg action (12), arm action (6)
inline constexpr int kEeCommand = 63;   // spherical (l, pitch, yaw) (3), orientation quat (4)
inline constexpr int kVelCommand = 70;  // v_x, yaw rate (2)
}  // namespace obs

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool Contains(double x) const { return x >= lo && x <= hi; }
  bool operator==(const Interval&) const = default;
};

// Uniform sampling support for the command variables. The yaw-rate entry is a
// union of intervals because the held-out range excludes the middle band.
struct CommandRanges {
  Interval vx;
  std::vector<Interval> yaw_rate;
  Interval length;
  Interval pitch;
  Interval yaw;
  Interval duration;

  static CommandRanges Train();
  static CommandRanges Test();
  bool operator==(const CommandRanges&) const = default;
};

struct EnvParamRanges {
  Interval base_payload;
  Interval ee_payload;
  Interval com_offset;  // applied independently to x, y, z
  Interval arm_strength;
  Interval leg_strength;
  Interval friction;

  static EnvParamRanges Train();
  static EnvParamRanges Test();
  bool operator==(const EnvParamRanges&) const = default;
};

struct TerrainConfig {
  int cells_x = 160;
  int cells_y = 160;
  double cell_size = 0.1;
  int octaves = 2;
  double lacunarity = 2.0;
  double gain = 0.25;
  double frequency = 10.0;  // lattice periods across the tile for octave 0
  double amplitude = 0.15;
  bool operator==(const TerrainConfig&) const = default;
};

// Every physical constant of the reduced-order model.
struct SimConfig {
  // Base rigid body.
  double base_mass = 12.0;
  Eigen::Vector3d base_inertia{0.15, 0.35, 0.4};
  double gravity = 9.81;

  // Legs: order FR, FL, RR, RL; joints per leg: abduction, hip, knee.
  std::array<Eigen::Vector3d, 4> hip_positions{
      Eigen::Vector3d(0.1881, -0.04675, 0.0), Eigen::Vector3d(0.1881, 0.04675, 0.0),
      Eigen::Vector3d(-0.1881, -0.04675, 0.0), Eigen::Vector3d(-0.1881, 0.04675, 0.0)};
  double hip_offset = 0.08;
  double thigh_length = 0.213;
  double calf_length = 0.213;
  double foot_radius = 0.02;
  double leg_joint_inertia = 0.01;

  // Ground contact.
  double contact_stiffness = 2000.0;
  double contact_damping = 50.0;
  double tangential_damping = 300.0;
  double contact_force_threshold = 1.0;

  // PD actuation.
  double leg_kp = 50.0;
  double leg_kd = 1.0;
  double arm_kp = 5.0;
  double arm_kd = 0.5;
  std::array<double, 3> leg_torque_limits{23.7, 23.7, 35.55};
  std::array<double, 6> arm_torque_limits{10.0, 10.0, 10.0, 5.0, 5.0, 5.0};

  std::array<double, 12> default_leg_pose{-0.1, 0.8, -1.5, 0.1, 0.8, -1.5,
                                          -0.1, 0.8, -1.5, 0.1, 0.8, -1.5};
  std::array<double, 6> default_arm_pose{0, 0, 0, 0, 0, 0};
  double leg_action_scale = 0.45;
  std::array<double, 6> arm_action_scale{2.1, 1.0, 1.0, 2.1, 1.7, 2.1};

  // Arm: waist (z), shoulder (y), elbow (y), forearm roll (x), wrist pitch (y),
  // wrist roll (x). Offsets are from the previous joint in its zero pose.
  Eigen::Vector3d arm_mount{0.1, 0.0, 0.05};
  std::array<Eigen::Vector3d, 6> arm_joint_offsets{
      Eigen::Vector3d(0.0, 0.0, 0.0), Eigen::Vector3d(0.0, 0.0, 0.072),
      Eigen::Vector3d(0.05, 0.0, 0.25), Eigen::Vector3d(0.125, 0.0, 0.0),
      Eigen::Vector3d(0.125, 0.0, 0.0), Eigen::Vector3d(0.065, 0.0, 0.0)};
  Eigen::Vector3d ee_offset{0.1, 0.0, 0.0};
  std::array<double, 6> arm_link_masses{0.4, 0.3, 0.2, 0.1, 0.1, 0.05};
  double arm_joint_inertia = 0.05;

  // Command frame: origin = (base x, base y, command_height) + yaw-rotated offset.
  double command_height = 0.53;
  Eigen::Vector3d command_origin_offset{0.1, 0.0, 0.0};

  // Command collision checking.
  Eigen::Vector3d body_half_extents{0.19, 0.047, 0.057};
  double leg_capsule_radius = 0.04;
  double ground_clearance = 0.05;
  int collision_samples = 32;
  int max_command_attempts = 100;

  // Timing.
  double control_dt = 0.02;
  int substeps = 4;

  // Termination.
  double min_base_height = 0.28;
  double roll_limit = 0.2;
  double pitch_limit = 0.2;
  double safety_tilt_limit = 0.6;
  int max_episode_steps = 1000;

  // Reset.
  double reset_joint_noise = 0.05;
  double initial_base_speed = 0.0;  // perturbation variant: random horizontal direction

  // Observation scaling.
  double obs_ang_vel_scale = 0.25;
  double obs_joint_vel_scale = 0.05;

  TerrainConfig terrain;
};

}  // namespace wbc::sim

#endif  // WBC_SIM_CONFIG_H_
