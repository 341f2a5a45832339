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

#ifndef WBC_SIM_COMMAND_H_
#define WBC_SIM_COMMAND_H_

#include <stdexcept>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "wbc/nn/tensor.h"
#include "wbc/sim/config.h"
#include "wbc/sim/robot.h"
#include "wbc/sim/terrain.h"

namespace wbc::sim {

// End-effector positions are held in the command frame: origin at
// (base x, base y, command_height) plus the yaw-rotated origin offset, axes
// rotated by base yaw only. World targets therefore move with the base's
// planar pose but ignore its height, roll and pitch.
struct CommandState {
  Eigen::Vector3d start = Eigen::Vector3d::Zero();  // command frame, m
  Eigen::Vector3d end = Eigen::Vector3d::Zero();    // command frame, m
  Eigen::Quaterniond orientation = Eigen::Quaterniond::Identity();  // command frame
  double duration = 1.0;  // T_traj, s
  double elapsed = 0.0;   // s
  double vx = 0.0;        // m/s
  double yaw_rate = 0.0;  // rad/s
};

class CommandSamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Spherical {
  double length = 0.0;
  double pitch = 0.0;
  double yaw = 0.0;
};

// x = l cos p cos y, y = l cos p sin y, z = l sin p.
Eigen::Vector3d SphericalToCartesian(const Spherical& s);
Spherical CartesianToSpherical(const Eigen::Vector3d& c);

Eigen::Vector3d CommandOrigin(const Eigen::Vector2d& base_xy, double base_yaw,
                              const SimConfig& config);
Eigen::Vector3d CommandFrameToWorld(const Eigen::Vector3d& local, const Eigen::Vector2d& base_xy,
                                    double base_yaw, const SimConfig& config);
Eigen::Vector3d WorldToCommandFrame(const Eigen::Vector3d& world, const Eigen::Vector2d& base_xy,
                                    double base_yaw, const SimConfig& config);
// Rejects length <= 0.
Eigen::Vector3d SphericalToWorld(const Spherical& s, const Eigen::Vector2d& base_xy,
                                 double base_yaw, const SimConfig& config);

// Uniform sample from the union of intervals (weighted by length).
double SampleUnion(const std::vector<Interval>& intervals, Rng& rng);
Eigen::Quaterniond UniformRotation(Rng& rng);

void ValidateRanges(const CommandRanges& ranges);

// True when the straight segment (start, end] in the command frame stays
// above the terrain and outside the body box and leg capsules, checked at
// config.collision_samples evenly spaced points.
bool SegmentCollisionFree(const Eigen::Vector3d& start, const Eigen::Vector3d& end,
                          const RobotState& state, const Terrain& terrain,
                          const SimConfig& config);

// Samples all command variables. The EE end point is resampled until its
// segment from `ee_start` is collision free; throws CommandSamplingError after
// config.max_command_attempts failures.
CommandState SampleCommand(const CommandRanges& ranges, const Eigen::Vector3d& ee_start,
                           const RobotState& state, const Terrain& terrain,
                           const SimConfig& config, Rng& rng);

struct InterpolatedCommand {
  Eigen::Vector3d position;  // command frame
  bool clamped = false;      // t was outside [0, duration]
};

// Straight-line interpolation from start (t = 0) to end (t = duration).
InterpolatedCommand InterpolateEeCommand(const CommandState& cmd, double t);

}  // namespace wbc::sim

#endif  // WBC_SIM_COMMAND_H_
