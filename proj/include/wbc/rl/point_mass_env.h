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

#ifndef WBC_RL_POINT_MASS_ENV_H_
#define WBC_RL_POINT_MASS_ENV_H_

#include <array>
#include <vector>

#include "wbc/rl/vec_env.h"

namespace wbc::rl {

struct PointMassConfig {
  double dt = 0.1;
  double drag = 2.0;
  double max_force = 1.0;
  double reward_sharpness = 2.0;
  double start_range = 1.0;  // positions and targets uniform in [-range, range]^2
  int episode_length = 50;
};

// Planar point mass reaching a target. The x force is the "leg" action and is
// scored by the loco stream; the y force is the "arm" action scored by the
// manip stream. Observation: (target - position, velocity).
class PointMassVecEnv : public VecEnv {
 public:
  struct State {
    std::array<double, 2> pos{};
    std::array<double, 2> vel{};
    std::array<double, 2> target{};
    int steps = 0;
  };

  PointMassVecEnv(int num_envs, uint64_t seed, PointMassConfig config = {});

  const EnvSpec& spec() const override { return spec_; }
  int num_envs() const override { return static_cast<int>(states_.size()); }
  void ResetAll() override;
  const Eigen::MatrixXd& observations() const override { return out_.obs; }
  const Eigen::MatrixXd& privileged() const override { return out_.priv; }
  const StepOutput& Step(const Eigen::MatrixXd& actions) override;

  State& state(int i) { return states_[i]; }
  const PointMassConfig& config() const { return config_; }
  void Observe(int i);

  void Serialize(io::BinaryWriter& w) const override;
  void Deserialize(io::BinaryReader& r) override;

 private:
  void Reset(int i);

  PointMassConfig config_;
  EnvSpec spec_;
  Rng rng_;
  std::vector<State> states_;
  StepOutput out_;
};

// Saturated PD controller that drives the mass to its target.
std::array<double, 2> PointMassOracleAction(const PointMassVecEnv::State& s,
                                            const PointMassConfig& config);

}  // namespace wbc::rl

#endif  // WBC_RL_POINT_MASS_ENV_H_
