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

#ifndef WBC_RL_VEC_ENV_H_
#define WBC_RL_VEC_ENV_H_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "wbc/io/binary.h"
#include "wbc/policy/networks.h"

namespace wbc::rl {

struct EnvSpec {
  int obs_dim = 0;
  int priv_dim = 0;
  policy::ActionLayout actions;
};

// One synchronous step of N environments. Columns index environments. Done
// environments are reset before returning, so `obs` is the first observation
// of the next episode for them.
struct StepOutput {
  Eigen::MatrixXd obs;
  Eigen::MatrixXd priv;
  Eigen::VectorXd r_manip;
  Eigen::VectorXd r_loco;
  std::vector<uint8_t> terminated;  // failure or fault
  std::vector<uint8_t> timeout;     // step limit reached
  // Per-step diagnostics of the transition just taken.
  Eigen::VectorXd vel_error;
  Eigen::VectorXd ee_error;
  Eigen::VectorXd energy;
  Eigen::VectorXd base_ang_acc;

  void Resize(int obs_dim, int priv_dim, int n);
  bool done(int i) const { return terminated[i] || timeout[i]; }
};

class VecEnv {
 public:
  virtual ~VecEnv() = default;

  virtual const EnvSpec& spec() const = 0;
  virtual int num_envs() const = 0;
  // Resets every environment and fills observations.
  virtual void ResetAll() = 0;
  virtual const Eigen::MatrixXd& observations() const = 0;
  virtual const Eigen::MatrixXd& privileged() const = 0;
  // `actions` is action_dim x N.
  virtual const StepOutput& Step(const Eigen::MatrixXd& actions) = 0;

  virtual void Serialize(io::BinaryWriter& w) const = 0;
  virtual void Deserialize(io::BinaryReader& r) = 0;
};

}  // namespace wbc::rl

#endif  // WBC_RL_VEC_ENV_H_
