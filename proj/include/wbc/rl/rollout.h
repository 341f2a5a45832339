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

#ifndef WBC_RL_ROLLOUT_H_
#define WBC_RL_ROLLOUT_H_

#include <cstdint>

#include <Eigen/Core>

#include "wbc/nn/tensor.h"
#include "wbc/rl/gae.h"

namespace wbc::rl {

using DoneMatrix = Eigen::Matrix<uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

// One iteration of experience from N environments over T steps. Per-sample
// matrices hold one column per transition, column j = t * N + i. Per-stream
// scalars are T x N.
template <typename T>
struct RolloutBatch {
  int steps = 0;
  int envs = 0;

  nn::Matrix<T> obs;
  nn::Matrix<T> priv;
  nn::Matrix<T> history;  // empty when the run has no adaptation module
  nn::Matrix<T> z;        // latent fed to the policy while acting
  nn::Matrix<T> z_phi;    // adaptation latent, empty when unavailable
  nn::Matrix<T> actions;
  nn::RowVector<T> logp_leg;
  nn::RowVector<T> logp_arm;

  Eigen::MatrixXd r_manip;  // includes timeout bootstrap
  Eigen::MatrixXd r_loco;
  Eigen::MatrixXd v_manip;
  Eigen::MatrixXd v_loco;
  DoneMatrix dones;
  DoneMatrix timeouts;
  Eigen::VectorXd last_v_manip;
  Eigen::VectorXd last_v_loco;

  Eigen::MatrixXd adv_manip;  // normalized
  Eigen::MatrixXd adv_loco;
  Eigen::MatrixXd ret_manip;
  Eigen::MatrixXd ret_loco;

  int size() const { return steps * envs; }
  int step_of(int j) const { return j / envs; }
  int env_of(int j) const { return j % envs; }

  void Allocate(int steps, int envs, int obs_dim, int priv_dim, int history_dim,
                int latent_dim, bool with_phi, int action_dim);
  // GAE per stream; returns are computed before advantage normalization.
  void ComputeAdvantages(const GaeConfig& config, bool parallel, bool normalize);
};

extern template struct RolloutBatch<float>;
extern template struct RolloutBatch<double>;

}  // namespace wbc::rl

#endif  // WBC_RL_ROLLOUT_H_
