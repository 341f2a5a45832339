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

#ifndef WBC_TRAIN_RUNNER_H_
#define WBC_TRAIN_RUNNER_H_

#include <vector>

#include <Eigen/Core>

#include "wbc/policy/networks.h"
#include "wbc/rl/vec_env.h"
#include "wbc/train/trainer.h"

namespace wbc::train {

// Deterministic closed-loop execution of a trained bundle on a VecEnv. Keeps
// the per-env observation/action history the adaptation module reads.
template <typename T>
class PolicyRunner {
 public:
  PolicyRunner(const PolicyBundle<T>& bundle, const rl::EnvSpec& spec, int num_envs);
  PolicyRunner(const PolicyBundle<T>& bundle, const rl::EnvSpec& spec, int num_envs,
               LatentSource source);

  // Mean actions for the current observations; also caches both latents.
  const Eigen::MatrixXd& Act(const Eigen::MatrixXd& obs, const Eigen::MatrixXd& priv);
  // Records the transition that produced `out` and clears finished envs.
  void Observe(const Eigen::MatrixXd& obs_before, const rl::StepOutput& out);
  void Reset();

  LatentSource source() const { return source_; }
  // Per-env ||z_mu - z_phi|| from the last Act call; empty without both modules.
  const Eigen::VectorXd& last_gaps() const { return last_gaps_; }

 private:
  const PolicyBundle<T>& bundle_;
  LatentSource source_;
  int action_dim_;
  std::vector<policy::HistoryBuffer> histories_;
  Eigen::MatrixXd prev_actions_;
  Eigen::MatrixXd actions_;
  Eigen::VectorXd last_gaps_;
};

// Sum of both reward streams per episode, averaged over `num_envs` episodes
// that all start at ResetAll and end together at the step limit or earlier.
template <typename T>
double MeanEpisodeReturn(const PolicyBundle<T>& bundle, rl::VecEnv& env, int max_steps);

extern template class PolicyRunner<float>;
extern template class PolicyRunner<double>;

}  // namespace wbc::train

#endif  // WBC_TRAIN_RUNNER_H_
