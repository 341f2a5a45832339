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

#ifndef WBC_RL_PPO_H_
#define WBC_RL_PPO_H_

#include <span>
#include <vector>

#include "wbc/io/binary.h"
#include "wbc/nn/adam.h"
#include "wbc/nn/dense_net.h"
#include "wbc/policy/networks.h"
#include "wbc/rl/gae.h"
#include "wbc/rl/mix_loss.h"
#include "wbc/rl/rollout.h"

namespace wbc::rl {

struct PpoConfig {
  double clip = 0.2;
  int epochs = 5;
  int minibatches = 4;
  double value_coef = 1.0;
  double max_grad_norm = 1.0;  // <= 0 disables clipping
  bool normalize_advantages = true;
  GaeConfig gae;
  nn::AdamConfig adam;
  bool operator==(const PpoConfig&) const = default;
};

// Random partition of [0, n) into k nearly equal parts.
std::vector<std::vector<int>> MinibatchPartition(int n, int k, Rng& rng);

// Scales all blocks so their joint L2 norm is at most `max_norm`. Returns the
// norm before scaling.
template <typename T>
double ClipGradNorm(nn::GradBuffer<T>& grads, double max_norm);

template <typename T>
nn::Matrix<T> GatherColumns(const nn::Matrix<T>& m, std::span<const int> idx);
template <typename T>
nn::RowVector<T> GatherEntries(const nn::RowVector<T>& v, std::span<const int> idx);
// Gathers from a T x N per-stream array using batch column order j = t * N + i.
template <typename T>
nn::RowVector<T> GatherStream(const Eigen::MatrixXd& a, int envs, std::span<const int> idx);

struct PpoStats {
  double policy_loss = 0.0;
  double objective_leg = 0.0;
  double objective_arm = 0.0;
  double value_loss = 0.0;
  double clip_fraction = 0.0;
  double approx_kl = 0.0;
  double mean_std = 0.0;
  double grad_norm_policy = 0.0;
  double grad_norm_critic = 0.0;
  double regularizer = 0.0;
  int updates = 0;
};

// A trainable latent in the policy-gradient path (the privileged encoder).
// Forward must cache what Backward needs for the same minibatch.
template <typename T>
class LatentModel {
 public:
  virtual ~LatentModel() = default;
  virtual nn::Matrix<T> Forward(const RolloutBatch<T>& batch, std::span<const int> idx) = 0;
  // Accumulates d loss / d params for the upstream `dz` plus any extra
  // latent-side loss; returns that extra loss value.
  virtual double Backward(const nn::Matrix<T>& dz, const nn::Blocks<T>& grads) = 0;
  virtual nn::Blocks<T> Parameters() = 0;
};

// Clipped PPO with mixed advantages over a policy, a multi-output critic,
// and an optional latent model that shares the policy optimizer.
template <typename T>
class PpoLearner {
 public:
  PpoLearner(policy::UnifiedPolicy<T>* policy, nn::DenseNet<T>* critic,
             LatentModel<T>* latent, const PpoConfig& config);

  PpoStats Update(const RolloutBatch<T>& batch, double beta, Rng& rng);

  nn::Adam<T>& policy_optimizer() { return policy_opt_; }
  nn::Adam<T>& critic_optimizer() { return critic_opt_; }
  const PpoConfig& config() const { return config_; }

 private:
  nn::Blocks<T> PolicyBlocks();

  policy::UnifiedPolicy<T>* policy_;
  nn::DenseNet<T>* critic_;
  LatentModel<T>* latent_;
  PpoConfig config_;
  nn::Adam<T> policy_opt_;
  nn::Adam<T> critic_opt_;
};

template <typename T>
void SerializeAdam(const nn::Adam<T>& adam, io::BinaryWriter& w);
template <typename T>
void DeserializeAdam(nn::Adam<T>& adam, io::BinaryReader& r);

extern template class PpoLearner<float>;
extern template class PpoLearner<double>;

}  // namespace wbc::rl

#endif  // WBC_RL_PPO_H_
