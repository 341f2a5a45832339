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

#ifndef WBC_TRAIN_TRAINER_H_
#define WBC_TRAIN_TRAINER_H_

#include <memory>
#include <optional>
#include <vector>

#include "wbc/io/binary.h"
#include "wbc/nn/adam.h"
#include "wbc/nn/dense_net.h"
#include "wbc/policy/networks.h"
#include "wbc/rl/ppo.h"
#include "wbc/rl/rollout.h"
#include "wbc/rl/vec_env.h"
#include "wbc/train/schedule.h"

namespace wbc::train {

struct TrainConfig {
  TrainMode mode = TrainMode::kRoa;
  int iterations = 1500;
  int num_envs = 256;
  int steps_per_iteration = 40;
  double t_mix_fraction = 0.4;
  bool advantage_mixing = true;
  double lambda_start_fraction = 0.5;
  double lambda_ramp_fraction = 0.5;
  int adaptation_period = 20;
  double rma_phase1_fraction = 0.7;
  uint64_t seed = 1;
  bool parallel = true;
  bool operator==(const TrainConfig&) const = default;

  ScheduleConfig schedule() const;
};

// Networks needed to act with a trained policy.
template <typename T>
struct PolicyBundle {
  TrainMode mode = TrainMode::kRoa;
  policy::NetworkConfig network;
  policy::UnifiedPolicy<T> policy;
  std::optional<nn::DenseNet<T>> encoder;
  std::optional<nn::DenseNet<T>> adaptation;

  // Latent for a batch; `history` may be empty unless the source is kAdaptation.
  nn::Matrix<T> Latent(LatentSource source, const nn::Matrix<T>& priv,
                       const nn::Matrix<T>& history) const;
};

struct IterationStats {
  long iteration = 0;
  double global_step = 0;
  TrainMode mode = TrainMode::kRoa;
  LatentSource latent = LatentSource::kZero;
  double lambda = 0.0;
  double beta = 0.0;
  double reward_manip = 0.0;  // per-step batch means
  double reward_loco = 0.0;
  double vel_error = 0.0;
  double ee_error = 0.0;
  int episodes = 0;  // completed in this iteration
  double episode_return_manip = 0.0;  // NaN when no episode completed
  double episode_return_loco = 0.0;
  double episode_vel_error = 0.0;
  double episode_ee_error = 0.0;
  double episode_length = 0.0;
  double survival = 0.0;  // share of completed episodes that hit the step limit
  double gap = 0.0;       // NaN without both latents
  double adaptation_loss = 0.0;
  rl::PpoStats ppo;
  double wall_time = 0.0;
  double rollout_time = 0.0;
};

// Rollout collection and updates for every training mode.
template <typename T>
class Trainer {
 public:
  Trainer(const TrainConfig& config, const policy::NetworkConfig& network,
          const rl::PpoConfig& ppo, std::unique_ptr<rl::VecEnv> env);
  ~Trainer();

  IterationStats RunIteration();
  bool done() const { return iteration_ >= config_.iterations; }

  long iteration() const { return iteration_; }
  double global_step() const { return global_step_; }
  const TrainConfig& config() const { return config_; }
  const policy::NetworkConfig& network() const { return network_; }
  const rl::PpoConfig& ppo_config() const { return ppo_config_; }
  rl::VecEnv& env() { return *env_; }

  policy::UnifiedPolicy<T>& policy() { return policy_; }
  nn::DenseNet<T>& critic() { return critic_; }
  nn::DenseNet<T>* encoder() { return encoder_ ? &*encoder_ : nullptr; }
  nn::DenseNet<T>* adaptation() { return adaptation_ ? &*adaptation_ : nullptr; }
  const rl::RolloutBatch<T>& last_batch() const { return batch_; }

  PolicyBundle<T> Bundle() const;

  // Full training state: networks, optimizers, environments, histories, RNG.
  void Serialize(io::BinaryWriter& w) const;
  void Deserialize(io::BinaryReader& r);

 private:
  class EncoderLatent;

  void CollectRollout(const IterationPlan& plan, IterationStats& stats);
  double UpdateAdaptation();
  nn::Matrix<T> HistoryMatrix() const;
  void FillLatents(const IterationPlan& plan, const nn::Matrix<T>& priv,
                   const nn::Matrix<T>& history, nn::Matrix<T>& z, nn::Matrix<T>* z_mu,
                   nn::Matrix<T>* z_phi) const;

  TrainConfig config_;
  policy::NetworkConfig network_;
  rl::PpoConfig ppo_config_;
  ModeTraits traits_;
  std::unique_ptr<rl::VecEnv> env_;
  Rng rng_;

  policy::UnifiedPolicy<T> policy_;
  nn::DenseNet<T> critic_;
  std::optional<nn::DenseNet<T>> encoder_;
  std::optional<nn::DenseNet<T>> adaptation_;
  std::unique_ptr<EncoderLatent> latent_;
  std::unique_ptr<rl::PpoLearner<T>> learner_;
  nn::Adam<T> adaptation_opt_;

  std::vector<policy::HistoryBuffer> histories_;
  Eigen::MatrixXd prev_actions_;  // clipped action of the previous step

  // Running per-episode sums for each environment.
  Eigen::VectorXd ep_return_manip_;
  Eigen::VectorXd ep_return_loco_;
  Eigen::VectorXd ep_vel_error_;
  Eigen::VectorXd ep_ee_error_;
  Eigen::VectorXi ep_length_;

  rl::RolloutBatch<T> batch_;
  long iteration_ = 0;
  double global_step_ = 0;
};

extern template class Trainer<float>;
extern template class Trainer<double>;

}  // namespace wbc::train

#endif  // WBC_TRAIN_TRAINER_H_
