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

#ifndef WBC_POLICY_NETWORKS_H_
#define WBC_POLICY_NETWORKS_H_

#include <span>
#include <vector>

#include "wbc/nn/dense_net.h"
#include "wbc/nn/gaussian.h"
#include "wbc/nn/tensor.h"

namespace wbc::policy {

inline constexpr int kLatentDim = 20;
inline constexpr int kHistoryLength = 10;

struct NetworkConfig {
  std::vector<int> trunk_hidden{128};
  std::vector<int> head_hidden{128, 128};
  std::vector<int> critic_hidden{128, 128, 128};
  std::vector<int> encoder_hidden{64, 64};
  std::vector<int> adaptation_hidden{256, 128};
  nn::Activation activation = nn::Activation::kElu;
  double init_std = 0.5;
  double min_std = nn::kDefaultMinStd;
  double head_output_gain = 0.01;
  double critic_output_gain = 1.0;
  double latent_output_gain = 1.0;
  int latent_dim = kLatentDim;
  int history_length = kHistoryLength;
  bool operator==(const NetworkConfig&) const = default;
};

// Sizes of the two action slices and which observation entries each part may
// read when the policy is split into independent leg and arm networks.
struct ActionLayout {
  int obs_dim = 0;
  int leg_dim = 0;
  int arm_dim = 0;
  std::vector<int> leg_obs;
  std::vector<int> arm_obs;
  int action_dim() const { return leg_dim + arm_dim; }
};

// Trunk plus leg and arm heads over [obs; z]. In split mode each head has its
// own trunk reading only its part's observation indices (and z).
template <typename T>
class UnifiedPolicy {
 public:
  struct Cache {
    std::vector<typename nn::DenseNet<T>::Tape> trunk;
    typename nn::DenseNet<T>::Tape leg;
    typename nn::DenseNet<T>::Tape arm;
  };

  UnifiedPolicy() = default;
  UnifiedPolicy(const ActionLayout& layout, const NetworkConfig& config, bool split);

  void Initialize(Rng& rng);

  // Returns the action mean, leg rows first. `z` may have zero rows.
  nn::Matrix<T> Forward(const nn::Matrix<T>& obs, const nn::Matrix<T>& z,
                        Cache* cache = nullptr) const;
  // Accumulates parameter gradients for d loss / d mean into `grads` (one
  // block per Parameters() entry; the log-std block is untouched) and returns
  // d loss / d z.
  nn::Matrix<T> Backward(const Cache& cache, const nn::Matrix<T>& dmean,
                         const nn::Blocks<T>& grads) const;

  nn::Vector<T> Std() const { return head_.Std(); }
  nn::GaussianHead<T>& head() { return head_; }
  const nn::GaussianHead<T>& head() const { return head_; }

  // Trunk(s), leg head, arm head, log-std.
  nn::Blocks<T> Parameters();
  int log_std_block() const { return static_cast<int>(trunks_.size()) + 2; }

  const ActionLayout& layout() const { return layout_; }
  int latent_dim() const { return latent_dim_; }
  bool split() const { return split_; }
  const std::vector<nn::DenseNet<T>>& trunks() const { return trunks_; }
  const nn::DenseNet<T>& leg_head() const { return leg_; }
  const nn::DenseNet<T>& arm_head() const { return arm_; }

 private:
  nn::Matrix<T> TrunkInput(int part, const nn::Matrix<T>& obs, const nn::Matrix<T>& z) const;

  ActionLayout layout_;
  int latent_dim_ = 0;
  bool split_ = false;
  double head_gain_ = 0.01;
  std::vector<nn::DenseNet<T>> trunks_;
  nn::DenseNet<T> leg_;
  nn::DenseNet<T> arm_;
  nn::GaussianHead<T> head_;
};

// Critic with one output per reward stream over [obs; z].
template <typename T>
nn::DenseNet<T> MakeCritic(int obs_dim, const NetworkConfig& config, int streams = 2);

// Privileged encoder mu: normalized e -> z.
template <typename T>
nn::DenseNet<T> MakeEncoder(int priv_dim, const NetworkConfig& config);

// Adaptation module phi: flattened history -> z.
template <typename T>
nn::DenseNet<T> MakeAdaptation(int obs_dim, int action_dim, const NetworkConfig& config);

// Fixed-length history of observations and actions, flattened oldest-first as
// [obs_0 .. obs_{n-1}, act_0 .. act_{n-1}]. Unfilled slots are zero.
class HistoryBuffer {
 public:
  HistoryBuffer() = default;
  HistoryBuffer(int obs_dim, int action_dim, int length);

  void Push(std::span<const double> obs, std::span<const double> action);
  void Clear();
  int size() const { return count_; }
  int length() const { return length_; }
  int flat_dim() const { return length_ * (obs_dim_ + action_dim_); }
  void Flatten(std::span<double> out) const;
  std::vector<double> Flatten() const;

  const std::vector<double>& obs_ring() const { return obs_; }
  const std::vector<double>& action_ring() const { return act_; }
  int head() const { return head_; }
  void Restore(std::vector<double> obs, std::vector<double> act, int head, int count);

 private:
  int obs_dim_ = 0;
  int action_dim_ = 0;
  int length_ = 0;
  int head_ = 0;  // next slot to write
  int count_ = 0;
  std::vector<double> obs_;
  std::vector<double> act_;
};

}  // namespace wbc::policy

#endif  // WBC_POLICY_NETWORKS_H_
