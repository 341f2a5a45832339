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

#ifndef WBC_RL_MIX_LOSS_H_
#define WBC_RL_MIX_LOSS_H_

#include <span>

#include "wbc/nn/dense_net.h"
#include "wbc/nn/tensor.h"
#include "wbc/policy/networks.h"

namespace wbc::rl {

// beta(t) = min(t / T_mix, 1).
double MixBeta(double global_step, double t_mix);

template <typename T>
struct MixedAdvantage {
  nn::RowVector<T> leg;  // beta * A_manip + A_loco
  nn::RowVector<T> arm;  // A_manip + beta * A_loco
};

template <typename T>
MixedAdvantage<T> MixAdvantages(const nn::RowVector<T>& adv_manip,
                                const nn::RowVector<T>& adv_loco, double beta);

template <typename T>
struct SurrogateResult {
  double objective = 0.0;      // mean of min(r A, clip(r) A)
  double clip_fraction = 0.0;  // share of samples with |r - 1| > clip
  nn::RowVector<T> dlogp;      // d objective / d new log-prob
};

// PPO clipped surrogate for one action slice.
template <typename T>
SurrogateResult<T> ClippedSurrogate(const nn::RowVector<T>& logp_new,
                                    const nn::RowVector<T>& logp_old,
                                    const nn::RowVector<T>& advantage, double clip);

template <typename T>
struct PolicyLossResult {
  double loss = 0.0;  // -(objective_leg + objective_arm)
  double objective_leg = 0.0;
  double objective_arm = 0.0;
  double clip_fraction = 0.0;  // averaged over both slices
  double approx_kl = 0.0;
  nn::Matrix<T> dz;  // d loss / d z
};

// Per-slice clipped surrogate with mixed advantages. Gradients are
// accumulated into `grads` (laid out as UnifiedPolicy::Parameters()).
template <typename T>
PolicyLossResult<T> MixedPolicyLoss(const policy::UnifiedPolicy<T>& policy,
                                    const nn::Matrix<T>& obs, const nn::Matrix<T>& z,
                                    const nn::Matrix<T>& actions,
                                    const nn::RowVector<T>& logp_leg_old,
                                    const nn::RowVector<T>& logp_arm_old,
                                    const MixedAdvantage<T>& advantage, double clip,
                                    const nn::Blocks<T>& grads);

// Sum over critic outputs of coef * mean((V - R)^2). Gradients accumulate into
// `grad`. `returns` has one row per critic output.
template <typename T>
double ValueLoss(const nn::DenseNet<T>& critic, const nn::Matrix<T>& input,
                 const nn::Matrix<T>& returns, double coef, std::span<T> grad);

}  // namespace wbc::rl

#endif  // WBC_RL_MIX_LOSS_H_
