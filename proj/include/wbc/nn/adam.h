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

#ifndef WBC_NN_ADAM_H_
#define WBC_NN_ADAM_H_

#include <cstdint>
#include <span>
#include <vector>

#include "wbc/nn/tensor.h"

namespace wbc::nn {

struct AdamConfig {
  double learning_rate = 2e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  bool operator==(const AdamConfig&) const = default;
};

// Adaptive-moment optimizer state for a single flat parameter block.
template <typename T>
struct AdamState {
  Vector<T> m;
  Vector<T> v;
  int64_t step = 0;

  AdamState() = default;
  explicit AdamState(Eigen::Index n) : m(Vector<T>::Zero(n)), v(Vector<T>::Zero(n)) {}
};

// One bias-corrected Adam update. Throws on shape mismatch.
template <typename T>
void AdamStep(std::span<T> params, std::span<const T> grads, AdamState<T>& state,
              const AdamConfig& config);

// Adam over a list of parameter blocks (one state per block).
template <typename T>
class Adam {
 public:
  Adam() = default;
  Adam(const Blocks<T>& params, AdamConfig config);

  void Step(const Blocks<T>& params, GradBuffer<T>& grads);

  const AdamConfig& config() const { return config_; }
  AdamConfig& config() { return config_; }
  std::vector<AdamState<T>>& states() { return states_; }
  const std::vector<AdamState<T>>& states() const { return states_; }

 private:
  AdamConfig config_;
  std::vector<AdamState<T>> states_;
};

extern template class Adam<float>;
extern template class Adam<double>;

}  // namespace wbc::nn

#endif  // WBC_NN_ADAM_H_
