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

#ifndef WBC_NN_DENSE_NET_H_
#define WBC_NN_DENSE_NET_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wbc/nn/tensor.h"

namespace wbc::nn {

enum class Activation { kIdentity, kElu, kTanh };

Activation ParseActivation(std::string_view name);
std::string_view ActivationName(Activation act);

// Fully connected network. Parameters live in one flat buffer laid out
// layer by layer as [W (out x in, column-major), b (out)].
//
// Batched inputs are column-major matrices with one sample per column.
template <typename T>
class DenseNet {
 public:
  // Intermediate values recorded by a batched forward pass for Backward().
  struct Tape {
    std::vector<Matrix<T>> inputs;  // input to each layer
    std::vector<Matrix<T>> pre;     // pre-activation of each layer
  };

  DenseNet() = default;
  // `sizes` = {input, hidden..., output}. Hidden layers use `hidden`, the last
  // layer uses `output`.
  DenseNet(std::vector<int> sizes, Activation hidden,
           Activation output = Activation::kIdentity);

  int input_dim() const { return sizes_.empty() ? 0 : sizes_.front(); }
  int output_dim() const { return sizes_.empty() ? 0 : sizes_.back(); }
  int num_layers() const { return static_cast<int>(sizes_.size()) - 1; }
  int num_params() const { return static_cast<int>(params_.size()); }
  const std::vector<int>& sizes() const { return sizes_; }
  Activation hidden_activation() const { return hidden_; }
  Activation output_activation() const { return output_; }

  std::span<T> params() { return {params_.data(), static_cast<size_t>(params_.size())}; }
  std::span<const T> params() const { return {params_.data(), static_cast<size_t>(params_.size())}; }

  Eigen::Map<Matrix<T>> weight(int layer);
  Eigen::Map<const Matrix<T>> weight(int layer) const;
  Eigen::Map<Vector<T>> bias(int layer);
  Eigen::Map<const Vector<T>> bias(int layer) const;

  // Orthogonal init scaled by sqrt(2) on hidden layers and `output_gain` on
  // the last layer; zero biases.
  void Initialize(Rng& rng, double output_gain);
  void SetZero();

  Vector<T> Forward(const Vector<T>& input) const;
  Matrix<T> Forward(const Matrix<T>& input, Tape* tape = nullptr) const;

  // Reverse pass for a tape produced by Forward. Parameter gradients are
  // accumulated (+=) into `grad` (length num_params()); returns dL/dinput.
  Matrix<T> Backward(const Tape& tape, const Matrix<T>& upstream,
                     std::span<T> grad) const;

 private:
  Activation LayerActivation(int layer) const;

  std::vector<int> sizes_;
  std::vector<Eigen::Index> offsets_;  // start of W for each layer
  Activation hidden_ = Activation::kElu;
  Activation output_ = Activation::kIdentity;
  Vector<T> params_;
};

extern template class DenseNet<float>;
extern template class DenseNet<double>;

}  // namespace wbc::nn

#endif  // WBC_NN_DENSE_NET_H_
