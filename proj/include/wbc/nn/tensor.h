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

#ifndef WBC_NN_TENSOR_H_
#define WBC_NN_TENSOR_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace wbc {

// Every stochastic component draws from this engine so that runs are
// reproducible from a seed and the engine state can be checkpointed.
using Rng = std::mt19937_64;

namespace nn {

template <typename T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <typename T>
using RowVector = Eigen::Matrix<T, 1, Eigen::Dynamic>;

// A list of flat parameter (or gradient) blocks. Composite networks expose
// their parameters this way so optimizers, checkpoints and gradient checks
// can treat them uniformly.
template <typename T>
using Blocks = std::vector<std::span<T>>;

template <typename T>
struct GradBuffer {
  std::vector<Vector<T>> blocks;

  GradBuffer() = default;
  explicit GradBuffer(const Blocks<T>& like) {
    for (const auto& b : like) {
      blocks.push_back(Vector<T>::Zero(static_cast<Eigen::Index>(b.size())));
    }
  }
  void SetZero() {
    for (auto& b : blocks) b.setZero();
  }
  Blocks<T> Spans() {
    Blocks<T> out;
    for (auto& b : blocks) out.emplace_back(b.data(), b.size());
    return out;
  }
  T SquaredNorm() const {
    T s = 0;
    for (const auto& b : blocks) s += b.squaredNorm();
    return s;
  }
  void Scale(T factor) {
    for (auto& b : blocks) b *= factor;
  }
};

}  // namespace nn
}  // namespace wbc

#endif  // WBC_NN_TENSOR_H_
