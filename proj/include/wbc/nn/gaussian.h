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

#ifndef WBC_NN_GAUSSIAN_H_
#define WBC_NN_GAUSSIAN_H_

#include <span>

#include "wbc/nn/tensor.h"

namespace wbc::nn {

inline constexpr double kDefaultMinStd = 0.2;

// State-independent diagonal Gaussian exploration noise.
// Effective std is max(exp(log_std), min_std).
template <typename T>
struct GaussianHead {
  Vector<T> log_std;
  T min_std = T(kDefaultMinStd);

  GaussianHead() = default;
  GaussianHead(int dim, T init_std, T floor)
      : log_std(Vector<T>::Constant(dim, std::log(init_std))), min_std(floor) {}

  int dim() const { return static_cast<int>(log_std.size()); }
  std::span<T> params() { return {log_std.data(), static_cast<size_t>(log_std.size())}; }
  Vector<T> Std() const;
  // d std / d log_std: exp(log_std) above the floor, zero where clamped.
  Vector<T> StdGrad() const;
};

// Sum over dimensions of univariate Gaussian log densities.
// Throws on length mismatch or non-positive std.
double GaussianLogProb(std::span<const double> mean, std::span<const double> std,
                       std::span<const double> action);

// Batched log density over rows [begin, end) of column-sample matrices.
template <typename T>
RowVector<T> GaussianLogProbBatch(const Matrix<T>& mean, const Vector<T>& std,
                                  const Matrix<T>& action, int begin, int end);

// Writes mean + std * N(0, 1) into `out`. Throws if std is below `floor`.
void GaussianSample(std::span<const double> mean, std::span<const double> std,
                    Rng& rng, std::span<double> out,
                    double floor = kDefaultMinStd);

extern template struct GaussianHead<float>;
extern template struct GaussianHead<double>;

}  // namespace wbc::nn

#endif  // WBC_NN_GAUSSIAN_H_
