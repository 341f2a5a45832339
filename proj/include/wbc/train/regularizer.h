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

#ifndef WBC_TRAIN_REGULARIZER_H_
#define WBC_TRAIN_REGULARIZER_H_

#include "wbc/nn/tensor.h"

namespace wbc::train {

template <typename T>
struct LatentDistance {
  double value = 0.0;      // scale * mean over samples of ||a - b||_2
  nn::Matrix<T> grad;      // d value / d a; b is treated as a constant
};

// scale * mean_j ||a_j - b_j||_2 with the gradient taken only through `a`.
// Used as lambda * ||z_mu - sg[z_phi]|| (a = z_mu) and ||sg[z_mu] - z_phi||
// (a = z_phi).
template <typename T>
LatentDistance<T> StopGradDistance(const nn::Matrix<T>& a, const nn::Matrix<T>& b, double scale);

// Mean per-sample Euclidean distance between two latent batches.
template <typename T>
double RealizabilityGap(const nn::Matrix<T>& z_mu, const nn::Matrix<T>& z_phi);

}  // namespace wbc::train

#endif  // WBC_TRAIN_REGULARIZER_H_
