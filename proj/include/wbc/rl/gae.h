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

#ifndef WBC_RL_GAE_H_
#define WBC_RL_GAE_H_

#include <cstdint>

#include <Eigen/Core>

namespace wbc::rl {

struct GaeConfig {
  double gamma = 0.99;
  double lambda = 0.95;
  bool operator==(const GaeConfig&) const = default;
};

// Arrays are T x N (time rows, environment columns). dones(t, i) != 0 ends the
// episode after step t; `last_values` bootstraps the step after the batch.
struct GaeInputs {
  const Eigen::MatrixXd* rewards = nullptr;
  const Eigen::MatrixXd* values = nullptr;
  const Eigen::Matrix<uint8_t, Eigen::Dynamic, Eigen::Dynamic>* dones = nullptr;
  const Eigen::VectorXd* last_values = nullptr;
};

Eigen::MatrixXd ComputeGaeSerial(const GaeInputs& in, const GaeConfig& config);
// Environments processed on OpenMP threads; identical results to the serial path.
Eigen::MatrixXd ComputeGaeParallel(const GaeInputs& in, const GaeConfig& config);

// In-place zero-mean unit-std normalization over every entry.
void NormalizeAdvantages(Eigen::MatrixXd& advantages, double eps = 1e-8);

}  // namespace wbc::rl

#endif  // WBC_RL_GAE_H_
