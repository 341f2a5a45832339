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

#ifndef WBC_SIM_PARAMS_H_
#define WBC_SIM_PARAMS_H_

#include <array>

#include <Eigen/Core>

#include "wbc/nn/tensor.h"
#include "wbc/sim/config.h"

namespace wbc::sim {

// Randomized physical parameters; the privileged vector e is ToVector().
struct EnvParams {
  double base_payload = 0.0;
  double ee_payload = 0.0;
  Eigen::Vector3d com_offset = Eigen::Vector3d::Zero();
  double arm_strength = 1.0;
  double leg_strength = 1.0;
  double friction = 1.0;

  std::array<double, kPrivDim> ToVector() const;
  static EnvParams FromVector(const std::array<double, kPrivDim>& e);
  bool operator==(const EnvParams&) const = default;
};

// Throws std::invalid_argument for inverted intervals or non-positive
// friction/strength bounds.
void ValidateRanges(const EnvParamRanges& ranges);
EnvParams SampleEnvParams(const EnvParamRanges& ranges, Rng& rng);

// Maps each field to [-1, 1] across its training interval (degenerate
// intervals map to 0).
std::array<double, kPrivDim> NormalizeEnvParams(const EnvParams& params,
                                                const EnvParamRanges& training);

}  // namespace wbc::sim

#endif  // WBC_SIM_PARAMS_H_
