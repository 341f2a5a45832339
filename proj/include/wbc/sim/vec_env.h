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

#ifndef WBC_SIM_VEC_ENV_H_
#define WBC_SIM_VEC_ENV_H_

#include <memory>
#include <vector>

#include "wbc/rl/vec_env.h"
#include "wbc/sim/env.h"

namespace wbc::sim {

// Leg and arm observation subsets used when the policy is split per part.
std::vector<int> LegObservationIndices();
std::vector<int> ArmObservationIndices();
rl::EnvSpec ManipLocoSpec();

// N independent surrogate environments with automatic reset. StepParallel
// distributes environments over OpenMP threads; StepSerial is the reference.
class ManipLocoVecEnv : public rl::VecEnv {
 public:
  ManipLocoVecEnv(std::shared_ptr<const EnvContext> context, int num_envs, uint64_t seed);

  const rl::EnvSpec& spec() const override { return spec_; }
  int num_envs() const override { return static_cast<int>(envs_.size()); }
  void ResetAll() override;
  const Eigen::MatrixXd& observations() const override { return out_.obs; }
  const Eigen::MatrixXd& privileged() const override { return out_.priv; }
  const rl::StepOutput& Step(const Eigen::MatrixXd& actions) override;

  const rl::StepOutput& StepSerial(const Eigen::MatrixXd& actions);
  const rl::StepOutput& StepParallel(const Eigen::MatrixXd& actions);

  void set_parallel(bool parallel) { parallel_ = parallel; }
  bool parallel() const { return parallel_; }

  // Recomputes observations after environments were edited in place.
  void RefreshObservations();

  Env& env(int i) { return envs_[i]; }
  const Env& env(int i) const { return envs_[i]; }
  // Raw results of the last step, before automatic reset.
  const std::vector<StepResult>& last_results() const { return results_; }

  void Serialize(io::BinaryWriter& w) const override;
  void Deserialize(io::BinaryReader& r) override;

 private:
  void StepOne(int i, const Eigen::MatrixXd& actions);
  void WriteObservation(int i);

  std::shared_ptr<const EnvContext> context_;
  rl::EnvSpec spec_;
  std::vector<Env> envs_;
  std::vector<StepResult> results_;
  rl::StepOutput out_;
  bool parallel_ = true;
};

}  // namespace wbc::sim

#endif  // WBC_SIM_VEC_ENV_H_
