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

#include <benchmark/benchmark.h>

#include "wbc/io/config.h"
#include "wbc/rl/gae.h"
#include "wbc/sim/vec_env.h"

namespace {

using namespace wbc;

sim::ManipLocoVecEnv MakeEnv(int n) {
  return sim::ManipLocoVecEnv(io::MakeEnvContext(io::RunConfig{}, bench::RangeSet::kTrain), n, 1);
}

template <bool kParallel>
void BM_EnvStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto env = MakeEnv(n);
  env.ResetAll();
  const Eigen::MatrixXd actions = Eigen::MatrixXd::Zero(env.spec().actions.action_dim(), n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kParallel ? env.StepParallel(actions) : env.StepSerial(actions));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_EnvStep<false>)->Name("EnvStep/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_EnvStep<true>)->Name("EnvStep/parallel")->Arg(64)->Arg(256);

template <bool kParallel>
void BM_Gae(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int t = 40;
  const Eigen::MatrixXd r = Eigen::MatrixXd::Random(t, n);
  const Eigen::MatrixXd v = Eigen::MatrixXd::Random(t, n);
  rl::DoneMatrix d = (Eigen::MatrixXd::Random(t, n).array() > 0.9).cast<uint8_t>();
  const Eigen::VectorXd last = Eigen::VectorXd::Random(n);
  const rl::GaeInputs in{&r, &v, &d, &last};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kParallel ? rl::ComputeGaeParallel(in, {})
                                       : rl::ComputeGaeSerial(in, {}));
  }
  state.SetItemsProcessed(state.iterations() * n * t);
}
BENCHMARK(BM_Gae<false>)->Name("Gae/serial")->Arg(256)->Arg(4096);
BENCHMARK(BM_Gae<true>)->Name("Gae/parallel")->Arg(256)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
