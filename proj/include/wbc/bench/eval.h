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

#ifndef WBC_BENCH_EVAL_H_
#define WBC_BENCH_EVAL_H_

#include <optional>
#include <string>
#include <vector>

#include "wbc/bench/eval_config.h"
#include "wbc/io/config.h"
#include "wbc/sim/trajectory.h"
#include "wbc/train/trainer.h"

namespace wbc::bench {

// Per-step means of one episode (every metric is normalized by its length).
struct EpisodeMetrics {
  int length = 0;
  bool survived = false;  // reached the step limit
  double base_ang_acc = 0.0;
  double vel_error = 0.0;
  double ee_error = 0.0;
  double energy = 0.0;
};

// Streams per-step diagnostics into an EpisodeMetrics.
class EpisodeAccumulator {
 public:
  void Add(double base_ang_acc, double vel_error, double ee_error, double energy);
  EpisodeMetrics Finish(bool survived) const;

 private:
  int length_ = 0;
  double acc_ = 0.0, vel_ = 0.0, ee_ = 0.0, energy_ = 0.0;
};

EpisodeMetrics MetricsFromTrajectory(const sim::Trajectory& trajectory);

struct PolicyMetrics {
  double survival = 0.0;  // percent of episodes reaching the step limit
  double base_ang_acc = 0.0;
  double vel_error = 0.0;
  double ee_error = 0.0;
  double energy = 0.0;
  double gap = 0.0;  // NaN when the policy has no (encoder, adaptation) pair
  int episodes = 0;
};

PolicyMetrics Aggregate(const std::vector<EpisodeMetrics>& episodes, double gap);

// Metric names in report order and accessors by name.
const std::vector<std::string>& MetricNames();
double MetricValue(const PolicyMetrics& m, const std::string& name);

struct EvalOutput {
  PolicyMetrics metrics;
  std::vector<EpisodeMetrics> episodes;
  std::vector<sim::Trajectory> trajectories;  // the first `record` episodes
};

// Runs eval.episodes episodes per eval seed with deterministic mean actions
// and the mode's evaluation latent. The environment uses `config`'s tables
// for eval.ranges; eval.initial_base_speed > 0 overrides the reset speed.
template <typename T>
EvalOutput EvaluatePolicy(const train::PolicyBundle<T>& bundle, const io::RunConfig& config,
                          const EvalConfig& eval, int record = 0);

// Description of the environment a trajectory was recorded in, and its inverse.
std::string TrajectoryContextText(const io::RunConfig& config, const EvalConfig& eval);
std::shared_ptr<sim::EnvContext> ContextFromTrajectoryText(const std::string& text);

struct WorkspaceResult {
  std::optional<double> volume;  // hull minus box; empty with < 4 achieved points
  double hull_volume = 0.0;
  double box_volume = 0.0;
  int targets = 0;
  std::vector<Eigen::Vector3d> achieved;  // command-frame EE positions
  std::vector<double> final_errors;       // per target, m
};

// Holds each sampled EE command for eval.hold_time with zero velocity
// commands and records the final EE position when its error is below
// eval.achieve_threshold.
template <typename T>
WorkspaceResult WorkspaceVolume(const train::PolicyBundle<T>& bundle, const io::RunConfig& config,
                                const EvalConfig& eval, uint64_t seed);

// Per-seed metrics of one method under one evaluation setup.
struct MetricsReport {
  std::string label;
  train::TrainMode mode = train::TrainMode::kRoa;
  EvalConfig eval;
  std::vector<PolicyMetrics> seeds;

  PolicyMetrics Mean() const;
  PolicyMetrics Std() const;  // population std across seeds
};

struct Comparison {
  std::vector<std::string> labels;
  std::vector<std::string> metrics;
  std::vector<std::vector<double>> mean;  // [report][metric]
  std::vector<std::vector<double>> std;
  std::vector<std::vector<int>> rank;     // 1 = best; 0 when the metric is absent
};

// Rejects fewer than two reports or mismatched eval configs.
Comparison CompareRuns(const std::vector<MetricsReport>& reports);
std::string ComparisonCsv(const Comparison& c);
std::string ReportJson(const std::vector<MetricsReport>& reports, const Comparison& c);

}  // namespace wbc::bench

#endif  // WBC_BENCH_EVAL_H_
