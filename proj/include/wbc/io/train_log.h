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

#ifndef WBC_IO_TRAIN_LOG_H_
#define WBC_IO_TRAIN_LOG_H_

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wbc/train/trainer.h"

namespace wbc::io {

inline constexpr int kTrainLogVersion = 1;

class LogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Column names of a version-1 log, in order.
const std::vector<std::string>& TrainLogColumns();

// Per-iteration CSV log. File layout: a `# wbc-train-log v1` line, the run
// config as `# `-prefixed lines, the header row, then one row per iteration.
// Rows are written with a single flushed write.
class TrainLogWriter {
 public:
  // Creates (or truncates) `path`.
  TrainLogWriter(const std::string& path, const std::string& config_text);
  // Reopens an existing log, dropping rows at or after `next_iteration`.
  static TrainLogWriter Resume(const std::string& path, int next_iteration);

  void Append(const train::IterationStats& stats);

 private:
  TrainLogWriter() = default;
  std::ofstream out_;
};

std::string FormatLogRow(const train::IterationStats& stats);

struct TrainLog {
  int version = 0;
  std::string config_text;
  std::vector<std::string> modes;               // one per row
  std::map<std::string, std::vector<double>> columns;  // numeric columns

  size_t rows() const { return modes.size(); }
  const std::vector<double>& column(const std::string& name) const;
};

// Rejects files whose version line is not `kTrainLogVersion`.
TrainLog ReadTrainLog(const std::string& path);

}  // namespace wbc::io

#endif  // WBC_IO_TRAIN_LOG_H_
