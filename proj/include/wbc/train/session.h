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

#ifndef WBC_TRAIN_SESSION_H_
#define WBC_TRAIN_SESSION_H_

#include <memory>
#include <string>

#include "wbc/io/config.h"
#include "wbc/train/checkpoint.h"
#include "wbc/train/trainer.h"

namespace wbc::train {

// A training run built from a RunConfig, with the numeric precision chosen
// at runtime.
class Session {
 public:
  virtual ~Session() = default;

  // Fresh run on the training ranges of `config`.
  static std::unique_ptr<Session> Create(const io::RunConfig& config);
  // Run restored from a checkpoint; its embedded config is used.
  static std::unique_ptr<Session> FromCheckpoint(const CheckpointContents& contents);
  static std::unique_ptr<Session> Load(const std::string& path);

  virtual IterationStats RunIteration() = 0;
  virtual bool done() const = 0;
  virtual int iteration() const = 0;
  virtual CheckpointContents Checkpoint() const = 0;
  void Save(const std::string& path) const { WriteCheckpointFile(path, Checkpoint()); }

  const io::RunConfig& config() const { return config_; }

  // Non-null only for the matching precision.
  virtual const Trainer<float>* float_trainer() const { return nullptr; }
  virtual const Trainer<double>* double_trainer() const { return nullptr; }

 protected:
  explicit Session(io::RunConfig config) : config_(std::move(config)) {}

  io::RunConfig config_;
};

// Environment seed used for training; distinct from the network/sampling streams.
uint64_t TrainingEnvSeed(uint64_t seed);

}  // namespace wbc::train

#endif  // WBC_TRAIN_SESSION_H_
