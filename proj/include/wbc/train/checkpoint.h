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

#ifndef WBC_TRAIN_CHECKPOINT_H_
#define WBC_TRAIN_CHECKPOINT_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wbc/io/config.h"
#include "wbc/train/trainer.h"

namespace wbc::train {

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr char kCheckpointMagic[8] = {'W', 'B', 'C', 'C', 'K', 'P', 'T', '\0'};
inline constexpr uint32_t kCheckpointVersion = 1;

// Container layout: magic, version (u32), config text, payload, CRC-32 of all
// preceding bytes.
struct CheckpointContents {
  uint32_t version = kCheckpointVersion;
  std::string config_text;
  std::vector<uint8_t> payload;
};

std::vector<uint8_t> EncodeCheckpoint(const CheckpointContents& contents);
// Validates magic, checksum, and version before returning anything.
CheckpointContents DecodeCheckpoint(std::span<const uint8_t> bytes);

// Writes to a sibling temporary file and renames it into place.
void WriteCheckpointFile(const std::string& path, const CheckpointContents& contents);
CheckpointContents ReadCheckpointFile(const std::string& path);

template <typename T>
CheckpointContents MakeCheckpoint(const io::RunConfig& config, const Trainer<T>& trainer);

// Restores `trainer`, which must have been built from `config`. The stored
// configuration must agree on mode, precision, and every network shape.
template <typename T>
void RestoreCheckpoint(const CheckpointContents& contents, const io::RunConfig& config,
                       Trainer<T>& trainer);

// Empty when the two configs describe identical parameter shapes; otherwise
// a description of the first difference.
std::string ShapeDifference(const io::RunConfig& stored, const io::RunConfig& expected);

}  // namespace wbc::train

#endif  // WBC_TRAIN_CHECKPOINT_H_
