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

#ifndef WBC_IO_BINARY_H_
#define WBC_IO_BINARY_H_

#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "wbc/nn/tensor.h"

namespace wbc::io {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

uint32_t Crc32(std::span<const uint8_t> bytes);

// Append-only little-endian byte buffer.
class BinaryWriter {
 public:
  template <typename T>
    requires std::is_trivially_copyable_v<T>
  void Put(const T& value) {
    const auto* p = reinterpret_cast<const uint8_t*>(&value);
    bytes_.insert(bytes_.end(), p, p + sizeof(T));
  }
  template <typename T>
    requires std::is_trivially_copyable_v<T>
  void PutSpan(std::span<const T> values) {
    Put<uint64_t>(values.size());
    const auto* p = reinterpret_cast<const uint8_t*>(values.data());
    bytes_.insert(bytes_.end(), p, p + values.size_bytes());
  }
  void PutString(const std::string& s) {
    PutSpan<char>({s.data(), s.size()});
  }
  void PutRaw(std::span<const uint8_t> raw) { bytes_.insert(bytes_.end(), raw.begin(), raw.end()); }
  void PutRng(const Rng& rng);

  const std::vector<uint8_t>& bytes() const { return bytes_; }
  std::vector<uint8_t>& bytes() { return bytes_; }

 private:
  std::vector<uint8_t> bytes_;
};

// Bounds-checked reader over a byte buffer; throws FormatError on truncation.
class BinaryReader {
 public:
  explicit BinaryReader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  template <typename T>
    requires std::is_trivially_copyable_v<T>
  T Get() {
    Require(sizeof(T));
    T value;
    std::memcpy(&value, bytes_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return value;
  }
  template <typename T>
    requires std::is_trivially_copyable_v<T>
  std::vector<T> GetVector() {
    const auto n = Get<uint64_t>();
    if (n > (bytes_.size() - pos_) / sizeof(T)) throw FormatError("truncated array");
    std::vector<T> out(n);
    std::memcpy(out.data(), bytes_.data() + pos_, n * sizeof(T));
    pos_ += n * sizeof(T);
    return out;
  }
  // Reads an array whose length must equal `out.size()`.
  template <typename T>
    requires std::is_trivially_copyable_v<T>
  void GetInto(std::span<T> out) {
    const auto n = Get<uint64_t>();
    if (n != out.size()) {
      throw FormatError("array length " + std::to_string(n) + " does not match expected " +
                        std::to_string(out.size()));
    }
    Require(n * sizeof(T));
    std::memcpy(out.data(), bytes_.data() + pos_, n * sizeof(T));
    pos_ += n * sizeof(T);
  }
  std::string GetString() {
    const auto v = GetVector<char>();
    return {v.begin(), v.end()};
  }
  std::span<const uint8_t> GetRaw(size_t n) {
    Require(n);
    const auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }
  void GetRng(Rng& rng);

  size_t position() const { return pos_; }
  size_t remaining() const { return bytes_.size() - pos_; }

 private:
  void Require(size_t n) const {
    if (bytes_.size() - pos_ < n) throw FormatError("unexpected end of data");
  }

  std::span<const uint8_t> bytes_;
  size_t pos_ = 0;
};

std::vector<uint8_t> ReadFileBytes(const std::string& path);
void WriteFileBytes(const std::string& path, std::span<const uint8_t> bytes);

}  // namespace wbc::io

#endif  // WBC_IO_BINARY_H_
