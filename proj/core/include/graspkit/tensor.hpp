// Copyright 2026 The Graspkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <vector>

#include "graspkit/types.hpp"

namespace graspkit {

/// Dense channel-major C x H x W tensor. Computation is in double; the
/// on-disk format is little-endian f32 with a 16-byte header
/// (magic "GPTN", u32 C, u32 H, u32 W).
class Tensor {
 public:
  Tensor() = default;
  Tensor(int channels, int height, int width)
      : channels_(channels), height_(height), width_(width),
        data_(static_cast<std::size_t>(channels) * height * width, 0.0) {}

  int channels() const { return channels_; }
  int height() const { return height_; }
  int width() const { return width_; }

  double& at(int c, int v, int u) {
    return data_[(static_cast<std::size_t>(c) * height_ + v) * width_ + u];
  }
  double at(int c, int v, int u) const {
    return data_[(static_cast<std::size_t>(c) * height_ + v) * width_ + u];
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

 private:
  int channels_ = 0;
  int height_ = 0;
  int width_ = 0;
  std::vector<double> data_;
};

/// Output tensor channel layout. The quality channel is post-sigmoid in
/// [0, 1]; rotation channels hold a scalar-first quaternion; width is in
/// meters. The TCP-variant tensor appends a depth-offset channel.
namespace channel {
inline constexpr int kQuality = 0;
inline constexpr int kQuatW = 1;
inline constexpr int kQuatX = 2;
inline constexpr int kQuatY = 3;
inline constexpr int kQuatZ = 4;
inline constexpr int kWidth = 5;
inline constexpr int kTcpOffset = 6;
}  // namespace channel

inline constexpr int kOutputChannels = 6;
inline constexpr int kTcpOutputChannels = 7;

Quat tensor_quaternion(const Tensor& t, int v, int u);
void set_tensor_quaternion(Tensor& t, int v, int u, const Quat& q);

void write_tensor(const std::filesystem::path& path, const Tensor& tensor);
Tensor read_tensor(const std::filesystem::path& path);

}  // namespace graspkit
