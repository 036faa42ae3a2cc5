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

#include <vector>

#include "graspkit/camera.hpp"
#include "graspkit/scene.hpp"

namespace graspkit {

/// Row-major W x H z-depth grid in meters; 0 encodes no-return.
struct DepthImage {
  int width = 0;
  int height = 0;
  std::vector<float> data;  // height * width

  DepthImage() = default;
  DepthImage(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h, 0.f) {}

  float& at(int u, int v) { return data[static_cast<std::size_t>(v) * width + u]; }
  float at(int u, int v) const { return data[static_cast<std::size_t>(v) * width + u]; }
  bool in_bounds(int u, int v) const { return u >= 0 && u < width && v >= 0 && v < height; }
};

/// Row-major W x H binary mask.
struct MaskImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  MaskImage() = default;
  MaskImage(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h, 0) {}

  std::uint8_t& at(int u, int v) { return data[static_cast<std::size_t>(v) * width + u]; }
  std::uint8_t at(int u, int v) const { return data[static_cast<std::size_t>(v) * width + u]; }
};

struct RenderResult {
  DepthImage depth;
  MaskImage mask;  // 1 where the nearest hit is the object
};

/// Ray-cast z-depth render: per-pixel nearest hit of the ray through the
/// pixel center; depth is the distance along the camera z axis.
RenderResult render_depth(const Scene& scene, const CameraIntrinsics& intrinsics,
                          const CameraPose& pose);

/// Kinect-style depth noise: axial sigma_z(z) = a0 + a2 (z - 0.4)^2 after a
/// lateral resample at a Gaussian-jittered pixel location.
struct NoiseParams {
  double axial_a0 = 0.0012;   // m
  double axial_a2 = 0.0019;   // 1/m
  double lateral_sigma = 0.8;  // px
};

/// No-return pixels are preserved exactly; valid pixels stay positive.
DepthImage apply_sensor_noise(const DepthImage& depth, const NoiseParams& params,
                              std::uint64_t seed);

}  // namespace graspkit
