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
#include <map>
#include <string>

#include "graspkit/grasp_map.hpp"
#include "graspkit/render.hpp"
#include "graspkit/sampler.hpp"

namespace graspkit {

/// Provenance recorded with every rendered sample.
struct SampleMeta {
  std::string object_id;
  int stable_pose_id = 0;
  int image_id = 0;
  double scale_factor = 1.0;
  double target_width = 0.0;
  CameraIntrinsics intrinsics;
  RigidTransform camera_to_world;
  RigidTransform object_pose;
  GripperModel gripper;
  EpsilonParams epsilon_params;
  int sampler_max_grasps = 100;
  int sampler_k = 6;
  double quality_delta = 0.5;
  double tau_vis = 0.005;
  NoiseParams noise;
  std::uint64_t master_seed = 0;
  std::uint64_t camera_seed = 0;
  std::uint64_t noise_seed = 0;
};

struct Sample {
  DepthImage depth;
  DepthImage depth_noisy;
  SparseGraspMap map;
  SampleMeta meta;
};

/// Writes one sample directory: depth.f32, depth_noisy.f32, mask.u8,
/// grasps.json and meta.json (which carries a CRC32 per sibling file).
void write_sample(const std::filesystem::path& dir, const Sample& sample);

/// Reads a sample back, verifying sizes and CRC32 checksums.
/// Throws FormatError on corruption, IoError on missing files.
Sample read_sample(const std::filesystem::path& dir);

std::uint32_t crc32_file(const std::filesystem::path& path);

void write_depth_raw(const std::filesystem::path& path, const DepthImage& depth);
DepthImage read_depth_raw(const std::filesystem::path& path, int width, int height);

}  // namespace graspkit
