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
#include <string>

#include "graspkit/camera.hpp"
#include "graspkit/decode.hpp"
#include "graspkit/gripper.hpp"
#include "graspkit/orientation.hpp"
#include "graspkit/render.hpp"
#include "graspkit/sampler.hpp"
#include "graspkit/simulate.hpp"

namespace graspkit {

/// Every tunable of the pipeline, with defaults matching the dataset and
/// decode conventions. Loadable from a sectioned key=value file; unknown
/// keys are rejected. The effective config is echoed into every run's
/// output directory.
struct PipelineConfig {
  // [run]
  std::uint64_t seed = 1;
  int jobs = 1;

  // [mesh]
  double rescale_min = 0.06;
  double rescale_max = 0.10;

  // [gripper]
  GripperModel gripper;

  // [sampler]
  int max_grasps = 100;
  int sampler_k = 6;
  double quality_delta = 0.5;
  EpsilonParams epsilon;

  // [camera]
  CameraIntrinsics intrinsics;
  CameraBounds camera_bounds;

  // [render]
  double tau_vis = 0.005;

  // [noise]
  bool noise_enabled = true;  // applied to the stored noisy dataset copy
  NoiseParams noise;

  // [decode]
  NmsParams nms;

  // [sim]
  SimParams sim;

  // [eval]
  int trials_per_object = 100;
  double workspace_size = 0.30;
  bool eval_noise = false;  // corrupt the rendered depth before prediction

  // [dataset]
  int images_per_pose = 20;
  int max_poses = 25;

  void validate() const;
};

/// Reads a sectioned key=value file over `base` (file values win over the
/// passed-in defaults). Unknown sections or keys throw FormatError.
PipelineConfig load_config(const std::filesystem::path& path,
                           const PipelineConfig& base = {});

/// Writes the full effective config, suitable for reloading.
void save_config(const std::filesystem::path& path, const PipelineConfig& config);

std::string config_to_string(const PipelineConfig& config);

}  // namespace graspkit
