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

#include "graspkit/orientation.hpp"
#include "graspkit/render.hpp"

namespace graspkit {

/// One pixel-anchored ground-truth grasp. The rotation is re-anchored so
/// its x-axis points from this contact toward the other one, expressed in
/// the camera frame.
struct GraspMapEntry {
  int u = 0;
  int v = 0;
  int quality = 0;
  Quat rotation{1, 0, 0, 0};  // grasp -> camera
  double width = 0.0;
  double epsilon = 0.0;
  // Provenance (not serialized into grasps.json):
  Vec3 contact_camera{0, 0, 0};
  int grasp_index = -1;
};

/// Sparse per-image ground truth: at most one entry per pixel, plus the
/// object segmentation mask. Mask-0 pixels are implicit negatives.
struct SparseGraspMap {
  int width = 0;
  int height = 0;
  std::vector<GraspMapEntry> entries;  // sorted by (v, u)
  MaskImage mask;
};

/// Projects world-frame grasps into the image. A contact is visible iff it
/// lands in bounds on a mask-1 pixel whose rendered depth matches the
/// contact depth within tau_vis; pixel conflicts keep the entry with the
/// highest epsilon.
SparseGraspMap project_contacts(const std::vector<OrientedGrasp>& grasps,
                                const CameraIntrinsics& intrinsics,
                                const CameraPose& pose, const RenderResult& render,
                                double tau_vis = 0.005);

}  // namespace graspkit
