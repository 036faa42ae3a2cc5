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

#include <optional>
#include <string>
#include <vector>

#include "graspkit/render.hpp"
#include "graspkit/tensor.hpp"

namespace graspkit {

struct NmsParams {
  double gamma = 0.4;      // acceptance threshold on predicted quality
  int peak_distance = 4;   // px, Chebyshev
  int max_proposals = 10;
};

/// 6-DoF grasp proposal in the robot base frame.
struct GraspProposal {
  Quat rotation{1, 0, 0, 0};
  Vec3 tcp{0, 0, 0};
  double width = 0.0;
  double quality = 0.0;
  int u = 0;
  int v = 0;
  bool width_clamped = false;  // negative prediction clamped to zero
};

/// Camera-frame grasp before the base-frame transform.
struct DecodedGrasp {
  Quat rotation{1, 0, 0, 0};
  Vec3 tcp{0, 0, 0};
  double width = 0.0;
  double quality = 0.0;
  int u = 0;
  int v = 0;
  bool width_clamped = false;
};

/// Pixels that could not be decoded (no-return depth), reported alongside
/// proposals.
struct SkippedPixel {
  int u = 0;
  int v = 0;
  std::string reason;
};

/// Local maxima of the quality plane (window max with row-major
/// tie-breaking), unfiltered by threshold. Sorted by descending quality,
/// then row-major.
std::vector<std::pair<int, int>> find_quality_peaks(const Tensor& tensor,
                                                    int peak_distance);

/// Greedy non-maximum suppression: keeps peaks with quality >= gamma whose
/// Chebyshev distance to every already-kept peak is >= peak_distance, up to
/// max_proposals. Returns (u, v) pixels in keep order.
std::vector<std::pair<int, int>> nms_select(const Tensor& tensor,
                                            const NmsParams& params = {});

/// Same selection from precomputed peaks (peak detection is threshold
/// independent, so sweeps reuse one peak list per tensor).
std::vector<std::pair<int, int>> nms_select_from_peaks(
    const Tensor& tensor, const std::vector<std::pair<int, int>>& peaks,
    const NmsParams& params);

/// Contact-anchored decode at one pixel: re-projects the pixel at its depth,
/// then translates half a width along the grasp x-axis to the TCP.
/// Returns nothing when the depth is a no-return.
std::optional<DecodedGrasp> decode_grasp(const Tensor& tensor, int u, int v,
                                         const CameraIntrinsics& intrinsics,
                                         const DepthImage& depth,
                                         double max_width = 0.08);

/// TCP-representation decode: the TCP sits at the re-projected surface point
/// pushed along the camera ray by the predicted depth offset; no width
/// translation.
std::optional<DecodedGrasp> decode_tcp_variant(const Tensor& tensor, int u, int v,
                                               const CameraIntrinsics& intrinsics,
                                               const DepthImage& depth,
                                               double max_width = 0.08);

/// Rigid change of frame camera -> base. Throws for a non-unit rotation.
GraspProposal to_base_frame(const DecodedGrasp& grasp, const RigidTransform& extrinsics);

struct ProposalSet {
  std::vector<GraspProposal> proposals;  // sorted by descending quality
  std::vector<SkippedPixel> skipped;
};

/// nms_select + decode_grasp + to_base_frame, sorted by descending quality.
ProposalSet propose(const Tensor& tensor, const CameraIntrinsics& intrinsics,
                    const DepthImage& depth, const RigidTransform& extrinsics,
                    const NmsParams& params = {}, double max_width = 0.08);

std::string proposals_to_json(const std::vector<GraspProposal>& proposals);

}  // namespace graspkit
