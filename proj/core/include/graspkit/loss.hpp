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

#include "graspkit/grasp_map.hpp"
#include "graspkit/tensor.hpp"

namespace graspkit {

/// 1 - |r . r_hat|, the double-cover-aware quaternion distance in [0, 1].
/// Inputs must be unit within 1e-6.
double quaternion_distance(const Quat& r, const Quat& r_hat);

struct LossBreakdown {
  double total = 0.0;
  double l_q = 0.0;
  double l_r = 0.0;
  double l_w = 0.0;
  double l_z = 0.0;  // TCP variant only
  int positive_count = 0;
};

struct LossOptions {
  double alpha = 0.1;
  double beta = 0.1;
  double nu = 0.1;               // TCP variant only
  double bce_clamp = 1e-7;       // predicted probabilities clamp band
  double negative_fraction = 1.0;  // <1 subsamples mask-0 negatives
  std::uint64_t negative_seed = 0;
};

/// Composite loss for the contact-anchored representation:
/// total = L_q + alpha * L_r + beta * L_w.
/// L_q is mean binary cross-entropy over supervised pixels (all map entries
/// plus mask-0 pixels as negatives); L_r and L_w average over positive
/// entries only. Quaternion channels are normalized before the distance.
LossBreakdown loss_contact(const Tensor& pred, const SparseGraspMap& target,
                           const LossOptions& opts = {});

/// TCP-variant loss with the extra nu * L_z term (L1 on the grasp-center
/// depth offset at positive pixels). The ground-truth offset is derived
/// from the entry width and x-axis along the pixel ray, which needs the
/// camera intrinsics.
LossBreakdown loss_tcp(const Tensor& pred, const SparseGraspMap& target,
                       const CameraIntrinsics& intrinsics, const LossOptions& opts = {
                           .alpha = 0.1, .beta = 0.01, .nu = 0.1});

/// Analytic gradients of the matching loss with respect to every prediction
/// channel; same shape as `pred`. Checked against finite differences in the
/// test suite.
Tensor loss_contact_gradient(const Tensor& pred, const SparseGraspMap& target,
                             const LossOptions& opts = {});
Tensor loss_tcp_gradient(const Tensor& pred, const SparseGraspMap& target,
                         const CameraIntrinsics& intrinsics, const LossOptions& opts = {
                             .alpha = 0.1, .beta = 0.01, .nu = 0.1});

/// Ground-truth TCP depth offset for a map entry: the component of the
/// contact-to-tcp translation along the camera ray through its pixel.
double tcp_depth_offset(const GraspMapEntry& entry, const CameraIntrinsics& intrinsics);

}  // namespace graspkit
