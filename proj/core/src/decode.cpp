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

#include "graspkit/decode.hpp"

#include <algorithm>
#include <cmath>

#include "json_util.hpp"

namespace graspkit {
namespace {

/// Window maximum with deterministic tie handling: a pixel is a peak iff
/// every neighbor is strictly smaller, or equal but later in row-major
/// order.
bool is_peak(const Tensor& t, int u, int v, int peak_distance) {
  const double q = t.at(channel::kQuality, v, u);
  const int lo_v = std::max(0, v - peak_distance);
  const int hi_v = std::min(t.height() - 1, v + peak_distance);
  const int lo_u = std::max(0, u - peak_distance);
  const int hi_u = std::min(t.width() - 1, u + peak_distance);
  for (int nv = lo_v; nv <= hi_v; ++nv) {
    for (int nu = lo_u; nu <= hi_u; ++nu) {
      if (nv == v && nu == u) continue;
      const double nq = t.at(channel::kQuality, nv, nu);
      if (nq > q) return false;
      if (nq == q && (nv < v || (nv == v && nu < u))) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::pair<int, int>> find_quality_peaks(const Tensor& tensor,
                                                    int peak_distance) {
  std::vector<std::pair<int, int>> peaks;
  for (int v = 0; v < tensor.height(); ++v) {
    for (int u = 0; u < tensor.width(); ++u) {
      if (is_peak(tensor, u, v, peak_distance)) peaks.emplace_back(u, v);
    }
  }
  // Descending quality; row-major order breaks ties (already row-major from
  // the scan, stable sort preserves it).
  std::stable_sort(peaks.begin(), peaks.end(), [&](const auto& a, const auto& b) {
    return tensor.at(channel::kQuality, a.second, a.first) >
           tensor.at(channel::kQuality, b.second, b.first);
  });
  return peaks;
}

std::vector<std::pair<int, int>> nms_select_from_peaks(
    const Tensor& tensor, const std::vector<std::pair<int, int>>& peaks,
    const NmsParams& params) {
  std::vector<std::pair<int, int>> kept;
  for (const auto& [u, v] : peaks) {
    if (static_cast<int>(kept.size()) >= params.max_proposals) break;
    if (tensor.at(channel::kQuality, v, u) < params.gamma) break;  // sorted: all below
    bool far_enough = true;
    for (const auto& [ku, kv] : kept) {
      if (std::max(std::abs(u - ku), std::abs(v - kv)) < params.peak_distance) {
        far_enough = false;
        break;
      }
    }
    if (far_enough) kept.emplace_back(u, v);
  }
  return kept;
}

std::vector<std::pair<int, int>> nms_select(const Tensor& tensor, const NmsParams& params) {
  return nms_select_from_peaks(tensor, find_quality_peaks(tensor, params.peak_distance),
                               params);
}

std::optional<DecodedGrasp> decode_grasp(const Tensor& tensor, int u, int v,
                                         const CameraIntrinsics& intrinsics,
                                         const DepthImage& depth, double max_width) {
  const float z = depth.at(u, v);
  if (z <= 0.f) return std::nullopt;
  DecodedGrasp g;
  g.u = u;
  g.v = v;
  g.quality = tensor.at(channel::kQuality, v, u);
  g.rotation = tensor_quaternion(tensor, v, u).normalized();
  double w = tensor.at(channel::kWidth, v, u);
  if (w < 0.0) {
    w = 0.0;
    g.width_clamped = true;
  }
  g.width = std::min(w, max_width);
  const Vec3 contact = backproject(intrinsics, u, v, static_cast<double>(z));
  const Vec3 x_axis = g.rotation * Vec3(1, 0, 0);
  g.tcp = contact + 0.5 * g.width * x_axis;
  return g;
}

std::optional<DecodedGrasp> decode_tcp_variant(const Tensor& tensor, int u, int v,
                                               const CameraIntrinsics& intrinsics,
                                               const DepthImage& depth, double max_width) {
  const float z = depth.at(u, v);
  if (z <= 0.f) return std::nullopt;
  DecodedGrasp g;
  g.u = u;
  g.v = v;
  g.quality = tensor.at(channel::kQuality, v, u);
  g.rotation = tensor_quaternion(tensor, v, u).normalized();
  double w = tensor.at(channel::kWidth, v, u);
  if (w < 0.0) {
    w = 0.0;
    g.width_clamped = true;
  }
  g.width = std::min(w, max_width);
  const Vec3 surface = backproject(intrinsics, u, v, static_cast<double>(z));
  const double offset = tensor.at(channel::kTcpOffset, v, u);
  g.tcp = surface + offset * pixel_ray(intrinsics, u, v);
  return g;
}

GraspProposal to_base_frame(const DecodedGrasp& grasp, const RigidTransform& extrinsics) {
  if (!is_unit_quaternion(extrinsics.rotation)) {
    throw std::invalid_argument("to_base_frame: extrinsics rotation is not rigid");
  }
  GraspProposal p;
  p.rotation = (extrinsics.rotation * grasp.rotation).normalized();
  p.tcp = extrinsics.apply(grasp.tcp);
  p.width = grasp.width;
  p.quality = grasp.quality;
  p.u = grasp.u;
  p.v = grasp.v;
  p.width_clamped = grasp.width_clamped;
  return p;
}

ProposalSet propose(const Tensor& tensor, const CameraIntrinsics& intrinsics,
                    const DepthImage& depth, const RigidTransform& extrinsics,
                    const NmsParams& params, double max_width) {
  if (tensor.height() != depth.height || tensor.width() != depth.width) {
    throw std::invalid_argument("propose: tensor/depth dimension mismatch");
  }
  ProposalSet out;
  for (const auto& [u, v] : nms_select(tensor, params)) {
    const auto decoded = decode_grasp(tensor, u, v, intrinsics, depth, max_width);
    if (!decoded) {
      out.skipped.push_back({u, v, "no-return depth"});
      continue;
    }
    out.proposals.push_back(to_base_frame(*decoded, extrinsics));
  }
  std::stable_sort(out.proposals.begin(), out.proposals.end(),
                   [](const GraspProposal& a, const GraspProposal& b) {
                     return a.quality > b.quality;
                   });
  return out;
}

std::string proposals_to_json(const std::vector<GraspProposal>& proposals) {
  using jsonutil::json;
  json arr = json::array();
  for (const auto& p : proposals) {
    arr.push_back(json{{"tcp_m", jsonutil::vec3(p.tcp)},
                       {"r", jsonutil::quat(p.rotation)},
                       {"width_m", p.width},
                       {"quality", p.quality},
                       {"pixel", json::array({p.u, p.v})}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace graspkit
