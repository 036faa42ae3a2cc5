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

#include "graspkit/oracle.hpp"

#include <algorithm>

#include "graspkit/loss.hpp"

namespace graspkit {
namespace {

Tensor base_oracle(const SparseGraspMap& map, int channels, int width, int height) {
  Tensor out(channels, height, width);
  for (int v = 0; v < height; ++v) {
    for (int u = 0; u < width; ++u) {
      out.at(channel::kQuality, v, u) = kOracleLow;
      out.at(channel::kQuatW, v, u) = 1.0;  // identity quaternion elsewhere
    }
  }
  for (const auto& e : map.entries) {
    if (e.quality == 1) out.at(channel::kQuality, e.v, e.u) = kOracleHigh;
    set_tensor_quaternion(out, e.v, e.u, e.rotation.normalized());
    out.at(channel::kWidth, e.v, e.u) = e.width;
  }
  return out;
}

}  // namespace

Tensor oracle_predict(const SparseGraspMap& map, int width, int height) {
  return base_oracle(map, kOutputChannels, width, height);
}

Tensor oracle_predict_tcp(const SparseGraspMap& map, const CameraIntrinsics& intrinsics) {
  Tensor out = base_oracle(map, kTcpOutputChannels, intrinsics.width, intrinsics.height);
  for (const auto& e : map.entries) {
    out.at(channel::kTcpOffset, e.v, e.u) = tcp_depth_offset(e, intrinsics);
  }
  return out;
}

Tensor perturbed_oracle(const SparseGraspMap& map, int width, int height,
                        const PerturbParams& params, std::uint64_t seed) {
  Tensor out = oracle_predict(map, width, height);
  Rng rng(seed);
  if (params.quality_sigma > 0.0) {
    for (int v = 0; v < height; ++v) {
      for (int u = 0; u < width; ++u) {
        const double q = out.at(channel::kQuality, v, u) +
                         rng.normal() * params.quality_sigma;
        out.at(channel::kQuality, v, u) = std::clamp(q, 0.0, 1.0);
      }
    }
  }
  if (params.rotation_sigma > 0.0 || params.width_sigma > 0.0) {
    for (const auto& e : map.entries) {
      if (params.rotation_sigma > 0.0) {
        const Vec3 axis = rng.unit_vector();
        const double angle = rng.normal() * params.rotation_sigma;
        const Quat jitter(Eigen::AngleAxisd(angle, axis));
        set_tensor_quaternion(out, e.v, e.u,
                              (jitter * tensor_quaternion(out, e.v, e.u)).normalized());
      }
      if (params.width_sigma > 0.0) {
        out.at(channel::kWidth, e.v, e.u) =
            std::max(0.0, out.at(channel::kWidth, e.v, e.u) +
                              rng.normal() * params.width_sigma);
      }
    }
  }
  return out;
}

}  // namespace graspkit
