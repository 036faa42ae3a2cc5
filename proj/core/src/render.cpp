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

#include "graspkit/render.hpp"

#include <cmath>

#include "graspkit/bvh.hpp"

namespace graspkit {

RenderResult render_depth(const Scene& scene, const CameraIntrinsics& intrinsics,
                          const CameraPose& pose) {
  intrinsics.validate();
  const int w = intrinsics.width;
  const int h = intrinsics.height;
  RenderResult out;
  out.depth = DepthImage(w, h);
  out.mask = MaskImage(w, h);

  const Mat3 cam_rot = pose.camera_to_world.rotation.toRotationMatrix();
  const Vec3 origin = pose.camera_to_world.translation;

  // Precompute the ray in the object frame once per pixel; the plane test
  // stays in world coordinates.
  const RigidTransform obj_inv = scene.object_pose.inverse();
  const Vec3 origin_local = obj_inv.apply(origin);
  const Mat3 rot_local = (obj_inv.rotation * pose.camera_to_world.rotation).toRotationMatrix();
  const Bvh& bvh = scene.mesh->bvh();

  for (int v = 0; v < h; ++v) {
    for (int u = 0; u < w; ++u) {
      // Direction in camera coords; |d_cam| scales distances so that the
      // raw triangle distance is already a multiple of the z-depth.
      const Vec3 d_cam((u - intrinsics.cx) / intrinsics.fx,
                       (v - intrinsics.cy) / intrinsics.fy, 1.0);
      const double inv_norm = 1.0 / d_cam.norm();
      const Vec3 dir_world = (cam_rot * d_cam) * inv_norm;

      double best_t = std::numeric_limits<double>::infinity();
      bool is_object = false;

      if (std::abs(dir_world.z()) > 1e-15) {
        const double t = -origin.z() / dir_world.z();
        if (t > 1e-9) best_t = t;
      }
      const Vec3 dir_local = (rot_local * d_cam) * inv_norm;
      const auto hit = bvh.raycast(origin_local, dir_local, 1e-9, best_t);
      if (hit) {
        best_t = hit->distance;
        is_object = true;
      }
      if (std::isfinite(best_t)) {
        // z-depth = t * (unit dir . camera z) = t / |d_cam|.
        out.depth.at(u, v) = static_cast<float>(best_t * inv_norm);
        out.mask.at(u, v) = is_object ? 1 : 0;
      }
    }
  }
  return out;
}

DepthImage apply_sensor_noise(const DepthImage& depth, const NoiseParams& params,
                              std::uint64_t seed) {
  Rng rng(seed);
  DepthImage out(depth.width, depth.height);
  for (int v = 0; v < depth.height; ++v) {
    for (int u = 0; u < depth.width; ++u) {
      const float z0 = depth.at(u, v);
      if (z0 <= 0.f) continue;  // no-return stays no-return

      double z = z0;
      if (params.lateral_sigma > 0.0) {
        const int su = static_cast<int>(std::lround(u + rng.normal() * params.lateral_sigma));
        const int sv = static_cast<int>(std::lround(v + rng.normal() * params.lateral_sigma));
        if (depth.in_bounds(su, sv) && depth.at(su, sv) > 0.f) {
          z = depth.at(su, sv);
        }
      }
      const double dz = z - 0.4;
      const double sigma_z = params.axial_a0 + params.axial_a2 * dz * dz;
      if (sigma_z > 0.0) {
        z += rng.normal() * sigma_z;
      }
      out.at(u, v) = static_cast<float>(std::max(z, 1e-6));
    }
  }
  return out;
}

}  // namespace graspkit
