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

#include "graspkit/grasp_map.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace graspkit {

SparseGraspMap project_contacts(const std::vector<OrientedGrasp>& grasps,
                                const CameraIntrinsics& intrinsics,
                                const CameraPose& pose, const RenderResult& render,
                                double tau_vis) {
  SparseGraspMap map;
  map.width = intrinsics.width;
  map.height = intrinsics.height;
  map.mask = render.mask;

  const RigidTransform world_to_cam = pose.camera_to_world.inverse();
  // 180 degree flip about the grasp z axis re-anchors the frame so that x
  // points from the second contact back to the first.
  const Quat flip(0.0, 0.0, 0.0, 1.0);

  std::map<std::pair<int, int>, GraspMapEntry> by_pixel;

  for (std::size_t gi = 0; gi < grasps.size(); ++gi) {
    const OrientedGrasp& grasp = grasps[gi];
    const Quat rot_cam = (world_to_cam.rotation * grasp.rotation).normalized();
    for (int contact = 0; contact < 2; ++contact) {
      const Vec3& world_point = contact == 0 ? grasp.candidate.c1 : grasp.candidate.c2;
      const Vec3 cam_point = world_to_cam.apply(world_point);
      if (cam_point.z() <= 1e-9) continue;
      const Vec2 px = project(intrinsics, cam_point);
      const int u = static_cast<int>(std::lround(px.x()));
      const int v = static_cast<int>(std::lround(px.y()));
      if (!render.depth.in_bounds(u, v)) continue;
      const float rendered = render.depth.at(u, v);
      if (rendered <= 0.f) continue;
      if (std::abs(static_cast<double>(rendered) - cam_point.z()) > tau_vis) continue;
      if (render.mask.at(u, v) != 1) continue;

      GraspMapEntry entry;
      entry.u = u;
      entry.v = v;
      entry.quality = grasp.quality;
      entry.rotation = contact == 0 ? rot_cam : Quat(rot_cam * flip).normalized();
      entry.width = grasp.candidate.width;
      entry.epsilon = grasp.candidate.epsilon;
      entry.contact_camera = cam_point;
      entry.grasp_index = static_cast<int>(gi);

      const auto key = std::make_pair(v, u);
      auto it = by_pixel.find(key);
      if (it == by_pixel.end() || entry.epsilon > it->second.epsilon) {
        by_pixel[key] = entry;
      }
    }
  }

  map.entries.reserve(by_pixel.size());
  for (auto& [key, entry] : by_pixel) map.entries.push_back(std::move(entry));
  return map;
}

}  // namespace graspkit
