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

#include <cmath>

#include "graspkit/bvh.hpp"
#include "graspkit/scene.hpp"

namespace graspkit {

std::optional<SceneHit> raycast(const Scene& scene, const Vec3& origin,
                                const Vec3& direction) {
  if (std::abs(direction.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("raycast: direction must be unit length");
  }

  std::optional<SceneHit> best;

  // Plane z = 0, hit only from above (the solid side gives no return).
  if (std::abs(direction.z()) > 1e-15) {
    const double t = -origin.z() / direction.z();
    if (t > 1e-9) {
      SceneHit hit;
      hit.distance = t;
      hit.point = origin + t * direction;
      hit.normal = direction.z() < 0.0 ? Vec3(0, 0, 1) : Vec3(0, 0, -1);
      hit.face = -1;
      hit.entity = HitEntity::Plane;
      best = hit;
    }
  }

  // Object: intersect in the object frame.
  const RigidTransform inv = scene.object_pose.inverse();
  const Vec3 o_local = inv.apply(origin);
  const Vec3 d_local = inv.rotate(direction);
  const double t_max = best ? best->distance : std::numeric_limits<double>::infinity();
  const auto tri_hit = scene.mesh->bvh().raycast(o_local, d_local, 1e-9, t_max);
  if (tri_hit) {
    SceneHit hit;
    hit.distance = tri_hit->distance;
    hit.point = origin + tri_hit->distance * direction;
    Vec3 n = scene.object_pose.rotate(tri_hit->face_normal);
    if (n.dot(direction) > 0.0) n = -n;
    hit.normal = n;
    hit.face = tri_hit->face;
    hit.entity = HitEntity::Object;
    best = hit;
  }
  return best;
}

}  // namespace graspkit
