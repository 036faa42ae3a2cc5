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
namespace {

// Akenine-Moller style: triangle transformed into the box frame, box
// centered at the origin with half extents h.
bool tri_box_sat(const Vec3& v0, const Vec3& v1, const Vec3& v2, const Vec3& h) {
  auto axis_separates = [&](const Vec3& axis) {
    const double r = h.x() * std::abs(axis.x()) + h.y() * std::abs(axis.y()) +
                     h.z() * std::abs(axis.z());
    const double p0 = axis.dot(v0);
    const double p1 = axis.dot(v1);
    const double p2 = axis.dot(v2);
    const double lo = std::min({p0, p1, p2});
    const double hi = std::max({p0, p1, p2});
    return lo > r || hi < -r;
  };

  // Box face normals.
  if (std::min({v0.x(), v1.x(), v2.x()}) > h.x() ||
      std::max({v0.x(), v1.x(), v2.x()}) < -h.x())
    return false;
  if (std::min({v0.y(), v1.y(), v2.y()}) > h.y() ||
      std::max({v0.y(), v1.y(), v2.y()}) < -h.y())
    return false;
  if (std::min({v0.z(), v1.z(), v2.z()}) > h.z() ||
      std::max({v0.z(), v1.z(), v2.z()}) < -h.z())
    return false;

  // Triangle normal.
  const Vec3 e0 = v1 - v0;
  const Vec3 e1 = v2 - v1;
  const Vec3 e2 = v0 - v2;
  if (axis_separates(e0.cross(e1))) return false;

  // Nine edge cross products.
  const Vec3 axes[3] = {Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
  for (const Vec3& e : {e0, e1, e2}) {
    for (const Vec3& u : axes) {
      const Vec3 a = u.cross(e);
      if (a.squaredNorm() < 1e-24) continue;
      if (axis_separates(a)) return false;
    }
  }
  return true;
}

}  // namespace

bool triangle_box_overlap(const Vec3& a, const Vec3& b, const Vec3& c,
                          const OrientedBox& box) {
  const Quat inv = box.rotation.conjugate();
  return tri_box_sat(inv * (a - box.center), inv * (b - box.center),
                     inv * (c - box.center), box.half_extents);
}

bool box_collides(const Scene& scene, const OrientedBox& box) {
  if (box.half_extents.minCoeff() <= 0.0) {
    throw std::invalid_argument("box_collides: half extents must be positive");
  }

  // Half-space z < 0: lowest corner of the box.
  const Mat3 r = box.rotation.toRotationMatrix();
  const double drop = std::abs(r(2, 0)) * box.half_extents.x() +
                      std::abs(r(2, 1)) * box.half_extents.y() +
                      std::abs(r(2, 2)) * box.half_extents.z();
  if (box.center.z() - drop < 0.0) return true;

  // Object triangles: move the box into the object frame, prune with the
  // BVH via the box's object-frame AABB, then exact SAT per triangle.
  const RigidTransform inv_pose = scene.object_pose.inverse();
  OrientedBox local;
  local.center = inv_pose.apply(box.center);
  local.rotation = (inv_pose.rotation * box.rotation).normalized();
  local.half_extents = box.half_extents;

  const Mat3 rl = local.rotation.toRotationMatrix();
  Vec3 radius = Vec3::Zero();
  for (int i = 0; i < 3; ++i) {
    radius += rl.col(i).cwiseAbs() * local.half_extents[i];
  }
  const Vec3 lo = local.center - radius;
  const Vec3 hi = local.center + radius;

  const TriMesh& mesh = *scene.mesh;
  return mesh.bvh().overlap_aabb(lo, hi, [&](std::uint32_t tri) {
    return triangle_box_overlap(mesh.triangle_vertex(tri, 0),
                                mesh.triangle_vertex(tri, 1),
                                mesh.triangle_vertex(tri, 2), local);
  });
}

}  // namespace graspkit
