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

#include <memory>
#include <optional>

#include "graspkit/mesh.hpp"
#include "graspkit/types.hpp"

namespace graspkit {

/// Oriented box, the collision proxy for gripper fingers and palm.
struct OrientedBox {
  Vec3 center{0, 0, 0};
  Vec3 half_extents{0, 0, 0};
  Quat rotation{1, 0, 0, 0};
};

/// One object resting on the supporting plane z = 0 (the half-space
/// z <= 0 is solid).
struct Scene {
  std::shared_ptr<const TriMesh> mesh;
  RigidTransform object_pose;  // object -> world
};

enum class HitEntity { Object, Plane };

struct SceneHit {
  double distance = 0.0;
  Vec3 point{0, 0, 0};
  Vec3 normal{0, 0, 0};  // oriented against the ray
  std::int64_t face = -1;  // -1 for the plane
  HitEntity entity = HitEntity::Object;
};

/// Nearest intersection of the ray with the object or the plane.
/// `direction` must be unit length within 1e-9.
std::optional<SceneHit> raycast(const Scene& scene, const Vec3& origin,
                                const Vec3& direction);

/// True iff the box intersects any object triangle or the half-space z < 0.
bool box_collides(const Scene& scene, const OrientedBox& box);

/// Exact triangle vs oriented-box separating-axis test (13 axes).
bool triangle_box_overlap(const Vec3& a, const Vec3& b, const Vec3& c,
                          const OrientedBox& box);

}  // namespace graspkit
