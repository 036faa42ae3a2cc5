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

#include "graspkit/camera.hpp"

#include <cmath>

#include "json_util.hpp"

namespace graspkit {

CameraIntrinsics load_intrinsics_file(const std::filesystem::path& path) {
  try {
    return jsonutil::intrinsics(jsonutil::load_json_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

RigidTransform load_transform_file(const std::filesystem::path& path) {
  try {
    RigidTransform t = jsonutil::transform(jsonutil::load_json_file(path));
    if (!is_unit_quaternion(t.rotation)) {
      throw FormatError(path.string() + ": rotation is not a unit quaternion");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Quat look_at_rotation(const Vec3& position, const Vec3& target) {
  const Vec3 z = (target - position).normalized();
  // Image up away from the plane: the camera y axis (image down) leans
  // toward world -z as far as orthogonality allows.
  Vec3 y = Vec3(0, 0, -1) - Vec3(0, 0, -1).dot(z) * z;
  if (y.squaredNorm() < 1e-12) {
    y = Vec3(0, 1, 0);  // straight-down view: any in-plane up works
  }
  y.normalize();
  const Vec3 x = y.cross(z).normalized();
  Mat3 r;
  r.col(0) = x;
  r.col(1) = y;
  r.col(2) = z;
  return Quat(r).normalized();
}

CameraPose sample_camera_pose(const Vec3& workspace_center, const CameraBounds& bounds,
                              std::uint64_t seed) {
  if (bounds.radius_min < 0.4 || bounds.radius_max > 1.4 ||
      bounds.radius_min > bounds.radius_max) {
    throw std::invalid_argument("camera bounds: radius must lie in [0.4, 1.4] m");
  }
  if (bounds.polar_min_deg < 0.0 || bounds.polar_max_deg > 90.0 ||
      bounds.polar_min_deg > bounds.polar_max_deg) {
    throw std::invalid_argument("camera bounds: polar angle must lie in [0, 90] deg");
  }
  Rng rng(seed);
  const double r = rng.uniform(bounds.radius_min, bounds.radius_max);
  const double polar = rng.uniform(bounds.polar_min_deg, bounds.polar_max_deg) * M_PI / 180.0;
  const double azimuth =
      rng.uniform(bounds.azimuth_min_deg, bounds.azimuth_max_deg) * M_PI / 180.0;
  const Vec3 offset(r * std::sin(polar) * std::cos(azimuth),
                    r * std::sin(polar) * std::sin(azimuth), r * std::cos(polar));
  const Vec3 position = workspace_center + offset;
  const Vec3 target =
      workspace_center + Vec3(rng.uniform(-bounds.target_jitter, bounds.target_jitter),
                              rng.uniform(-bounds.target_jitter, bounds.target_jitter),
                              rng.uniform(-bounds.target_jitter, bounds.target_jitter));
  CameraPose pose;
  pose.camera_to_world.rotation = look_at_rotation(position, target);
  pose.camera_to_world.translation = position;
  return pose;
}

}  // namespace graspkit
