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

#include <filesystem>

#include "graspkit/types.hpp"

namespace graspkit {

/// Pinhole intrinsics. Camera frame: x right, y down, z along the view
/// direction (the principal ray).
struct CameraIntrinsics {
  double fx = 525.0;
  double fy = 525.0;
  double cx = 319.5;
  double cy = 239.5;
  int width = 640;
  int height = 480;

  void validate() const {
    if (fx <= 0 || fy <= 0) throw std::invalid_argument("intrinsics: fx, fy must be > 0");
    if (cx < 0 || cx >= width || cy < 0 || cy >= height) {
      throw std::invalid_argument("intrinsics: principal point outside image");
    }
    if (width <= 0 || height <= 0) {
      throw std::invalid_argument("intrinsics: non-positive image size");
    }
  }
};

struct CameraPose {
  RigidTransform camera_to_world;

  Vec3 position() const { return camera_to_world.translation; }
  Vec3 principal_ray() const { return camera_to_world.rotate(Vec3(0, 0, 1)); }
  Vec3 world_to_camera(const Vec3& p) const { return camera_to_world.inverse().apply(p); }
};

struct CameraBounds {
  double radius_min = 0.5;
  double radius_max = 1.0;
  double polar_min_deg = 5.0;   // from vertical
  double polar_max_deg = 70.0;
  double azimuth_min_deg = 0.0;
  double azimuth_max_deg = 360.0;
  double target_jitter = 0.02;  // m, per axis
};

/// Random camera in a spherical shell around `workspace_center`, looking at
/// the jittered center, with image up chosen away from the plane.
CameraPose sample_camera_pose(const Vec3& workspace_center, const CameraBounds& bounds,
                              std::uint64_t seed);

/// Look-at orientation used by sample_camera_pose, exposed for tests.
Quat look_at_rotation(const Vec3& position, const Vec3& target);

/// Continuous projection of a camera-frame point (z > 0) to pixel coords.
inline Vec2 project(const CameraIntrinsics& k, const Vec3& p_cam) {
  return Vec2(k.fx * p_cam.x() / p_cam.z() + k.cx, k.fy * p_cam.y() / p_cam.z() + k.cy);
}

/// Camera-frame point at pixel (u, v) and z-depth z.
inline Vec3 backproject(const CameraIntrinsics& k, double u, double v, double z) {
  return Vec3((u - k.cx) * z / k.fx, (v - k.cy) * z / k.fy, z);
}

/// Unit direction of the camera ray through pixel (u, v).
inline Vec3 pixel_ray(const CameraIntrinsics& k, double u, double v) {
  return Vec3((u - k.cx) / k.fx, (v - k.cy) / k.fy, 1.0).normalized();
}

/// JSON file loaders for the CLI: {fx, fy, cx, cy, width, height} and
/// {r: [w,x,y,z], t: [x,y,z]}.
CameraIntrinsics load_intrinsics_file(const std::filesystem::path& path);
RigidTransform load_transform_file(const std::filesystem::path& path);

}  // namespace graspkit
