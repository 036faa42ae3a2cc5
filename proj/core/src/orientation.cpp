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

#include "graspkit/orientation.hpp"

#include <cmath>

#include "graspkit/gripper.hpp"

namespace graspkit {
namespace {

/// True iff any gripper box collides with the scene at any point of the
/// linear approach ending at `tcp` with approach direction `approach`.
bool approach_collides(const Scene& scene, const GripperModel& gripper, const Vec3& tcp,
                       const Quat& rotation, const Vec3& approach_dir,
                       const ApproachParams& approach) {
  auto pose_collides = [&](const Vec3& at) {
    for (const auto& box : gripper_boxes(gripper, at, rotation, gripper.max_width)) {
      if (box_collides(scene, box)) return true;
    }
    return false;
  };
  if (pose_collides(tcp)) return true;  // final pose first: cheap rejection
  const int n = std::max(1, static_cast<int>(std::ceil(approach.distance / approach.step)));
  for (int i = 0; i < n; ++i) {
    const double back = approach.distance - i * approach.step;
    if (pose_collides(tcp - back * approach_dir)) return true;
  }
  return false;
}

}  // namespace

std::vector<Vec3> hinge_directions(const Vec3& x_axis, int n_steps) {
  // omega = 0 reference: downward direction in the plane spanned by the
  // world -z axis and the grasp x-axis.
  Vec3 base = Vec3(0, 0, -1) - Vec3(0, 0, -1).dot(x_axis) * x_axis;
  if (base.squaredNorm() < 1e-12) {
    base = Vec3(1, 0, 0) - Vec3(1, 0, 0).dot(x_axis) * x_axis;
  }
  if (base.squaredNorm() < 1e-12) {
    base = Vec3(0, 1, 0) - Vec3(0, 1, 0).dot(x_axis) * x_axis;
  }
  base.normalize();
  std::vector<Vec3> dirs(n_steps);
  for (int i = 0; i < n_steps; ++i) {
    const double angle = 2.0 * M_PI * i / n_steps;
    dirs[i] = (Eigen::AngleAxisd(angle, x_axis) * base).normalized();
  }
  return dirs;
}

Quat grasp_rotation(const Vec3& x_axis, const Vec3& approach) {
  Mat3 r;
  r.col(0) = x_axis;
  r.col(2) = approach;
  r.col(1) = approach.cross(x_axis);  // y = z cross x
  return Quat(r).normalized();
}

std::vector<std::uint8_t> orientation_collision_mask(const GraspCandidate& world_candidate,
                                                     const Scene& scene,
                                                     const GripperModel& gripper,
                                                     int n_steps,
                                                     const ApproachParams& approach) {
  const auto dirs = hinge_directions(world_candidate.x_axis, n_steps);
  const Vec3 tcp = world_candidate.midpoint();
  std::vector<std::uint8_t> mask(n_steps, 0);
  for (int i = 0; i < n_steps; ++i) {
    const Quat rot = grasp_rotation(world_candidate.x_axis, dirs[i]);
    mask[i] = approach_collides(scene, gripper, tcp, rot, dirs[i], approach) ? 1 : 0;
  }
  return mask;
}

std::optional<int> select_from_mask(const std::vector<std::uint8_t>& collision_mask,
                                    const std::vector<Vec3>& directions,
                                    const Vec3& principal_ray) {
  const int n = static_cast<int>(collision_mask.size());
  int free_count = 0;
  for (auto c : collision_mask) free_count += (c == 0);
  if (free_count == 0) return std::nullopt;

  if (free_count == n) {
    // No collision anywhere: pick the orientation most aligned with the ray.
    int best = 0;
    double best_dot = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double d = directions[i].dot(principal_ray);
      if (d > best_dot) {
        best_dot = d;
        best = i;
      }
    }
    return best;
  }

  // Circular runs of collision-free steps. A run starts where the previous
  // step collides.
  struct Run {
    int start, length;
  };
  std::vector<Run> runs;
  for (int i = 0; i < n; ++i) {
    if (collision_mask[i] == 0 && collision_mask[(i + n - 1) % n] != 0) {
      int len = 0;
      while (len < n && collision_mask[(i + len) % n] == 0) ++len;
      runs.push_back({i, len});
    }
  }

  auto median_of = [&](const Run& run) { return (run.start + (run.length - 1) / 2) % n; };

  if (runs.size() == 1) return median_of(runs[0]);

  int best_index = -1;
  double best_dot = -std::numeric_limits<double>::infinity();
  for (const auto& run : runs) {
    const int median = median_of(run);
    const double d = directions[median].dot(principal_ray);
    if (d > best_dot) {
      best_dot = d;
      best_index = median;
    }
  }
  return best_index;
}

OrientedGrasp oriented_grasp_at(const GraspCandidate& world_candidate,
                                const std::vector<Vec3>& directions, int index,
                                double quality_delta) {
  OrientedGrasp grasp;
  grasp.candidate = world_candidate;
  grasp.rotation = grasp_rotation(world_candidate.x_axis, directions[index]);
  grasp.tcp = world_candidate.midpoint();
  grasp.quality = label_quality(world_candidate.epsilon, true, quality_delta);
  return grasp;
}

std::optional<OrientedGrasp> select_orientation(const GraspCandidate& world_candidate,
                                                const Scene& scene,
                                                const CameraPose& camera,
                                                const GripperModel& gripper,
                                                double delta_omega_deg,
                                                double quality_delta,
                                                const ApproachParams& approach) {
  const int n_steps = std::max(1, static_cast<int>(std::lround(360.0 / delta_omega_deg)));
  const auto mask = orientation_collision_mask(world_candidate, scene, gripper, n_steps,
                                               approach);
  const auto dirs = hinge_directions(world_candidate.x_axis, n_steps);
  const auto chosen = select_from_mask(mask, dirs, camera.principal_ray());
  if (!chosen) return std::nullopt;
  return oriented_grasp_at(world_candidate, dirs, *chosen, quality_delta);
}

}  // namespace graspkit
