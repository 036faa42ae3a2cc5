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

#include <optional>
#include <vector>

#include "graspkit/camera.hpp"
#include "graspkit/sampler.hpp"
#include "graspkit/scene.hpp"

namespace graspkit {

/// Linear approach used both when clearing grasp labels and when executing
/// grasps in the simulator. The same parameters must be used in both places
/// so that labels imply executability.
struct ApproachParams {
  double distance = 0.15;  // m, swept along -z of the grasp frame
  double step = 0.005;     // m
};

/// Full 6-DoF grasp: candidate plus a selected approach orientation.
/// Contacts, tcp and rotation are in the world frame.
struct OrientedGrasp {
  GraspCandidate candidate;
  Quat rotation{1, 0, 0, 0};  // grasp frame -> world
  Vec3 tcp{0, 0, 0};          // midpoint of the two contacts
  int quality = 0;            // 1 iff epsilon >= delta and collision free
};

/// Approach directions for hinge rotation about the grasp x-axis.
/// Index 0 points as far downward as orthogonality to the axis allows;
/// successive entries rotate counter-clockwise about the axis.
std::vector<Vec3> hinge_directions(const Vec3& x_axis, int n_steps);

/// Grasp-frame rotation with x toward the second contact and z along the
/// approach direction.
Quat grasp_rotation(const Vec3& x_axis, const Vec3& approach);

/// Per-orientation collision flags (1 = collides) for the gripper posed at
/// the candidate with jaws open to max_width, checked over the whole linear
/// approach (final pose plus swept path).
std::vector<std::uint8_t> orientation_collision_mask(const GraspCandidate& world_candidate,
                                                     const Scene& scene,
                                                     const GripperModel& gripper,
                                                     int n_steps = 24,
                                                     const ApproachParams& approach = {});

/// Chooses the hinge orientation given the collision mask: the median of
/// the selected collision-free run; multiple runs are tie-broken by the
/// alignment of their medians with the camera principal ray.
std::optional<int> select_from_mask(const std::vector<std::uint8_t>& collision_mask,
                                    const std::vector<Vec3>& directions,
                                    const Vec3& principal_ray);

/// Full orientation selection per the hinge-rotation procedure. Returns
/// nothing when all orientations collide.
std::optional<OrientedGrasp> select_orientation(const GraspCandidate& world_candidate,
                                                const Scene& scene,
                                                const CameraPose& camera,
                                                const GripperModel& gripper,
                                                double delta_omega_deg = 15.0,
                                                double quality_delta = 0.5,
                                                const ApproachParams& approach = {});

/// Builds the OrientedGrasp for a specific hinge index (used with cached
/// collision masks).
OrientedGrasp oriented_grasp_at(const GraspCandidate& world_candidate,
                                const std::vector<Vec3>& directions, int index,
                                double quality_delta = 0.5);

}  // namespace graspkit
