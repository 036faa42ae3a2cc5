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

#include "graspkit/simulate.hpp"

#include <cmath>

#include "graspkit/bvh.hpp"
#include "graspkit/sampler.hpp"

namespace graspkit {

const char* to_string(SimResult r) {
  switch (r) {
    case SimResult::Success: return "Success";
    case SimResult::ApproachCollision: return "ApproachCollision";
    case SimResult::NoContact: return "NoContact";
    case SimResult::NotForceClosure: return "NotForceClosure";
    case SimResult::NoProposal: return "NoProposal";
  }
  return "Unknown";
}

SimOutcome simulate_grasp(const Scene& scene, const GraspProposal& proposal,
                          const GripperModel& gripper, const SimParams& params) {
  SimOutcome outcome;
  const Vec3 approach_dir = proposal.rotation * Vec3(0, 0, 1);
  const Vec3 x_axis = proposal.rotation * Vec3(1, 0, 0);

  auto pose_collides = [&](const Vec3& at) {
    for (const auto& box : gripper_boxes(gripper, at, proposal.rotation, gripper.max_width)) {
      if (box_collides(scene, box)) return true;
    }
    return false;
  };

  // Linear approach with jaws open to max_width.
  const double total = params.approach.distance;
  const int n = std::max(1, static_cast<int>(std::ceil(total / params.approach.step)));
  for (int i = 0; i <= n; ++i) {
    const double back = i < n ? total - i * params.approach.step : 0.0;
    if (pose_collides(proposal.tcp - back * approach_dir)) {
      outcome.result = SimResult::ApproachCollision;
      outcome.swept_distance = total - back;
      return outcome;
    }
  }
  outcome.swept_distance = total;

  // Close the jaws: first object surface hit from each finger plane.
  const RigidTransform inv_pose = scene.object_pose.inverse();
  const double w = gripper.max_width;
  auto finger_contact = [&](const Vec3& from, const Vec3& dir)
      -> std::optional<std::pair<Vec3, Vec3>> {
    const Vec3 o_local = inv_pose.apply(from);
    const Vec3 d_local = inv_pose.rotate(dir);
    const auto hit = scene.mesh->bvh().raycast(o_local, d_local, 0.0, w);
    if (!hit) return std::nullopt;
    return std::make_pair(scene.object_pose.apply(hit->point),
                          scene.object_pose.rotate(hit->face_normal));
  };

  const auto a = finger_contact(proposal.tcp - 0.5 * w * x_axis, x_axis);
  const auto b = finger_contact(proposal.tcp + 0.5 * w * x_axis, -x_axis);
  if (!a || !b) {
    outcome.result = SimResult::NoContact;
    return outcome;
  }
  const double closure_width = (b->first - a->first).dot(x_axis);
  if (closure_width < 1e-9) {
    // The jaw rays crossed: no opposing surface pair inside the jaws.
    outcome.result = SimResult::NoContact;
    return outcome;
  }
  outcome.closure_width = closure_width;

  bool closed = false;
  try {
    closed = force_closure(a->first, b->first, a->second, b->second, params.mu_sim);
  } catch (const std::invalid_argument&) {
    closed = false;
  }
  outcome.result = closed ? SimResult::Success : SimResult::NotForceClosure;
  return outcome;
}

}  // namespace graspkit
