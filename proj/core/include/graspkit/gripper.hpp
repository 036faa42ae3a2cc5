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

#include <array>

#include "graspkit/scene.hpp"
#include "graspkit/types.hpp"

namespace graspkit {

/// Parallel-jaw gripper proxy: two finger boxes plus a palm box.
///
/// Grasp frame convention: origin at the TCP (midpoint between the finger
/// tips), x toward the second contact, z along the approach direction.
/// Finger tips lie in the z = 0 plane of the grasp frame and the bodies
/// extend backwards (negative z).
struct GripperModel {
  double max_width = 0.08;
  Vec3 finger_half_extents{0.01, 0.01, 0.02};
  Vec3 palm_half_extents{0.05, 0.02, 0.01};
  double tcp_to_palm = 0.04;
  double friction = 0.5;
};

/// Finger and palm boxes posed in the world for a gripper at `tcp` with
/// grasp-frame `rotation` and jaw opening `width`.
inline std::array<OrientedBox, 3> gripper_boxes(const GripperModel& g, const Vec3& tcp,
                                                const Quat& rotation, double width) {
  const Vec3 fh = g.finger_half_extents;
  const Vec3 left_local(-(0.5 * width + fh.x()), 0.0, -fh.z());
  const Vec3 right_local(0.5 * width + fh.x(), 0.0, -fh.z());
  const Vec3 palm_local(0.0, 0.0, -(g.tcp_to_palm + g.palm_half_extents.z()));
  std::array<OrientedBox, 3> boxes;
  boxes[0] = OrientedBox{tcp + rotation * left_local, fh, rotation};
  boxes[1] = OrientedBox{tcp + rotation * right_local, fh, rotation};
  boxes[2] = OrientedBox{tcp + rotation * palm_local, g.palm_half_extents, rotation};
  return boxes;
}

}  // namespace graspkit
