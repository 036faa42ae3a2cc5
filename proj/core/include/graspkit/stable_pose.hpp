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

#include <vector>

#include "graspkit/mesh.hpp"
#include "graspkit/scene.hpp"
#include "graspkit/types.hpp"

namespace graspkit {

/// Resting configuration on the plane z = 0. `rotation` maps object to
/// world; the posed object is additionally lifted so its lowest vertex
/// touches z = 0 (see make_resting_scene).
struct StablePose {
  Quat rotation{1, 0, 0, 0};
  double height = 0.0;       // center of mass height above the plane
  double probability = 0.0;  // fraction of random drops settling here
  int facet = -1;            // supporting hull facet (informational)
};

inline constexpr std::uint64_t kStablePoseSeed = 0x5EEDFACE7ull;
inline constexpr int kStablePoseSamples = 10000;

/// Up to `max_poses` resting poses sorted by descending probability.
/// Probability is the fraction of `samples` uniformly random initial
/// orientations that quasi-statically topple to rest on the facet.
std::vector<StablePose> stable_poses(const TriMesh& mesh, int max_poses = 25,
                                     std::uint64_t seed = kStablePoseSeed,
                                     int samples = kStablePoseSamples);

/// Scene with the object in the given stable pose, offset by (x, y) in the
/// plane, resting exactly on z = 0.
Scene make_resting_scene(std::shared_ptr<const TriMesh> mesh, const StablePose& pose,
                         double x = 0.0, double y = 0.0);

}  // namespace graspkit
