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

#include "graspkit/gripper.hpp"
#include "graspkit/mesh.hpp"
#include "graspkit/types.hpp"

namespace graspkit {

/// Antipodal contact-pair grasp. Contacts are in the frame the mesh was
/// sampled in (object frame) until transformed.
struct GraspCandidate {
  Vec3 c1{0, 0, 0};
  Vec3 c2{0, 0, 0};
  Vec3 n1{0, 0, 0};  // outward surface normal at c1
  Vec3 n2{0, 0, 0};  // outward surface normal at c2
  Vec3 x_axis{1, 0, 0};
  double width = 0.0;
  double epsilon = 0.0;

  Vec3 midpoint() const { return 0.5 * (c1 + c2); }
};

GraspCandidate transform_candidate(const GraspCandidate& c, const RigidTransform& tf);

/// Monte Carlo parameters of the robust force-closure metric. Recorded in
/// dataset metadata for provenance.
struct EpsilonParams {
  int trials = 100;
  double sigma_contact = 0.0025;  // m
  double mu_mean = 0.5;
  double mu_std = 0.1;
  double mu_floor = 0.05;
};

/// Two-contact antipodality: true iff the grasp axis lies inside both
/// friction cones (half-angle atan mu). Throws for coincident contacts.
bool force_closure(const Vec3& c1, const Vec3& c2, const Vec3& n1, const Vec3& n2,
                   double mu);

/// Fraction of Monte Carlo perturbations that remain in force closure.
/// Each trial jitters both axis endpoints (isotropic Gaussian), re-derives
/// the contacts by casting the perturbed line through the mesh, and draws
/// the friction coefficient from a truncated Gaussian.
double robust_epsilon(const TriMesh& mesh, const GraspCandidate& candidate,
                      const EpsilonParams& params, std::uint64_t seed);

/// First-entry/last-exit contacts of an infinite line through the mesh.
/// This is the pair a closing parallel jaw would touch.
struct LineContacts {
  Vec3 entry, entry_normal;
  Vec3 exit, exit_normal;
  double span = 0.0;
};
std::optional<LineContacts> line_contacts(const TriMesh& mesh, const Vec3& point,
                                          const Vec3& dir);

/// Antipodal sampler: picks random surface points, draws k axis directions
/// from the friction cone at each, keeps the feasible draw with the
/// highest robust epsilon per contact, up to max_grasps candidates.
std::vector<GraspCandidate> sample_contact_pairs(
    const TriMesh& mesh, const GripperModel& gripper, int max_grasps, int k,
    std::uint64_t seed, const EpsilonParams& eps_params = {});

/// Eq.-style binary quality: 1 iff epsilon >= delta and the grasp has a
/// collision-free orientation.
int label_quality(double epsilon, bool collision_free, double delta = 0.5);

}  // namespace graspkit
