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

#include "graspkit/sampler.hpp"

#include <cmath>

#include "graspkit/bvh.hpp"

namespace graspkit {
namespace {

/// Uniform (in solid angle) direction inside the cone of half-angle
/// `half_angle` around `axis`.
Vec3 sample_cone(Rng& rng, const Vec3& axis, double half_angle) {
  const double cos_max = std::cos(half_angle);
  const double cos_theta = rng.uniform(cos_max, 1.0);
  const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
  const double phi = rng.uniform(0.0, 2.0 * M_PI);
  // Orthonormal frame around the axis.
  const Vec3 u = axis.unitOrthogonal();
  const Vec3 v = axis.cross(u);
  return (cos_theta * axis + sin_theta * (std::cos(phi) * u + std::sin(phi) * v))
      .normalized();
}

}  // namespace

GraspCandidate transform_candidate(const GraspCandidate& c, const RigidTransform& tf) {
  GraspCandidate out = c;
  out.c1 = tf.apply(c.c1);
  out.c2 = tf.apply(c.c2);
  out.n1 = tf.rotate(c.n1);
  out.n2 = tf.rotate(c.n2);
  out.x_axis = tf.rotate(c.x_axis);
  return out;
}

bool force_closure(const Vec3& c1, const Vec3& c2, const Vec3& n1, const Vec3& n2,
                   double mu) {
  const Vec3 diff = c2 - c1;
  const double dist = diff.norm();
  if (dist < 1e-9) {
    throw std::invalid_argument("force_closure: coincident contacts");
  }
  const Vec3 axis = diff / dist;
  const double cos_cone = 1.0 / std::sqrt(1.0 + mu * mu);
  return n1.dot(-axis) >= cos_cone && n2.dot(axis) >= cos_cone;
}

std::optional<LineContacts> line_contacts(const TriMesh& mesh, const Vec3& point,
                                          const Vec3& dir) {
  const double reach = 2.0 * mesh.bounding_radius() +
                       (point - mesh.com()).norm() + 1e-3;
  const auto entry = mesh.bvh().raycast(point - reach * dir, dir, 1e-9, 2.5 * reach);
  if (!entry) return std::nullopt;
  const auto exit = mesh.bvh().raycast(point + reach * dir, -dir, 1e-9, 2.5 * reach);
  if (!exit) return std::nullopt;
  LineContacts lc;
  lc.entry = entry->point;
  lc.entry_normal = entry->face_normal;
  lc.exit = exit->point;
  lc.exit_normal = exit->face_normal;
  lc.span = (lc.exit - lc.entry).dot(dir);
  if (lc.span <= 1e-9) return std::nullopt;
  return lc;
}

double robust_epsilon(const TriMesh& mesh, const GraspCandidate& candidate,
                      const EpsilonParams& params, std::uint64_t seed) {
  Rng rng(seed);
  int in_closure = 0;
  for (int t = 0; t < params.trials; ++t) {
    const Vec3 g1 = candidate.c1 + rng.normal_vec3(params.sigma_contact);
    const Vec3 g2 = candidate.c2 + rng.normal_vec3(params.sigma_contact);
    const double mu = std::max(params.mu_floor, rng.normal(params.mu_mean, params.mu_std));
    const Vec3 diff = g2 - g1;
    if (diff.norm() < 1e-9) continue;  // degenerate draw: not in closure
    const Vec3 dir = diff.normalized();
    const auto lc = line_contacts(mesh, 0.5 * (g1 + g2), dir);
    if (!lc) continue;  // failed re-contact counts as not-in-closure
    try {
      if (force_closure(lc->entry, lc->exit, lc->entry_normal, lc->exit_normal, mu)) {
        ++in_closure;
      }
    } catch (const std::invalid_argument&) {
    }
  }
  return static_cast<double>(in_closure) / static_cast<double>(params.trials);
}

std::vector<GraspCandidate> sample_contact_pairs(const TriMesh& mesh,
                                                 const GripperModel& gripper,
                                                 int max_grasps, int k,
                                                 std::uint64_t seed,
                                                 const EpsilonParams& eps_params) {
  std::vector<GraspCandidate> candidates;
  if (max_grasps <= 0) return candidates;

  Rng rng(mix_seed(seed, 0xA11CE));
  const double cone_half_angle = std::atan(gripper.friction);
  const int max_attempts = max_grasps * 40;

  for (int attempt = 0; attempt < max_attempts &&
                        static_cast<int>(candidates.size()) < max_grasps;
       ++attempt) {
    const auto [p, face] = mesh.sample_surface_point(rng);
    const Vec3 n1 = mesh.face_normals()[face];

    std::optional<GraspCandidate> best;
    for (int draw = 0; draw < k; ++draw) {
      const Vec3 dir = sample_cone(rng, -n1, cone_half_angle);
      const auto lc = line_contacts(mesh, p, dir);
      if (!lc) continue;
      // The sampled point must be the jaw-side contact: reject draws whose
      // line enters the mesh elsewhere first (concave occluders).
      if ((lc->entry - p).norm() > 1e-6) continue;
      if (lc->span > gripper.max_width || lc->span < 1e-6) continue;

      GraspCandidate cand;
      cand.c1 = p;
      cand.n1 = n1;
      cand.c2 = lc->exit;
      cand.n2 = lc->exit_normal;
      cand.width = (cand.c2 - cand.c1).norm();
      cand.x_axis = (cand.c2 - cand.c1) / cand.width;
      try {
        if (!force_closure(cand.c1, cand.c2, cand.n1, cand.n2, gripper.friction)) {
          continue;
        }
      } catch (const std::invalid_argument&) {
        continue;
      }
      cand.epsilon = robust_epsilon(
          mesh, cand, eps_params,
          mix_seed(seed, 0xE9511, static_cast<std::uint64_t>(attempt) * k + draw));
      if (!best || cand.epsilon > best->epsilon) best = cand;
    }
    if (best) candidates.push_back(*best);
  }
  return candidates;
}

int label_quality(double epsilon, bool collision_free, double delta) {
  return (epsilon >= delta && collision_free) ? 1 : 0;
}

}  // namespace graspkit
