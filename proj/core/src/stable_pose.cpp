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

#include "graspkit/stable_pose.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace graspkit {
namespace {

constexpr double kCoplanarTol = 1e-4;  // rad, facet merge threshold

struct Facet {
  std::vector<std::uint32_t> tris;        // hull triangle indices
  Vec3 normal{0, 0, 0};
  double offset = 0.0;                    // plane: normal . x = offset
  std::vector<std::uint32_t> polygon;     // boundary loop, hull winding
  std::vector<int> neighbors;             // facet across each polygon edge
};

struct DisjointSet {
  std::vector<std::uint32_t> parent;
  explicit DisjointSet(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

std::vector<Facet> merge_hull_facets(const TriMesh& mesh) {
  const auto& hull = mesh.hull_faces();
  const auto& verts = mesh.vertices();
  const std::size_t n = hull.size();

  std::vector<Vec3> tri_normal(n);
  std::vector<double> tri_area(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 c = (verts[hull[i][1]] - verts[hull[i][0]])
                       .cross(verts[hull[i][2]] - verts[hull[i][0]]);
    tri_area[i] = 0.5 * c.norm();
    tri_normal[i] = c.norm() > 1e-18 ? Vec3(c.normalized()) : Vec3(0, 0, 1);
  }

  // Adjacency over undirected edges.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> edge_tris;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (int e = 0; e < 3; ++e) {
      std::uint32_t a = hull[i][e], b = hull[i][(e + 1) % 3];
      if (a > b) std::swap(a, b);
      edge_tris[{a, b}].push_back(i);
    }
  }

  const double cos_tol = std::cos(kCoplanarTol);
  DisjointSet ds(n);
  for (const auto& [edge, tris] : edge_tris) {
    if (tris.size() != 2) continue;
    if (tri_normal[tris[0]].dot(tri_normal[tris[1]]) >= cos_tol) {
      ds.unite(tris[0], tris[1]);
    }
  }

  std::map<std::uint32_t, int> root_to_facet;
  std::vector<Facet> facets;
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t root = ds.find(i);
    auto it = root_to_facet.find(root);
    if (it == root_to_facet.end()) {
      it = root_to_facet.emplace(root, static_cast<int>(facets.size())).first;
      facets.emplace_back();
    }
    facets[it->second].tris.push_back(i);
  }

  std::vector<int> tri_to_facet(n);
  for (std::size_t f = 0; f < facets.size(); ++f) {
    for (auto t : facets[f].tris) tri_to_facet[t] = static_cast<int>(f);
  }

  for (auto& facet : facets) {
    Vec3 weighted = Vec3::Zero();
    for (auto t : facet.tris) weighted += tri_area[t] * tri_normal[t];
    facet.normal = weighted.normalized();
    facet.offset = facet.normal.dot(verts[hull[facet.tris[0]][0]]);

    // Boundary loop: directed edges of the facet's triangles whose reverse
    // is not inside the facet. Consistent hull winding chains them.
    std::map<std::uint32_t, std::uint32_t> next;
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> edge_owner;
    for (auto t : facet.tris) {
      for (int e = 0; e < 3; ++e) {
        edge_owner[{hull[t][e], hull[t][(e + 1) % 3]}] = 1;
      }
    }
    std::map<std::uint32_t, int> boundary_neighbor;
    for (auto t : facet.tris) {
      for (int e = 0; e < 3; ++e) {
        const std::uint32_t a = hull[t][e], b = hull[t][(e + 1) % 3];
        if (edge_owner.count({b, a})) continue;  // interior edge
        next[a] = b;
        // Neighbor facet across this hull edge.
        std::uint32_t lo = std::min(a, b), hi = std::max(a, b);
        for (auto other : edge_tris[{lo, hi}]) {
          if (tri_to_facet[other] != tri_to_facet[t]) {
            boundary_neighbor[a] = tri_to_facet[other];
          }
        }
      }
    }
    if (next.empty()) continue;
    const std::uint32_t start = next.begin()->first;
    std::uint32_t cur = start;
    do {
      facet.polygon.push_back(cur);
      facet.neighbors.push_back(boundary_neighbor.count(cur) ? boundary_neighbor[cur]
                                                              : -1);
      cur = next[cur];
    } while (cur != start && facet.polygon.size() <= next.size());
  }
  return facets;
}

/// Index of the facet whose interior the ray com + t * dir exits through.
int pierced_facet(const std::vector<Facet>& facets, const Vec3& com, const Vec3& dir) {
  int best = -1;
  double best_t = std::numeric_limits<double>::infinity();
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const double denom = facets[f].normal.dot(dir);
    if (denom <= 1e-12) continue;
    const double t = (facets[f].offset - facets[f].normal.dot(com)) / denom;
    if (t >= 0.0 && t < best_t) {
      best_t = t;
      best = static_cast<int>(f);
    }
  }
  return best;
}

/// Quasi-static settle: starting from `facet`, topple over the most
/// violated support-polygon edge until the center of mass projects inside.
int settle(const std::vector<Facet>& facets, const std::vector<Vec3>& verts,
           const Vec3& com, int facet) {
  const int max_iter = static_cast<int>(facets.size()) * 4 + 8;
  for (int iter = 0; iter < max_iter; ++iter) {
    const Facet& f = facets[facet];
    const Vec3 p = com + (f.offset - f.normal.dot(com)) * f.normal;

    double worst = -std::numeric_limits<double>::infinity();
    int worst_edge = -1;
    const std::size_t m = f.polygon.size();
    for (std::size_t e = 0; e < m; ++e) {
      const Vec3& a = verts[f.polygon[e]];
      const Vec3& b = verts[f.polygon[(e + 1) % m]];
      // Outward distance of p from edge (a, b): positive means outside.
      const Vec3 edge = b - a;
      const Vec3 outward = edge.cross(f.normal).normalized();
      const double d = outward.dot(p - a);
      if (d > worst) {
        worst = d;
        worst_edge = static_cast<int>(e);
      }
    }
    if (worst <= 1e-12 || worst_edge < 0) return facet;  // stable
    const int neighbor = f.neighbors[worst_edge];
    if (neighbor < 0 || neighbor == facet) return facet;
    facet = neighbor;
  }
  return facet;
}

}  // namespace

std::vector<StablePose> stable_poses(const TriMesh& mesh, int max_poses,
                                     std::uint64_t seed, int samples) {
  const auto facets = merge_hull_facets(mesh);
  const auto& verts = mesh.vertices();
  const Vec3 com = mesh.com();

  std::vector<int> counts(facets.size(), 0);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Vec3 dir = rng.unit_vector();
    const int start = pierced_facet(facets, com, dir);
    if (start < 0) continue;
    const int rest = settle(facets, verts, com, start);
    ++counts[rest];
  }

  std::vector<int> order(facets.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (counts[a] != counts[b]) return counts[a] > counts[b];
    return a < b;
  });

  std::vector<StablePose> poses;
  for (int f : order) {
    if (counts[f] == 0) break;
    if (static_cast<int>(poses.size()) >= max_poses) break;
    StablePose pose;
    pose.rotation = Quat::FromTwoVectors(facets[f].normal, Vec3(0, 0, -1)).normalized();
    pose.probability = static_cast<double>(counts[f]) / samples;
    pose.facet = f;
    double min_z = std::numeric_limits<double>::infinity();
    for (const auto& v : verts) min_z = std::min(min_z, (pose.rotation * v).z());
    pose.height = (pose.rotation * com).z() - min_z;
    poses.push_back(pose);
  }
  return poses;
}

Scene make_resting_scene(std::shared_ptr<const TriMesh> mesh, const StablePose& pose,
                         double x, double y) {
  double min_z = std::numeric_limits<double>::infinity();
  for (const auto& v : mesh->vertices()) {
    min_z = std::min(min_z, (pose.rotation * v).z());
  }
  Scene scene;
  scene.mesh = std::move(mesh);
  scene.object_pose = RigidTransform{pose.rotation, Vec3(x, y, -min_z)};
  return scene;
}

}  // namespace graspkit
