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

#include "graspkit/bvh.hpp"

#include <algorithm>
#include <numeric>

#include "graspkit/mesh.hpp"

namespace graspkit {

std::optional<double> intersect_triangle(const Vec3& origin, const Vec3& dir,
                                         const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 e1 = b - a;
  const Vec3 e2 = c - a;
  const Vec3 p = dir.cross(e2);
  const double det = e1.dot(p);
  if (std::abs(det) < 1e-14) return std::nullopt;
  const double inv_det = 1.0 / det;
  const Vec3 t = origin - a;
  const double u = t.dot(p) * inv_det;
  if (u < -1e-12 || u > 1.0 + 1e-12) return std::nullopt;
  const Vec3 q = t.cross(e1);
  const double v = dir.dot(q) * inv_det;
  if (v < -1e-12 || u + v > 1.0 + 1e-12) return std::nullopt;
  const double dist = e2.dot(q) * inv_det;
  if (dist < 0.0) return std::nullopt;
  return dist;
}

Bvh::Bvh(const TriMesh& mesh) : mesh_(&mesh) {
  const std::uint32_t n = static_cast<std::uint32_t>(mesh.faces().size());
  std::vector<std::uint32_t> tris(n);
  std::iota(tris.begin(), tris.end(), 0u);
  nodes_.reserve(2 * n);
  build(tris, 0, n);
  tri_order_ = std::move(tris);
}

std::uint32_t Bvh::build(std::vector<std::uint32_t>& tris, std::uint32_t begin,
                         std::uint32_t end) {
  const std::uint32_t index = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{});

  Vec3 lo = Vec3::Constant(std::numeric_limits<double>::infinity());
  Vec3 hi = -lo;
  for (std::uint32_t i = begin; i < end; ++i) {
    for (int c = 0; c < 3; ++c) {
      const Vec3 v = mesh_->triangle_vertex(tris[i], c);
      lo = lo.cwiseMin(v);
      hi = hi.cwiseMax(v);
    }
  }
  nodes_[index].lo = lo;
  nodes_[index].hi = hi;

  const std::uint32_t count = end - begin;
  if (count <= 4) {
    nodes_[index].first = begin;
    nodes_[index].count = count;
    return index;
  }

  // Median split along the widest axis by triangle centroid.
  const Vec3 extent = hi - lo;
  int axis = 0;
  if (extent.y() > extent.x()) axis = 1;
  if (extent.z() > extent[axis]) axis = 2;
  const std::uint32_t mid = begin + count / 2;
  std::nth_element(tris.begin() + begin, tris.begin() + mid, tris.begin() + end,
                   [&](std::uint32_t ta, std::uint32_t tb) {
                     auto centroid = [&](std::uint32_t t) {
                       return (mesh_->triangle_vertex(t, 0)[axis] +
                               mesh_->triangle_vertex(t, 1)[axis] +
                               mesh_->triangle_vertex(t, 2)[axis]);
                     };
                     const double ca = centroid(ta), cb = centroid(tb);
                     if (ca != cb) return ca < cb;
                     return ta < tb;  // deterministic tie-break
                   });

  const std::uint32_t left = build(tris, begin, mid);
  const std::uint32_t right = build(tris, mid, end);
  nodes_[index].first = left;
  nodes_[index].right = right;
  nodes_[index].count = 0;
  return index;
}

std::optional<TriangleHit> Bvh::raycast(const Vec3& origin, const Vec3& dir,
                                        double t_min, double t_max) const {
  if (nodes_.empty()) return std::nullopt;
  const Vec3 inv_dir(1.0 / dir.x(), 1.0 / dir.y(), 1.0 / dir.z());

  std::optional<TriangleHit> best;
  double best_t = t_max;

  std::uint32_t stack[96];
  int sp = 0;
  stack[sp++] = 0;
  while (sp > 0) {
    const Node& node = nodes_[stack[--sp]];
    double t0 = t_min, t1 = best_t;
    bool hit_box = true;
    for (int a = 0; a < 3; ++a) {
      double near = (node.lo[a] - origin[a]) * inv_dir[a];
      double far = (node.hi[a] - origin[a]) * inv_dir[a];
      if (near > far) std::swap(near, far);
      t0 = std::max(t0, near);
      t1 = std::min(t1, far);
      if (t0 > t1) {
        hit_box = false;
        break;
      }
    }
    if (!hit_box) continue;
    if (node.count > 0) {
      for (std::uint32_t i = 0; i < node.count; ++i) {
        const std::uint32_t tri = tri_order_[node.first + i];
        const auto d = intersect_triangle(origin, dir, mesh_->triangle_vertex(tri, 0),
                                          mesh_->triangle_vertex(tri, 1),
                                          mesh_->triangle_vertex(tri, 2));
        if (d && *d > t_min && *d < best_t) {
          best_t = *d;
          TriangleHit hit;
          hit.distance = *d;
          hit.point = origin + *d * dir;
          hit.face_normal = mesh_->face_normals()[tri];
          hit.face = tri;
          best = hit;
        }
      }
    } else {
      stack[sp++] = node.right;
      stack[sp++] = node.first;
    }
  }
  return best;
}

}  // namespace graspkit
