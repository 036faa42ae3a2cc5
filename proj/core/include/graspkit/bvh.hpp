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

#include <limits>
#include <optional>
#include <vector>

#include "graspkit/types.hpp"

namespace graspkit {

class TriMesh;

struct TriangleHit {
  double distance = 0.0;
  Vec3 point{0, 0, 0};
  /// Geometric (outward) face normal, not flipped toward the ray.
  Vec3 face_normal{0, 0, 0};
  std::uint32_t face = 0;
};

/// Median-split AABB tree over mesh triangles. Acceleration only: query
/// results are identical to a brute-force scan over all triangles.
class Bvh {
 public:
  explicit Bvh(const TriMesh& mesh);

  /// Nearest intersection with t in (t_min, t_max).
  std::optional<TriangleHit> raycast(const Vec3& origin, const Vec3& dir,
                                     double t_min = 1e-9,
                                     double t_max = std::numeric_limits<double>::infinity()) const;

  /// Visits leaf triangles whose node AABB overlaps the query box; `visit`
  /// returns true to stop early. Returns true if any visit did.
  template <typename Visitor>
  bool overlap_aabb(const Vec3& lo, const Vec3& hi, Visitor&& visit) const {
    if (nodes_.empty()) return false;
    std::uint32_t stack[96];
    int sp = 0;
    stack[sp++] = 0;
    while (sp > 0) {
      const Node& node = nodes_[stack[--sp]];
      if ((node.lo.array() > hi.array()).any() || (node.hi.array() < lo.array()).any()) {
        continue;
      }
      if (node.count > 0) {
        for (std::uint32_t i = 0; i < node.count; ++i) {
          if (visit(tri_order_[node.first + i])) return true;
        }
      } else {
        stack[sp++] = node.right;
        stack[sp++] = node.first;
      }
    }
    return false;
  }

 private:
  struct Node {
    Vec3 lo, hi;
    std::uint32_t first = 0;  // left child (internal) or triangle offset (leaf)
    std::uint32_t right = 0;  // right child (internal only)
    std::uint32_t count = 0;  // triangles in leaf; 0 for internal nodes
  };

  std::uint32_t build(std::vector<std::uint32_t>& tris, std::uint32_t begin,
                      std::uint32_t end);

  const TriMesh* mesh_;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> tri_order_;
};

/// Moller-Trumbore with a small epsilon band; two-sided (back faces hit).
std::optional<double> intersect_triangle(const Vec3& origin, const Vec3& dir,
                                         const Vec3& a, const Vec3& b, const Vec3& c);

}  // namespace graspkit
