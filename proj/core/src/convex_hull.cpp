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

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "graspkit/mesh.hpp"

namespace graspkit {
namespace {

struct HullFace {
  std::array<std::uint32_t, 3> v;
  Vec3 normal;
  double offset;  // plane: normal . x = offset
  std::vector<std::uint32_t> outside;
  bool alive = true;
};

Vec3 face_normal(const std::vector<Vec3>& pts, std::uint32_t a, std::uint32_t b,
                 std::uint32_t c) {
  return (pts[b] - pts[a]).cross(pts[c] - pts[a]);
}

}  // namespace

// Incremental quickhull. Coplanar points are absorbed into faces via the
// epsilon band, so flat-heavy inputs (boxes, prisms) stay robust.
std::vector<Face> convex_hull(const std::vector<Vec3>& points) {
  const std::size_t n = points.size();
  if (n < 4) throw MeshError("convex_hull: needs at least 4 points");

  double scale = 0.0;
  for (const auto& p : points) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  const double eps = std::max(scale, 1.0) * 1e-10;

  // Initial simplex: extreme pair, then farthest from line, then from plane.
  std::uint32_t i0 = 0, i1 = 0;
  {
    double best = -1.0;
    std::array<std::uint32_t, 6> ext{};
    for (int axis = 0; axis < 3; ++axis) {
      std::uint32_t lo = 0, hi = 0;
      for (std::uint32_t i = 1; i < n; ++i) {
        if (points[i][axis] < points[lo][axis]) lo = i;
        if (points[i][axis] > points[hi][axis]) hi = i;
      }
      ext[2 * axis] = lo;
      ext[2 * axis + 1] = hi;
    }
    for (auto a : ext)
      for (auto b : ext) {
        const double d = (points[a] - points[b]).squaredNorm();
        if (d > best) {
          best = d;
          i0 = a;
          i1 = b;
        }
      }
    if (best <= eps * eps) throw MeshError("convex_hull: degenerate point set");
  }
  std::uint32_t i2 = 0;
  {
    double best = -1.0;
    const Vec3 d = (points[i1] - points[i0]).normalized();
    for (std::uint32_t i = 0; i < n; ++i) {
      const Vec3 r = points[i] - points[i0];
      const double dist = (r - r.dot(d) * d).squaredNorm();
      if (dist > best) {
        best = dist;
        i2 = i;
      }
    }
    if (best <= eps * eps) throw MeshError("convex_hull: collinear point set");
  }
  std::uint32_t i3 = 0;
  {
    double best = -1.0;
    const Vec3 nrm = face_normal(points, i0, i1, i2).normalized();
    for (std::uint32_t i = 0; i < n; ++i) {
      const double dist = std::abs(nrm.dot(points[i] - points[i0]));
      if (dist > best) {
        best = dist;
        i3 = i;
      }
    }
    if (best <= eps) throw MeshError("convex_hull: coplanar point set");
  }

  std::vector<HullFace> faces;
  faces.reserve(2 * n);
  const Vec3 centroid =
      (points[i0] + points[i1] + points[i2] + points[i3]) / 4.0;

  auto add_face = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    HullFace f;
    f.v = {a, b, c};
    Vec3 nrm = face_normal(points, a, b, c);
    const double len = nrm.norm();
    if (len > 0.0) nrm /= len;
    // Orient outward w.r.t. the simplex centroid.
    if (nrm.dot(centroid - points[a]) > 0.0) {
      std::swap(f.v[1], f.v[2]);
      nrm = -nrm;
    }
    f.normal = nrm;
    f.offset = nrm.dot(points[f.v[0]]);
    faces.push_back(std::move(f));
    return static_cast<std::uint32_t>(faces.size() - 1);
  };

  add_face(i0, i1, i2);
  add_face(i0, i1, i3);
  add_face(i0, i2, i3);
  add_face(i1, i2, i3);

  auto assign_outside = [&](std::uint32_t fi, const std::vector<std::uint32_t>& candidates) {
    for (auto p : candidates) {
      if (faces[fi].normal.dot(points[p]) - faces[fi].offset > eps) {
        faces[fi].outside.push_back(p);
      }
    }
  };
  {
    std::vector<std::uint32_t> all(n);
    for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
    for (std::uint32_t fi = 0; fi < faces.size(); ++fi) assign_outside(fi, all);
  }

  // Process faces with non-empty outside sets until none remain.
  for (;;) {
    std::int64_t active = -1;
    for (std::uint32_t fi = 0; fi < faces.size(); ++fi) {
      if (faces[fi].alive && !faces[fi].outside.empty()) {
        active = fi;
        break;
      }
    }
    if (active < 0) break;

    // Farthest point from this face.
    const HullFace& af = faces[active];
    std::uint32_t apex = af.outside[0];
    double best = -1.0;
    for (auto p : af.outside) {
      const double d = af.normal.dot(points[p]) - af.offset;
      if (d > best) {
        best = d;
        apex = p;
      }
    }

    // Find all faces visible from the apex, collect the horizon.
    std::vector<std::uint32_t> visible;
    std::vector<std::uint32_t> orphan_points;
    for (std::uint32_t fi = 0; fi < faces.size(); ++fi) {
      if (!faces[fi].alive) continue;
      if (faces[fi].normal.dot(points[apex]) - faces[fi].offset > eps) {
        visible.push_back(fi);
      }
    }
    auto edge_key = [](std::uint32_t a, std::uint32_t b) {
      return (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
    };
    std::vector<std::pair<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>>> edges;
    for (auto fi : visible) {
      const auto& v = faces[fi].v;
      for (int e = 0; e < 3; ++e) {
        const std::uint32_t a = v[e], b = v[(e + 1) % 3];
        edges.emplace_back(edge_key(a, b), std::make_pair(a, b));
      }
      for (auto p : faces[fi].outside) orphan_points.push_back(p);
      faces[fi].alive = false;
    }
    std::sort(edges.begin(), edges.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    // Horizon edges appear exactly once among visible faces.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> horizon;
    for (std::size_t i = 0; i < edges.size();) {
      std::size_t j = i;
      while (j < edges.size() && edges[j].first == edges[i].first) ++j;
      if (j - i == 1) horizon.push_back(edges[i].second);
      i = j;
    }

    std::sort(orphan_points.begin(), orphan_points.end());
    orphan_points.erase(std::unique(orphan_points.begin(), orphan_points.end()),
                        orphan_points.end());

    for (const auto& [a, b] : horizon) {
      const std::uint32_t nf = add_face(a, b, apex);
      assign_outside(nf, orphan_points);
    }
  }

  std::vector<Face> result;
  for (const auto& f : faces) {
    if (f.alive) result.push_back(Face{f.v[0], f.v[1], f.v[2]});
  }
  return result;
}

}  // namespace graspkit
