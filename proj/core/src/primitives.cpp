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

#include "graspkit/primitives.hpp"

#include <cmath>
#include <map>

namespace graspkit {
namespace {

/// Extrudes a simple CCW polygon (in the xy plane) along z into a closed
/// prism. `cap_tris` triangulates the polygon by index.
std::shared_ptr<const TriMesh> extrude_polygon(const std::vector<Vec2>& poly,
                                               const std::vector<Face>& cap_tris,
                                               double z0, double z1) {
  const std::uint32_t n = static_cast<std::uint32_t>(poly.size());
  std::vector<Vec3> verts;
  verts.reserve(2 * n);
  for (const auto& p : poly) verts.emplace_back(p.x(), p.y(), z0);
  for (const auto& p : poly) verts.emplace_back(p.x(), p.y(), z1);

  std::vector<Face> faces;
  // Bottom cap faces down (reverse winding), top cap faces up.
  for (const auto& t : cap_tris) {
    faces.push_back(Face{t[0], t[2], t[1]});
    faces.push_back(Face{t[0] + n, t[1] + n, t[2] + n});
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t j = (i + 1) % n;
    faces.push_back(Face{i, j, j + n});
    faces.push_back(Face{i, j + n, i + n});
  }
  return std::make_shared<TriMesh>(std::move(verts), std::move(faces));
}

}  // namespace

std::shared_ptr<const TriMesh> make_box(const Vec3& extents, const Vec3& center) {
  const Vec3 h = 0.5 * extents;
  std::vector<Vec3> verts;
  for (int i = 0; i < 8; ++i) {
    verts.push_back(center + Vec3(i & 1 ? h.x() : -h.x(), i & 2 ? h.y() : -h.y(),
                                  i & 4 ? h.z() : -h.z()));
  }
  const std::vector<Face> faces = {
      {0, 2, 1}, {1, 2, 3},  // z-
      {4, 5, 6}, {5, 7, 6},  // z+
      {0, 1, 4}, {1, 5, 4},  // y-
      {2, 6, 3}, {3, 6, 7},  // y+
      {0, 4, 2}, {2, 4, 6},  // x-
      {1, 3, 5}, {3, 7, 5},  // x+
  };
  return std::make_shared<TriMesh>(std::move(verts), faces);
}

std::shared_ptr<const TriMesh> make_cube(double edge, const Vec3& center) {
  return make_box(Vec3(edge, edge, edge), center);
}

std::shared_ptr<const TriMesh> make_cylinder(double radius, double height, int segments) {
  std::vector<Vec3> verts;
  const double h = 0.5 * height;
  for (int ring = 0; ring < 2; ++ring) {
    const double z = ring == 0 ? -h : h;
    for (int i = 0; i < segments; ++i) {
      const double a = 2.0 * M_PI * i / segments;
      verts.emplace_back(radius * std::cos(a), radius * std::sin(a), z);
    }
  }
  const std::uint32_t bottom_center = static_cast<std::uint32_t>(verts.size());
  verts.emplace_back(0, 0, -h);
  const std::uint32_t top_center = bottom_center + 1;
  verts.emplace_back(0, 0, h);

  std::vector<Face> faces;
  const std::uint32_t n = static_cast<std::uint32_t>(segments);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t j = (i + 1) % n;
    faces.push_back(Face{i, j, j + n});
    faces.push_back(Face{i, j + n, i + n});
    faces.push_back(Face{bottom_center, j, i});
    faces.push_back(Face{top_center, i + n, j + n});
  }
  return std::make_shared<TriMesh>(std::move(verts), std::move(faces));
}

std::shared_ptr<const TriMesh> make_l_prism(double size, double thickness, double depth) {
  const double s = size, t = thickness;
  const std::vector<Vec2> poly = {{0, 0}, {s, 0}, {s, t}, {t, t}, {t, s}, {0, s}};
  // Two rectangles: the horizontal arm and the vertical arm.
  const std::vector<Face> caps = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}};
  return extrude_polygon(poly, caps, -0.5 * depth, 0.5 * depth);
}

std::shared_ptr<const TriMesh> make_wedge(double base, double height, double depth) {
  // Triangle in the xz plane extruded along y.
  std::vector<Vec3> verts = {
      {0, -0.5 * depth, 0}, {base, -0.5 * depth, 0}, {0, -0.5 * depth, height},
      {0, 0.5 * depth, 0},  {base, 0.5 * depth, 0},  {0, 0.5 * depth, height},
  };
  const std::vector<Face> faces = {
      {0, 2, 1},          // y- cap
      {3, 4, 5},          // y+ cap
      {0, 1, 4}, {0, 4, 3},  // bottom
      {0, 3, 5}, {0, 5, 2},  // back
      {1, 2, 5}, {1, 5, 4},  // slant
  };
  return std::make_shared<TriMesh>(std::move(verts), faces);
}

std::shared_ptr<const TriMesh> make_icosphere(double radius, int subdivisions,
                                              const Vec3& center) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts = {
      {-1, phi, 0}, {1, phi, 0},   {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},   {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},   {-phi, 0, -1}, {-phi, 0, 1},
  };
  std::vector<Face> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1},
  };
  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> midpoints;
    auto midpoint = [&](std::uint32_t a, std::uint32_t b) {
      const auto key = std::minmax(a, b);
      auto it = midpoints.find(key);
      if (it != midpoints.end()) return it->second;
      const std::uint32_t idx = static_cast<std::uint32_t>(verts.size());
      verts.push_back(0.5 * (verts[a] + verts[b]));
      midpoints.emplace(key, idx);
      return idx;
    };
    std::vector<Face> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const std::uint32_t ab = midpoint(f[0], f[1]);
      const std::uint32_t bc = midpoint(f[1], f[2]);
      const std::uint32_t ca = midpoint(f[2], f[0]);
      next.push_back(Face{f[0], ab, ca});
      next.push_back(Face{f[1], bc, ab});
      next.push_back(Face{f[2], ca, bc});
      next.push_back(Face{ab, bc, ca});
    }
    faces = std::move(next);
  }
  for (auto& v : verts) v = center + radius * v.normalized();
  return std::make_shared<TriMesh>(std::move(verts), std::move(faces));
}

std::vector<std::pair<std::string, std::shared_ptr<const TriMesh>>> bundled_primitives() {
  std::vector<std::pair<std::string, std::shared_ptr<const TriMesh>>> out;
  out.emplace_back("cube", make_cube(1.0));
  out.emplace_back("box", make_box(Vec3(0.7, 1.0, 1.4)));
  out.emplace_back("cylinder", make_cylinder(0.5, 1.4, 24));
  out.emplace_back("l_prism", make_l_prism(1.0, 0.4, 0.6));
  out.emplace_back("wedge", make_wedge(1.0, 0.8, 0.55));
  return out;
}

void write_bundled_primitives(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory: " + dir.string());
  for (const auto& [id, mesh] : bundled_primitives()) {
    write_stl(*mesh, dir / (id + ".stl"));
  }
}

}  // namespace graspkit
