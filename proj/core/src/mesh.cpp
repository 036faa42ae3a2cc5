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

#include "graspkit/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "graspkit/bvh.hpp"

namespace graspkit {

TriMesh::~TriMesh() = default;
TriMesh::TriMesh(TriMesh&&) noexcept = default;
TriMesh& TriMesh::operator=(TriMesh&&) noexcept = default;

TriMesh::TriMesh(std::vector<Vec3> vertices, std::vector<Face> faces)
    : vertices_(std::move(vertices)), faces_(std::move(faces)) {
  if (vertices_.size() < 4 || faces_.size() < 4) {
    throw MeshError("mesh too small: needs at least 4 vertices and 4 faces");
  }
  const std::uint32_t nv = static_cast<std::uint32_t>(vertices_.size());
  for (const auto& f : faces_) {
    for (auto idx : f) {
      if (idx >= nv) throw MeshError("face index out of range");
    }
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) {
      throw MeshError("degenerate face with repeated vertex");
    }
  }

  // Watertightness: every directed edge must be matched by exactly one
  // reverse edge, i.e. each undirected edge is shared by exactly 2 faces
  // with consistent winding.
  {
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> directed;
    for (const auto& f : faces_) {
      for (int e = 0; e < 3; ++e) {
        const std::uint32_t a = f[e], b = f[(e + 1) % 3];
        if (++directed[{a, b}] > 1) {
          throw MeshError("not watertight: duplicated directed edge");
        }
      }
    }
    std::size_t defects = 0;
    for (const auto& [edge, count] : directed) {
      auto rev = directed.find({edge.second, edge.first});
      if (rev == directed.end()) ++defects;
    }
    if (defects > 0) {
      std::ostringstream oss;
      oss << "not watertight: " << defects << " boundary edge defect(s)";
      throw MeshError(oss.str());
    }
  }

  // Signed volume and centroid via the divergence theorem; a negative total
  // volume means the winding is inward, so flip all faces.
  double vol6 = 0.0;
  Vec3 moment = Vec3::Zero();
  for (const auto& f : faces_) {
    const Vec3& a = vertices_[f[0]];
    const Vec3& b = vertices_[f[1]];
    const Vec3& c = vertices_[f[2]];
    const double det = a.dot(b.cross(c));
    vol6 += det;
    moment += det * (a + b + c);  // tetra centroid is (a+b+c+0)/4
  }
  if (std::abs(vol6) < 1e-18) throw MeshError("mesh has zero enclosed volume");
  if (vol6 < 0.0) {
    for (auto& f : faces_) std::swap(f[1], f[2]);
    vol6 = -vol6;
    moment = -moment;
  }
  volume_ = vol6 / 6.0;
  com_ = moment / (4.0 * vol6);

  face_normals_.resize(faces_.size());
  face_areas_.resize(faces_.size());
  area_cdf_.resize(faces_.size());
  surface_area_ = 0.0;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    const auto& f = faces_[i];
    const Vec3 n = (vertices_[f[1]] - vertices_[f[0]])
                       .cross(vertices_[f[2]] - vertices_[f[0]]);
    const double len = n.norm();
    if (len < 1e-18) throw MeshError("zero-area face");
    face_normals_[i] = n / len;
    face_areas_[i] = 0.5 * len;
    surface_area_ += face_areas_[i];
    area_cdf_[i] = surface_area_;
  }

  aabb_min_ = Vec3::Constant(std::numeric_limits<double>::infinity());
  aabb_max_ = -aabb_min_;
  for (const auto& v : vertices_) {
    aabb_min_ = aabb_min_.cwiseMin(v);
    aabb_max_ = aabb_max_.cwiseMax(v);
  }

  hull_faces_ = convex_hull(vertices_);
  hull_normals_.resize(hull_faces_.size());
  hull_offsets_.resize(hull_faces_.size());
  for (std::size_t i = 0; i < hull_faces_.size(); ++i) {
    const auto& f = hull_faces_[i];
    const Vec3 n = (vertices_[f[1]] - vertices_[f[0]])
                       .cross(vertices_[f[2]] - vertices_[f[0]])
                       .normalized();
    hull_normals_[i] = n;
    hull_offsets_[i] = n.dot(vertices_[f[0]]);
  }
  if (!contains_in_hull(com_, 1e-7 * std::max(1.0, bounding_radius()))) {
    throw MeshError("center of mass outside convex hull");
  }

  bvh_ = std::make_unique<Bvh>(*this);
}

double TriMesh::median_extent() const {
  Vec3 ext = aabb_max_ - aabb_min_;
  std::array<double, 3> e{ext.x(), ext.y(), ext.z()};
  std::sort(e.begin(), e.end());
  return e[1];
}

double TriMesh::bounding_radius() const {
  double r2 = 0.0;
  for (const auto& v : vertices_) r2 = std::max(r2, (v - com_).squaredNorm());
  return std::sqrt(r2);
}

std::pair<Vec3, std::uint32_t> TriMesh::sample_surface_point(Rng& rng) const {
  const double target = rng.uniform() * surface_area_;
  const auto it = std::lower_bound(area_cdf_.begin(), area_cdf_.end(), target);
  const std::uint32_t fi = static_cast<std::uint32_t>(
      std::min<std::size_t>(it - area_cdf_.begin(), faces_.size() - 1));
  // Uniform barycentric sample.
  double r1 = std::sqrt(rng.uniform());
  double r2 = rng.uniform();
  const auto& f = faces_[fi];
  const Vec3 p = (1.0 - r1) * vertices_[f[0]] + r1 * (1.0 - r2) * vertices_[f[1]] +
                 r1 * r2 * vertices_[f[2]];
  return {p, fi};
}

bool TriMesh::contains_in_hull(const Vec3& p, double tol) const {
  for (std::size_t i = 0; i < hull_normals_.size(); ++i) {
    if (hull_normals_[i].dot(p) - hull_offsets_[i] > tol) return false;
  }
  return true;
}

std::shared_ptr<const TriMesh> rescale_to_width(const TriMesh& mesh, double target_width) {
  if (target_width <= 0.0) throw MeshError("rescale: target width must be positive");
  const double current = mesh.median_extent();
  if (current <= 0.0) throw MeshError("rescale: mesh has zero extent");
  const double scale = target_width / current;
  std::vector<Vec3> verts = mesh.vertices();
  for (auto& v : verts) v *= scale;
  return std::make_shared<TriMesh>(std::move(verts), mesh.faces());
}

}  // namespace graspkit
