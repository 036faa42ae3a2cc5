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
#include <filesystem>
#include <memory>
#include <vector>

#include "graspkit/types.hpp"

namespace graspkit {

class Bvh;

struct MeshError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Face = std::array<std::uint32_t, 3>;

/// Watertight triangle mesh. Immutable after construction; construction
/// validates watertightness, orients faces outward, and computes the
/// uniform-density center of mass and the convex hull.
class TriMesh {
 public:
  TriMesh(std::vector<Vec3> vertices, std::vector<Face> faces);
  ~TriMesh();
  TriMesh(TriMesh&&) noexcept;
  TriMesh& operator=(TriMesh&&) noexcept;
  TriMesh(const TriMesh&) = delete;
  TriMesh& operator=(const TriMesh&) = delete;

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Vec3>& face_normals() const { return face_normals_; }
  const Vec3& com() const { return com_; }
  const std::vector<Face>& hull_faces() const { return hull_faces_; }

  double volume() const { return volume_; }
  double surface_area() const { return surface_area_; }
  Vec3 aabb_min() const { return aabb_min_; }
  Vec3 aabb_max() const { return aabb_max_; }
  /// Median of the three axis-aligned bounding-box extents; the
  /// characteristic width used for rescaling.
  double median_extent() const;
  /// Radius of the bounding sphere around the center of mass.
  double bounding_radius() const;

  Vec3 triangle_vertex(std::uint32_t face, int corner) const {
    return vertices_[faces_[face][corner]];
  }

  const Bvh& bvh() const { return *bvh_; }

  /// Area-weighted random surface point; returns (point, face index).
  std::pair<Vec3, std::uint32_t> sample_surface_point(Rng& rng) const;

  bool contains_in_hull(const Vec3& p, double tol = 1e-9) const;

 private:
  std::vector<Vec3> vertices_;
  std::vector<Face> faces_;
  std::vector<Vec3> face_normals_;
  std::vector<double> face_areas_;
  std::vector<double> area_cdf_;
  Vec3 com_;
  std::vector<Face> hull_faces_;
  std::vector<Vec3> hull_normals_;
  std::vector<double> hull_offsets_;
  double volume_ = 0.0;
  double surface_area_ = 0.0;
  Vec3 aabb_min_, aabb_max_;
  std::unique_ptr<Bvh> bvh_;
};

/// Loads an STL (ASCII or binary) or OBJ mesh. Positions and faces only;
/// duplicate vertices are welded. Units are meters.
/// Throws MeshError on parse failure or if the mesh is not watertight.
std::shared_ptr<const TriMesh> load_mesh(const std::filesystem::path& path);

/// Uniformly scales the mesh so its median bounding-box extent equals
/// target_width. Scaling is about the origin of the mesh frame.
std::shared_ptr<const TriMesh> rescale_to_width(const TriMesh& mesh, double target_width);

/// Writes a binary STL file.
void write_stl(const TriMesh& mesh, const std::filesystem::path& path);

/// Convex hull of a point set as outward-oriented triangles (indices into
/// the input points). Requires at least 4 non-coplanar points.
std::vector<Face> convex_hull(const std::vector<Vec3>& points);

}  // namespace graspkit
