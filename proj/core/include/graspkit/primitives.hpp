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

#include <string>
#include <utility>
#include <vector>

#include "graspkit/mesh.hpp"

namespace graspkit {

std::shared_ptr<const TriMesh> make_cube(double edge, const Vec3& center = Vec3::Zero());
std::shared_ptr<const TriMesh> make_box(const Vec3& extents,
                                        const Vec3& center = Vec3::Zero());
/// Prism approximating a cylinder along z.
std::shared_ptr<const TriMesh> make_cylinder(double radius, double height,
                                             int segments = 24);
/// L-shaped cross-section extruded along z.
std::shared_ptr<const TriMesh> make_l_prism(double size, double thickness, double depth);
/// Right-triangular cross-section extruded along y.
std::shared_ptr<const TriMesh> make_wedge(double base, double height, double depth);
std::shared_ptr<const TriMesh> make_icosphere(double radius, int subdivisions = 3,
                                              const Vec3& center = Vec3::Zero());

/// The five primitives bundled for tests and the oracle evaluation loop.
std::vector<std::pair<std::string, std::shared_ptr<const TriMesh>>> bundled_primitives();

/// Writes the bundled primitives as binary STL files named <id>.stl.
void write_bundled_primitives(const std::filesystem::path& dir);

}  // namespace graspkit
