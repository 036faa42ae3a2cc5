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

#include <cstring>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "graspkit/mesh.hpp"

namespace graspkit {
namespace {

// Welds vertices by exact coordinate identity. Sufficient for STL soup,
// where shared vertices repeat the same bits per facet.
class VertexWelder {
 public:
  std::uint32_t add(const Vec3& v) {
    const Key k{v.x(), v.y(), v.z()};
    auto it = index_.find(k);
    if (it != index_.end()) return it->second;
    const std::uint32_t idx = static_cast<std::uint32_t>(vertices_.size());
    vertices_.push_back(v);
    index_.emplace(k, idx);
    return idx;
  }

  std::vector<Vec3> take() { return std::move(vertices_); }

 private:
  struct Key {
    double x, y, z;
    bool operator==(const Key& o) const { return x == o.x && y == o.y && z == o.z; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      auto h = [](double d) {
        std::uint64_t bits;
        std::memcpy(&bits, &d, sizeof(bits));
        return splitmix64(bits);
      };
      return h(k.x) ^ (h(k.y) << 1) ^ (h(k.z) << 2);
    }
  };
  std::vector<Vec3> vertices_;
  std::unordered_map<Key, std::uint32_t, KeyHash> index_;
};

std::shared_ptr<const TriMesh> build(VertexWelder& welder, std::vector<Face> faces,
                                     const std::filesystem::path& path) {
  try {
    return std::make_shared<TriMesh>(welder.take(), std::move(faces));
  } catch (const MeshError& e) {
    throw MeshError(path.string() + ": " + e.what());
  }
}

std::shared_ptr<const TriMesh> load_binary_stl(std::ifstream& in,
                                               const std::filesystem::path& path) {
  in.seekg(80, std::ios::beg);
  std::uint32_t count = 0;
  in.read(reinterpret_cast<char*>(&count), 4);
  if (!in) throw MeshError(path.string() + ": truncated binary STL header");
  VertexWelder welder;
  std::vector<Face> faces;
  faces.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    float rec[12];
    in.read(reinterpret_cast<char*>(rec), 48);
    char attr[2];
    in.read(attr, 2);
    if (!in) throw MeshError(path.string() + ": truncated binary STL facet");
    Face f;
    for (int c = 0; c < 3; ++c) {
      const Vec3 v(rec[3 + 3 * c], rec[4 + 3 * c], rec[5 + 3 * c]);
      f[c] = welder.add(v);
    }
    faces.push_back(f);
  }
  return build(welder, std::move(faces), path);
}

std::shared_ptr<const TriMesh> load_ascii_stl(std::ifstream& in,
                                              const std::filesystem::path& path) {
  in.seekg(0, std::ios::beg);
  VertexWelder welder;
  std::vector<Face> faces;
  std::string token;
  std::vector<std::uint32_t> facet;
  while (in >> token) {
    if (token == "vertex") {
      double x, y, z;
      if (!(in >> x >> y >> z)) {
        throw MeshError(path.string() + ": malformed ASCII STL vertex");
      }
      facet.push_back(welder.add(Vec3(x, y, z)));
    } else if (token == "endfacet") {
      if (facet.size() != 3) {
        throw MeshError(path.string() + ": STL facet without 3 vertices");
      }
      faces.push_back(Face{facet[0], facet[1], facet[2]});
      facet.clear();
    }
  }
  if (faces.empty()) throw MeshError(path.string() + ": no facets in ASCII STL");
  return build(welder, std::move(faces), path);
}

std::shared_ptr<const TriMesh> load_obj(std::ifstream& in,
                                        const std::filesystem::path& path) {
  VertexWelder welder;
  std::vector<std::uint32_t> vertex_ids;
  std::vector<Face> faces;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      double x, y, z;
      if (!(ls >> x >> y >> z)) throw MeshError(path.string() + ": malformed OBJ vertex");
      vertex_ids.push_back(welder.add(Vec3(x, y, z)));
    } else if (tag == "f") {
      std::vector<std::uint32_t> poly;
      std::string corner;
      while (ls >> corner) {
        // Accept "i", "i/t", "i//n", "i/t/n"; negative indices count back.
        const std::string idx_str = corner.substr(0, corner.find('/'));
        long idx = 0;
        try {
          idx = std::stol(idx_str);
        } catch (...) {
          throw MeshError(path.string() + ": malformed OBJ face index '" + corner + "'");
        }
        const long nverts = static_cast<long>(vertex_ids.size());
        const long resolved = idx > 0 ? idx - 1 : nverts + idx;
        if (resolved < 0 || resolved >= nverts) {
          throw MeshError(path.string() + ": OBJ face index out of range");
        }
        poly.push_back(vertex_ids[static_cast<std::size_t>(resolved)]);
      }
      if (poly.size() < 3) throw MeshError(path.string() + ": OBJ face with <3 vertices");
      for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
        faces.push_back(Face{poly[0], poly[i], poly[i + 1]});
      }
    }
    // All other tags (vn, vt, usemtl, ...) are ignored.
  }
  if (faces.empty()) throw MeshError(path.string() + ": no faces in OBJ");
  return build(welder, std::move(faces), path);
}

}  // namespace

std::shared_ptr<const TriMesh> load_mesh(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open mesh file: " + path.string());

  std::string ext = path.extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(c));

  if (ext == ".obj") return load_obj(in, path);
  if (ext != ".stl" && !ext.empty()) {
    throw MeshError(path.string() + ": unsupported mesh format '" + ext + "'");
  }

  // STL: a file is binary iff its size matches 84 + 50 * facet_count.
  in.seekg(0, std::ios::end);
  const std::uint64_t size = static_cast<std::uint64_t>(in.tellg());
  if (size >= 84) {
    in.seekg(80, std::ios::beg);
    std::uint32_t count = 0;
    in.read(reinterpret_cast<char*>(&count), 4);
    if (in && size == 84ull + 50ull * count) return load_binary_stl(in, path);
  }
  return load_ascii_stl(in, path);
}

void write_stl(const TriMesh& mesh, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write mesh file: " + path.string());
  char header[80] = {};
  std::snprintf(header, sizeof(header), "graspkit binary STL");
  out.write(header, 80);
  const std::uint32_t count = static_cast<std::uint32_t>(mesh.faces().size());
  out.write(reinterpret_cast<const char*>(&count), 4);
  for (std::size_t i = 0; i < mesh.faces().size(); ++i) {
    float rec[12];
    const Vec3& n = mesh.face_normals()[i];
    rec[0] = static_cast<float>(n.x());
    rec[1] = static_cast<float>(n.y());
    rec[2] = static_cast<float>(n.z());
    for (int c = 0; c < 3; ++c) {
      const Vec3 v = mesh.triangle_vertex(static_cast<std::uint32_t>(i), c);
      rec[3 + 3 * c] = static_cast<float>(v.x());
      rec[4 + 3 * c] = static_cast<float>(v.y());
      rec[5 + 3 * c] = static_cast<float>(v.z());
    }
    out.write(reinterpret_cast<const char*>(rec), 48);
    const char attr[2] = {0, 0};
    out.write(attr, 2);
  }
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace graspkit
