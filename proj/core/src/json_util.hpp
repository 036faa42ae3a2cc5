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

#include <json.hpp>

#include <filesystem>
#include <fstream>

#include "graspkit/camera.hpp"
#include "graspkit/types.hpp"

namespace graspkit::jsonutil {

using nlohmann::json;

// Quaternions serialize scalar-first: [w, x, y, z].
inline json quat(const Quat& q) { return json::array({q.w(), q.x(), q.y(), q.z()}); }

inline Quat quat(const json& j) {
  if (!j.is_array() || j.size() != 4) throw FormatError("expected quaternion [w,x,y,z]");
  return Quat(j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
              j[3].get<double>());
}

inline json vec3(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

inline Vec3 vec3(const json& j) {
  if (!j.is_array() || j.size() != 3) throw FormatError("expected vector [x,y,z]");
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

inline json transform(const RigidTransform& t) {
  return json{{"r", quat(t.rotation)}, {"t", vec3(t.translation)}};
}

inline RigidTransform transform(const json& j) {
  return RigidTransform{quat(j.at("r")), vec3(j.at("t"))};
}

inline json intrinsics(const CameraIntrinsics& k) {
  return json{{"fx", k.fx}, {"fy", k.fy}, {"cx", k.cx}, {"cy", k.cy},
              {"width", k.width}, {"height", k.height}};
}

inline CameraIntrinsics intrinsics(const json& j) {
  CameraIntrinsics k;
  k.fx = j.at("fx").get<double>();
  k.fy = j.at("fy").get<double>();
  k.cx = j.at("cx").get<double>();
  k.cy = j.at("cy").get<double>();
  k.width = j.at("width").get<int>();
  k.height = j.at("height").get<int>();
  k.validate();
  return k;
}

inline json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  return j;
}

inline void save_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write: " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace graspkit::jsonutil
