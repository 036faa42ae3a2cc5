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

#include "graspkit/sample_io.hpp"

#include <zlib.h>

#include <fstream>

#include "json_util.hpp"

namespace graspkit {
namespace {

using jsonutil::json;

std::vector<char> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw IoError("cannot open: " + path.string());
  const std::streamsize size = in.tellg();
  in.seekg(0, std::ios::beg);
  std::vector<char> bytes(static_cast<std::size_t>(size));
  if (size > 0) in.read(bytes.data(), size);
  if (!in) throw IoError("read failed: " + path.string());
  return bytes;
}

std::uint32_t crc_of(const std::vector<char>& bytes) {
  return static_cast<std::uint32_t>(
      ::crc32(0L, reinterpret_cast<const Bytef*>(bytes.data()),
              static_cast<uInt>(bytes.size())));
}

json meta_to_json(const SampleMeta& m, const std::map<std::string, std::uint32_t>& crcs) {
  json j;
  j["object_id"] = m.object_id;
  j["stable_pose_id"] = m.stable_pose_id;
  j["image_id"] = m.image_id;
  j["scale_factor"] = m.scale_factor;
  j["target_width"] = m.target_width;
  j["intrinsics"] = jsonutil::intrinsics(m.intrinsics);
  j["camera_to_world"] = jsonutil::transform(m.camera_to_world);
  j["object_pose"] = jsonutil::transform(m.object_pose);
  j["gripper"] = {
      {"max_width", m.gripper.max_width},
      {"finger_half_extents", jsonutil::vec3(m.gripper.finger_half_extents)},
      {"palm_half_extents", jsonutil::vec3(m.gripper.palm_half_extents)},
      {"tcp_to_palm", m.gripper.tcp_to_palm},
      {"friction", m.gripper.friction},
  };
  j["epsilon_params"] = {
      {"trials", m.epsilon_params.trials},
      {"sigma_contact", m.epsilon_params.sigma_contact},
      {"mu_mean", m.epsilon_params.mu_mean},
      {"mu_std", m.epsilon_params.mu_std},
      {"mu_floor", m.epsilon_params.mu_floor},
  };
  j["sampler"] = {
      {"max_grasps", m.sampler_max_grasps},
      {"k", m.sampler_k},
      {"quality_delta", m.quality_delta},
      {"tau_vis", m.tau_vis},
  };
  j["noise"] = {
      {"axial_a0", m.noise.axial_a0},
      {"axial_a2", m.noise.axial_a2},
      {"lateral_sigma", m.noise.lateral_sigma},
  };
  j["seeds"] = {
      {"master", m.master_seed},
      {"camera", m.camera_seed},
      {"noise", m.noise_seed},
  };
  json jcrc = json::object();
  for (const auto& [name, crc] : crcs) jcrc[name] = crc;
  j["crc32"] = jcrc;
  return j;
}

SampleMeta meta_from_json(const json& j) {
  SampleMeta m;
  m.object_id = j.at("object_id").get<std::string>();
  m.stable_pose_id = j.at("stable_pose_id").get<int>();
  m.image_id = j.at("image_id").get<int>();
  m.scale_factor = j.at("scale_factor").get<double>();
  m.target_width = j.at("target_width").get<double>();
  m.intrinsics = jsonutil::intrinsics(j.at("intrinsics"));
  m.camera_to_world = jsonutil::transform(j.at("camera_to_world"));
  m.object_pose = jsonutil::transform(j.at("object_pose"));
  const auto& g = j.at("gripper");
  m.gripper.max_width = g.at("max_width").get<double>();
  m.gripper.finger_half_extents = jsonutil::vec3(g.at("finger_half_extents"));
  m.gripper.palm_half_extents = jsonutil::vec3(g.at("palm_half_extents"));
  m.gripper.tcp_to_palm = g.at("tcp_to_palm").get<double>();
  m.gripper.friction = g.at("friction").get<double>();
  const auto& e = j.at("epsilon_params");
  m.epsilon_params.trials = e.at("trials").get<int>();
  m.epsilon_params.sigma_contact = e.at("sigma_contact").get<double>();
  m.epsilon_params.mu_mean = e.at("mu_mean").get<double>();
  m.epsilon_params.mu_std = e.at("mu_std").get<double>();
  m.epsilon_params.mu_floor = e.at("mu_floor").get<double>();
  const auto& s = j.at("sampler");
  m.sampler_max_grasps = s.at("max_grasps").get<int>();
  m.sampler_k = s.at("k").get<int>();
  m.quality_delta = s.at("quality_delta").get<double>();
  m.tau_vis = s.at("tau_vis").get<double>();
  const auto& n = j.at("noise");
  m.noise.axial_a0 = n.at("axial_a0").get<double>();
  m.noise.axial_a2 = n.at("axial_a2").get<double>();
  m.noise.lateral_sigma = n.at("lateral_sigma").get<double>();
  const auto& seeds = j.at("seeds");
  m.master_seed = seeds.at("master").get<std::uint64_t>();
  m.camera_seed = seeds.at("camera").get<std::uint64_t>();
  m.noise_seed = seeds.at("noise").get<std::uint64_t>();
  return m;
}

}  // namespace

std::uint32_t crc32_file(const std::filesystem::path& path) {
  return crc_of(read_file_bytes(path));
}

void write_depth_raw(const std::filesystem::path& path, const DepthImage& depth) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write: " + path.string());
  out.write(reinterpret_cast<const char*>(depth.data.data()),
            static_cast<std::streamsize>(depth.data.size() * sizeof(float)));
  if (!out) throw IoError("write failed: " + path.string());
}

DepthImage read_depth_raw(const std::filesystem::path& path, int width, int height) {
  const auto bytes = read_file_bytes(path);
  const std::size_t expected = static_cast<std::size_t>(width) * height * sizeof(float);
  if (bytes.size() != expected) {
    throw FormatError(path.string() + ": size mismatch for " + std::to_string(width) +
                      "x" + std::to_string(height) + " f32 image");
  }
  DepthImage depth(width, height);
  std::memcpy(depth.data.data(), bytes.data(), expected);
  return depth;
}

void write_sample(const std::filesystem::path& dir, const Sample& sample) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create sample dir: " + dir.string());

  write_depth_raw(dir / "depth.f32", sample.depth);
  write_depth_raw(dir / "depth_noisy.f32", sample.depth_noisy);

  {
    std::ofstream out(dir / "mask.u8", std::ios::binary);
    if (!out) throw IoError("cannot write: " + (dir / "mask.u8").string());
    out.write(reinterpret_cast<const char*>(sample.map.mask.data.data()),
              static_cast<std::streamsize>(sample.map.mask.data.size()));
    if (!out) throw IoError("write failed: " + (dir / "mask.u8").string());
  }

  json grasps = json::array();
  for (const auto& e : sample.map.entries) {
    grasps.push_back(json{{"u", e.u},
                          {"v", e.v},
                          {"q", e.quality},
                          {"r", jsonutil::quat(e.rotation)},
                          {"width_m", e.width},
                          {"epsilon", e.epsilon}});
  }
  jsonutil::save_json_file(dir / "grasps.json", grasps);

  std::map<std::string, std::uint32_t> crcs;
  for (const char* name : {"depth.f32", "depth_noisy.f32", "mask.u8", "grasps.json"}) {
    crcs[name] = crc32_file(dir / name);
  }
  jsonutil::save_json_file(dir / "meta.json", meta_to_json(sample.meta, crcs));
}

Sample read_sample(const std::filesystem::path& dir) {
  const json meta_json = jsonutil::load_json_file(dir / "meta.json");
  Sample sample;
  try {
    sample.meta = meta_from_json(meta_json);
    const auto& jcrc = meta_json.at("crc32");
    for (const auto& [name, expected] : jcrc.items()) {
      const std::uint32_t actual = crc32_file(dir / name);
      if (actual != expected.get<std::uint32_t>()) {
        throw FormatError((dir / name).string() + ": CRC32 mismatch");
      }
    }
  } catch (const json::exception& e) {
    throw FormatError((dir / "meta.json").string() + ": " + e.what());
  }

  const int w = sample.meta.intrinsics.width;
  const int h = sample.meta.intrinsics.height;
  sample.depth = read_depth_raw(dir / "depth.f32", w, h);
  sample.depth_noisy = read_depth_raw(dir / "depth_noisy.f32", w, h);

  {
    const auto bytes = read_file_bytes(dir / "mask.u8");
    if (bytes.size() != static_cast<std::size_t>(w) * h) {
      throw FormatError((dir / "mask.u8").string() + ": size mismatch");
    }
    sample.map.mask = MaskImage(w, h);
    std::memcpy(sample.map.mask.data.data(), bytes.data(), bytes.size());
  }

  sample.map.width = w;
  sample.map.height = h;
  const json grasps = jsonutil::load_json_file(dir / "grasps.json");
  if (!grasps.is_array()) throw FormatError((dir / "grasps.json").string() + ": not an array");
  try {
    for (const auto& jg : grasps) {
      GraspMapEntry e;
      e.u = jg.at("u").get<int>();
      e.v = jg.at("v").get<int>();
      e.quality = jg.at("q").get<int>();
      e.rotation = jsonutil::quat(jg.at("r"));
      e.width = jg.at("width_m").get<double>();
      e.epsilon = jg.at("epsilon").get<double>();
      sample.map.entries.push_back(e);
    }
  } catch (const json::exception& e) {
    throw FormatError((dir / "grasps.json").string() + ": " + e.what());
  }
  return sample;
}

}  // namespace graspkit
