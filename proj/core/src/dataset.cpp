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

#include "graspkit/dataset.hpp"

#include <algorithm>

#include "graspkit/parallel.hpp"
#include "json_util.hpp"

namespace graspkit {
namespace {

using jsonutil::json;

constexpr std::uint64_t kTagRescaleDraw = 0x5CA1E;
constexpr std::uint64_t kTagDatasetCamera = 0xCA3E5A;
constexpr std::uint64_t kTagDatasetNoise = 0x2015E;

struct SampleTask {
  int object_index;
  int pose_index;
  int image_index;
};

}  // namespace

std::vector<std::pair<std::string, std::shared_ptr<const TriMesh>>> load_mesh_dir(
    const std::filesystem::path& dir, std::vector<std::string>* failures) {
  if (!std::filesystem::is_directory(dir)) {
    throw IoError("mesh directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    for (auto& c : ext) c = static_cast<char>(std::tolower(c));
    if (ext == ".stl" || ext == ".obj") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());

  std::vector<std::pair<std::string, std::shared_ptr<const TriMesh>>> meshes;
  for (const auto& path : paths) {
    try {
      meshes.emplace_back(path.stem().string(), load_mesh(path));
    } catch (const std::exception& e) {
      if (failures) failures->push_back(path.string() + ": " + e.what());
    }
  }
  return meshes;
}

Manifest generate_dataset(
    const std::vector<std::pair<std::string, std::shared_ptr<const TriMesh>>>& meshes,
    const std::filesystem::path& out_dir, const PipelineConfig& cfg) {
  if (meshes.empty()) throw std::invalid_argument("generate_dataset: no meshes");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create dataset dir: " + out_dir.string());

  // Prepare all objects (rescale, sample, label) up front.
  std::vector<PreparedObject> objects(meshes.size());
  for (std::size_t i = 0; i < meshes.size(); ++i) {
    const auto& [id, mesh] = meshes[i];
    const double width = draw_target_width(cfg, id);
    std::error_code mk;
    std::filesystem::create_directories(out_dir / ("obj_" + id), mk);
    if (mk) throw IoError("cannot create object dir for " + id);
    objects[i] = prepare_object(id, mesh, width, cfg, cfg.seed);
    write_stl(*objects[i].mesh, out_dir / ("obj_" + id) / "mesh.stl");
  }

  std::vector<SampleTask> tasks;
  for (std::size_t oi = 0; oi < objects.size(); ++oi) {
    for (std::size_t pi = 0; pi < objects[oi].poses.size(); ++pi) {
      for (int n = 0; n < cfg.images_per_pose; ++n) {
        tasks.push_back({static_cast<int>(oi), static_cast<int>(pi), n});
      }
    }
  }

  std::vector<long> entries_per_task(tasks.size(), 0);
  parallel_for(cfg.jobs, tasks.size(), [&](std::size_t t) {
    const SampleTask& task = tasks[t];
    const PreparedObject& obj = objects[task.object_index];
    const std::uint64_t camera_seed =
        mix_seed(cfg.seed, kTagDatasetCamera, hash_string(obj.id),
                 static_cast<std::uint64_t>(task.pose_index) * 100000 + task.image_index);
    const std::uint64_t noise_seed =
        mix_seed(cfg.seed, kTagDatasetNoise, hash_string(obj.id),
                 static_cast<std::uint64_t>(task.pose_index) * 100000 + task.image_index);

    const CameraPose camera = sample_camera_pose(Vec3::Zero(), cfg.camera_bounds,
                                                 camera_seed);
    const SceneContext ctx =
        make_scene_context(obj, task.pose_index, 0.0, 0.0, camera, cfg);

    Sample sample;
    sample.depth = ctx.render.depth;
    sample.depth_noisy = cfg.noise_enabled
                             ? apply_sensor_noise(ctx.render.depth, cfg.noise, noise_seed)
                             : ctx.render.depth;
    sample.map = ctx.map;
    sample.meta.object_id = obj.id;
    sample.meta.stable_pose_id = task.pose_index;
    sample.meta.image_id = task.image_index;
    sample.meta.scale_factor = obj.scale_factor;
    sample.meta.target_width = obj.target_width;
    sample.meta.intrinsics = cfg.intrinsics;
    sample.meta.camera_to_world = camera.camera_to_world;
    sample.meta.object_pose = ctx.scene.object_pose;
    sample.meta.gripper = cfg.gripper;
    sample.meta.epsilon_params = cfg.epsilon;
    sample.meta.sampler_max_grasps = cfg.max_grasps;
    sample.meta.sampler_k = cfg.sampler_k;
    sample.meta.quality_delta = cfg.quality_delta;
    sample.meta.tau_vis = cfg.tau_vis;
    sample.meta.noise = cfg.noise;
    sample.meta.master_seed = cfg.seed;
    sample.meta.camera_seed = camera_seed;
    sample.meta.noise_seed = noise_seed;

    const auto dir = out_dir / ("obj_" + obj.id) / ("pose_" + std::to_string(task.pose_index)) /
                     ("img_" + std::to_string(task.image_index));
    write_sample(dir, sample);
    entries_per_task[t] = static_cast<long>(ctx.map.entries.size());
  });

  Manifest manifest;
  manifest.seed = cfg.seed;
  manifest.objects = static_cast<int>(objects.size());
  for (std::size_t oi = 0; oi < objects.size(); ++oi) {
    ManifestObject mo;
    mo.id = objects[oi].id;
    mo.mesh_file = "obj_" + objects[oi].id + "/mesh.stl";
    mo.target_width = objects[oi].target_width;
    mo.scale_factor = objects[oi].scale_factor;
    mo.poses = static_cast<int>(objects[oi].poses.size());
    mo.images = mo.poses * cfg.images_per_pose;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      if (tasks[t].object_index == static_cast<int>(oi)) {
        mo.grasp_entries += entries_per_task[t];
      }
    }
    manifest.poses += mo.poses;
    manifest.images += mo.images;
    manifest.grasp_entries += mo.grasp_entries;
    manifest.object_list.push_back(mo);
  }
  write_manifest(out_dir, manifest);
  save_config(out_dir / "config.ini", cfg);
  return manifest;
}

void write_manifest(const std::filesystem::path& dataset_dir, const Manifest& manifest) {
  json j;
  j["objects"] = manifest.objects;
  j["poses"] = manifest.poses;
  j["images"] = manifest.images;
  j["grasp_entries"] = manifest.grasp_entries;
  j["seed"] = manifest.seed;
  json list = json::array();
  for (const auto& mo : manifest.object_list) {
    list.push_back(json{{"id", mo.id},
                        {"mesh", mo.mesh_file},
                        {"target_width", mo.target_width},
                        {"scale_factor", mo.scale_factor},
                        {"poses", mo.poses},
                        {"images", mo.images},
                        {"grasp_entries", mo.grasp_entries}});
  }
  j["object_list"] = list;
  jsonutil::save_json_file(dataset_dir / "manifest.json", j);
}

Manifest read_manifest(const std::filesystem::path& dataset_dir) {
  const json j = jsonutil::load_json_file(dataset_dir / "manifest.json");
  Manifest manifest;
  try {
    manifest.objects = j.at("objects").get<int>();
    manifest.poses = j.at("poses").get<int>();
    manifest.images = j.at("images").get<int>();
    manifest.grasp_entries = j.at("grasp_entries").get<long>();
    manifest.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& jo : j.at("object_list")) {
      ManifestObject mo;
      mo.id = jo.at("id").get<std::string>();
      mo.mesh_file = jo.at("mesh").get<std::string>();
      mo.target_width = jo.at("target_width").get<double>();
      mo.scale_factor = jo.at("scale_factor").get<double>();
      mo.poses = jo.at("poses").get<int>();
      mo.images = jo.at("images").get<int>();
      mo.grasp_entries = jo.at("grasp_entries").get<long>();
      manifest.object_list.push_back(mo);
    }
  } catch (const json::exception& e) {
    throw FormatError((dataset_dir / "manifest.json").string() + ": " + e.what());
  }
  return manifest;
}

PipelineConfig load_dataset_config(const std::filesystem::path& dataset_dir) {
  return load_config(dataset_dir / "config.ini");
}

double draw_target_width(const PipelineConfig& cfg, const std::string& object_id) {
  Rng rng(mix_seed(cfg.seed, kTagRescaleDraw, hash_string(object_id)));
  return rng.uniform(cfg.rescale_min, cfg.rescale_max);
}

std::vector<PreparedObject> prepare_dataset_objects(const std::filesystem::path& dataset_dir,
                                                    const PipelineConfig& cfg) {
  const Manifest manifest = read_manifest(dataset_dir);
  std::vector<PreparedObject> objects;
  for (const auto& mo : manifest.object_list) {
    auto mesh = load_mesh(dataset_dir / mo.mesh_file);
    // Meshes are stored already rescaled; labels reproduce with the
    // dataset's generation seed.
    PreparedObject obj = prepare_object(mo.id, std::move(mesh), 0.0, cfg, manifest.seed);
    obj.target_width = mo.target_width;
    obj.scale_factor = mo.scale_factor;
    objects.push_back(std::move(obj));
  }
  return objects;
}

}  // namespace graspkit
