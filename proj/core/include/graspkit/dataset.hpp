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

#include "graspkit/evaluate.hpp"
#include "graspkit/sample_io.hpp"

namespace graspkit {

struct ManifestObject {
  std::string id;
  std::string mesh_file;  // relative to the dataset root
  double target_width = 0.0;
  double scale_factor = 1.0;
  int poses = 0;
  int images = 0;
  long grasp_entries = 0;
};

struct Manifest {
  int objects = 0;
  int poses = 0;
  int images = 0;
  long grasp_entries = 0;
  std::uint64_t seed = 0;
  std::vector<ManifestObject> object_list;
};

/// Named meshes sorted by id, loaded from every .stl/.obj in `dir`.
/// Unreadable meshes are skipped and reported in `failures`.
std::vector<std::pair<std::string, std::shared_ptr<const TriMesh>>> load_mesh_dir(
    const std::filesystem::path& dir, std::vector<std::string>* failures = nullptr);

/// Renders the full dataset: per object, per stable pose, per image one
/// sample directory obj_<id>/pose_<p>/img_<n>/, plus the rescaled mesh, the
/// manifest and the effective config. Target widths are drawn uniformly
/// from [rescale_min, rescale_max] per object.
Manifest generate_dataset(
    const std::vector<std::pair<std::string, std::shared_ptr<const TriMesh>>>& meshes,
    const std::filesystem::path& out_dir, const PipelineConfig& cfg);

Manifest read_manifest(const std::filesystem::path& dataset_dir);
void write_manifest(const std::filesystem::path& dataset_dir, const Manifest& manifest);

/// Reconstructs the evaluation objects of a dataset: loads the stored
/// rescaled meshes and re-derives candidates and labels with the dataset's
/// recorded seed, so labels match the generated samples.
std::vector<PreparedObject> prepare_dataset_objects(const std::filesystem::path& dataset_dir,
                                                    const PipelineConfig& cfg);

/// The dataset's effective config (config.ini at the root).
PipelineConfig load_dataset_config(const std::filesystem::path& dataset_dir);

/// Per-object rescale width draw shared by generation and mesh-mode
/// evaluation: uniform in [rescale_min, rescale_max], keyed by object id.
double draw_target_width(const PipelineConfig& cfg, const std::string& object_id);

}  // namespace graspkit
