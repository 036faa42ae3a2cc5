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

#include <filesystem>
#include <string>
#include <vector>

#include "graspkit/config.hpp"
#include "graspkit/grasp_map.hpp"
#include "graspkit/oracle.hpp"
#include "graspkit/simulate.hpp"
#include "graspkit/stable_pose.hpp"

namespace graspkit {

std::uint64_t hash_string(const std::string& s);  // FNV-1a, stable across runs

/// An object readied for labeling: rescaled mesh, stable poses, sampled
/// candidates, and per-(pose, candidate) hinge collision masks computed at
/// the canonical placement. The masks are valid for any in-plane offset
/// because plane and object translate together.
struct PreparedObject {
  std::string id;
  std::shared_ptr<const TriMesh> mesh;  // rescaled
  double target_width = 0.0;
  double scale_factor = 1.0;
  std::vector<StablePose> poses;
  std::vector<GraspCandidate> candidates;  // object frame

  struct PoseLabels {
    std::vector<std::vector<Vec3>> directions;       // [candidate][step]
    std::vector<std::vector<std::uint8_t>> masks;    // [candidate][step], 1 = collides
  };
  std::vector<PoseLabels> pose_labels;  // one per stable pose
};

/// Rescales (when target_width > 0), samples candidates and precomputes the
/// per-pose collision masks. `sampler_seed` pins the candidate draw so a
/// dataset's labels can be reproduced when re-loading it.
PreparedObject prepare_object(const std::string& id,
                              std::shared_ptr<const TriMesh> mesh, double target_width,
                              const PipelineConfig& cfg, std::uint64_t sampler_seed);

/// One placed, viewed and labeled scene.
struct SceneContext {
  Scene scene;
  int pose_index = 0;
  CameraPose camera;
  RenderResult render;
  std::vector<OrientedGrasp> grasps;  // world frame, with selected orientations
  SparseGraspMap map;
};

SceneContext make_scene_context(const PreparedObject& obj, int pose_index, double x,
                                double y, const CameraPose& camera,
                                const PipelineConfig& cfg);

struct PredictorSpec {
  enum class Kind { Oracle, Perturbed, FileBacked };
  Kind kind = Kind::Oracle;
  double quality_sigma = 0.0;
  std::filesystem::path dir;

  /// Accepts "oracle", "perturbed:<sigma>", "file:<dir>".
  static PredictorSpec parse(const std::string& text);
  std::string describe() const;
};

struct TrialRecord {
  std::string object_id;
  int object_index = 0;
  int trial_index = 0;
  std::uint64_t seed = 0;
  int pose_index = 0;
  double offset_x = 0.0;
  double offset_y = 0.0;
  RigidTransform camera_to_world;
  int entry_count = 0;
  int positive_count = 0;
  bool has_proposal = false;
  GraspProposal proposal;
  SimOutcome outcome;
  std::string error;

  bool success() const {
    return error.empty() && has_proposal && outcome.result == SimResult::Success;
  }
};

struct ObjectStats {
  std::string object_id;
  int trials = 0;
  int successes = 0;
  int no_proposal = 0;
  int errors = 0;
  double success_rate = 0.0;
};

struct TrialReport {
  std::vector<TrialRecord> records;
  std::vector<ObjectStats> objects;
  double overall_success = 0.0;
  double wall_seconds = 0.0;  // measured; excluded from serialized reports
};

/// The per-object simulation protocol: random stable pose and workspace
/// position, random camera, render, predict, decode, simulate the top
/// proposal. Fully deterministic per (objects, config, seed).
TrialReport run_trials(const std::vector<PreparedObject>& objects,
                       const PredictorSpec& predictor, const PipelineConfig& cfg,
                       std::uint64_t seed);

struct SweepRow {
  double gamma = 0.0;
  double mean_pred_quality = 0.0;
  double object_success = 0.0;
  double proposal_success = 0.0;
  double mean_proposals = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  long proposal_count = 0;
};

struct SweepReport {
  std::vector<SweepRow> rows;  // one per gamma, in input order
  /// Kept proposal pixels per [gamma][trial], for set-monotonicity checks.
  std::vector<std::vector<std::vector<std::pair<int, int>>>> trial_pixels;
  double wall_seconds = 0.0;
};

/// Re-decodes the same trial tensors at every acceptance threshold and
/// simulates every proposal.
SweepReport threshold_sweep(const std::vector<PreparedObject>& objects,
                            const PredictorSpec& predictor,
                            const std::vector<double>& gammas,
                            const PipelineConfig& cfg, std::uint64_t seed);

/// Report emission; see report.cpp for the file set.
void emit_report(const TrialReport& report, const std::filesystem::path& out_dir);
void emit_sweep(const SweepReport& sweep, const std::filesystem::path& out_dir);

}  // namespace graspkit
