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

#include "graspkit/evaluate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "graspkit/decode.hpp"
#include "graspkit/parallel.hpp"
#include "graspkit/tensor.hpp"

namespace graspkit {
namespace {

// Substream tags for seed derivation.
enum SeedTag : std::uint64_t {
  kTagSampler = 1,
  kTagPlacement = 2,
  kTagCamera = 3,
  kTagPredictor = 4,
  kTagNoise = 5,
  kTagRescale = 6,
};

int draw_pose_index(const std::vector<StablePose>& poses, Rng& rng) {
  double total = 0.0;
  for (const auto& p : poses) total += p.probability;
  const double target = rng.uniform() * total;
  double cum = 0.0;
  for (std::size_t i = 0; i < poses.size(); ++i) {
    cum += poses[i].probability;
    if (target < cum) return static_cast<int>(i);
  }
  return static_cast<int>(poses.size()) - 1;
}

std::string zero_pad(int value, int width) {
  std::string s = std::to_string(value);
  if (static_cast<int>(s.size()) < width) s.insert(0, width - s.size(), '0');
  return s;
}

Tensor predict(const PredictorSpec& predictor, const SceneContext& ctx,
               const PipelineConfig& cfg, const std::string& object_id, int trial_index,
               std::uint64_t trial_seed) {
  switch (predictor.kind) {
    case PredictorSpec::Kind::Oracle:
      return oracle_predict(ctx.map, cfg.intrinsics.width, cfg.intrinsics.height);
    case PredictorSpec::Kind::Perturbed: {
      PerturbParams params;
      params.quality_sigma = predictor.quality_sigma;
      return perturbed_oracle(ctx.map, cfg.intrinsics.width, cfg.intrinsics.height,
                              params, mix_seed(trial_seed, kTagPredictor));
    }
    case PredictorSpec::Kind::FileBacked: {
      const auto path =
          predictor.dir / object_id / ("trial_" + zero_pad(trial_index, 4) + ".f32");
      return read_tensor(path);
    }
  }
  throw std::logic_error("unknown predictor kind");
}

struct TrialSetup {
  int pose_index;
  double x, y;
  CameraPose camera;
};

TrialSetup draw_trial_setup(const PreparedObject& obj, const PipelineConfig& cfg,
                            std::uint64_t trial_seed) {
  TrialSetup setup;
  Rng rng(mix_seed(trial_seed, kTagPlacement));
  setup.pose_index = draw_pose_index(obj.poses, rng);
  const double half = 0.5 * cfg.workspace_size;
  setup.x = rng.uniform(-half, half);
  setup.y = rng.uniform(-half, half);
  setup.camera = sample_camera_pose(Vec3::Zero(), cfg.camera_bounds,
                                    mix_seed(trial_seed, kTagCamera));
  return setup;
}

}  // namespace

std::uint64_t hash_string(const std::string& s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

PredictorSpec PredictorSpec::parse(const std::string& text) {
  PredictorSpec spec;
  if (text == "oracle") {
    spec.kind = Kind::Oracle;
  } else if (text.rfind("perturbed:", 0) == 0) {
    spec.kind = Kind::Perturbed;
    try {
      spec.quality_sigma = std::stod(text.substr(10));
    } catch (...) {
      throw FormatError("bad predictor sigma in '" + text + "'");
    }
    if (spec.quality_sigma < 0) throw FormatError("predictor sigma must be >= 0");
  } else if (text.rfind("file:", 0) == 0) {
    spec.kind = Kind::FileBacked;
    spec.dir = text.substr(5);
    if (spec.dir.empty()) throw FormatError("file predictor needs a directory");
  } else {
    throw FormatError("unknown predictor '" + text +
                      "' (expected oracle, perturbed:<sigma> or file:<dir>)");
  }
  return spec;
}

std::string PredictorSpec::describe() const {
  switch (kind) {
    case Kind::Oracle: return "oracle";
    case Kind::Perturbed: return "perturbed:" + std::to_string(quality_sigma);
    case Kind::FileBacked: return "file:" + dir.string();
  }
  return "?";
}

PreparedObject prepare_object(const std::string& id,
                              std::shared_ptr<const TriMesh> mesh, double target_width,
                              const PipelineConfig& cfg, std::uint64_t sampler_seed) {
  PreparedObject obj;
  obj.id = id;
  if (target_width > 0.0) {
    obj.scale_factor = target_width / mesh->median_extent();
    obj.mesh = rescale_to_width(*mesh, target_width);
    obj.target_width = target_width;
  } else {
    obj.mesh = std::move(mesh);
    obj.target_width = obj.mesh->median_extent();
  }
  obj.poses = stable_poses(*obj.mesh, cfg.max_poses);
  obj.candidates = sample_contact_pairs(*obj.mesh, cfg.gripper, cfg.max_grasps,
                                        cfg.sampler_k,
                                        mix_seed(sampler_seed, kTagSampler, hash_string(id)),
                                        cfg.epsilon);

  obj.pose_labels.resize(obj.poses.size());
  parallel_for(cfg.jobs, obj.poses.size(), [&](std::size_t pi) {
    const Scene scene = make_resting_scene(obj.mesh, obj.poses[pi]);
    auto& labels = obj.pose_labels[pi];
    labels.directions.resize(obj.candidates.size());
    labels.masks.resize(obj.candidates.size());
    for (std::size_t ci = 0; ci < obj.candidates.size(); ++ci) {
      const GraspCandidate world = transform_candidate(obj.candidates[ci],
                                                       scene.object_pose);
      labels.directions[ci] = hinge_directions(world.x_axis, 24);
      labels.masks[ci] = orientation_collision_mask(world, scene, cfg.gripper, 24,
                                                    cfg.sim.approach);
    }
  });
  return obj;
}

SceneContext make_scene_context(const PreparedObject& obj, int pose_index, double x,
                                double y, const CameraPose& camera,
                                const PipelineConfig& cfg) {
  SceneContext ctx;
  ctx.pose_index = pose_index;
  ctx.camera = camera;
  ctx.scene = make_resting_scene(obj.mesh, obj.poses[pose_index], x, y);
  ctx.render = render_depth(ctx.scene, cfg.intrinsics, camera);

  const auto& labels = obj.pose_labels[pose_index];
  const Vec3 ray = camera.principal_ray();
  for (std::size_t ci = 0; ci < obj.candidates.size(); ++ci) {
    const GraspCandidate world = transform_candidate(obj.candidates[ci],
                                                     ctx.scene.object_pose);
    const auto chosen = select_from_mask(labels.masks[ci], labels.directions[ci], ray);
    if (!chosen) continue;  // all orientations collide: quality 0, no pose
    ctx.grasps.push_back(oriented_grasp_at(world, labels.directions[ci], *chosen,
                                           cfg.quality_delta));
  }
  ctx.map = project_contacts(ctx.grasps, cfg.intrinsics, camera, ctx.render, cfg.tau_vis);
  return ctx;
}

TrialReport run_trials(const std::vector<PreparedObject>& objects,
                       const PredictorSpec& predictor, const PipelineConfig& cfg,
                       std::uint64_t seed) {
  if (objects.empty()) throw std::invalid_argument("run_trials: no objects");
  const auto start = std::chrono::steady_clock::now();

  const int per_object = cfg.trials_per_object;
  TrialReport report;
  report.records.resize(static_cast<std::size_t>(objects.size()) * per_object);

  parallel_for(cfg.jobs, report.records.size(), [&](std::size_t task) {
    const int oi = static_cast<int>(task) / per_object;
    const int ti = static_cast<int>(task) % per_object;
    const PreparedObject& obj = objects[oi];
    TrialRecord& rec = report.records[task];
    rec.object_id = obj.id;
    rec.object_index = oi;
    rec.trial_index = ti;
    rec.seed = mix_seed(seed, hash_string(obj.id), static_cast<std::uint64_t>(ti));

    const TrialSetup setup = draw_trial_setup(obj, cfg, rec.seed);
    rec.pose_index = setup.pose_index;
    rec.offset_x = setup.x;
    rec.offset_y = setup.y;
    rec.camera_to_world = setup.camera.camera_to_world;

    const SceneContext ctx =
        make_scene_context(obj, setup.pose_index, setup.x, setup.y, setup.camera, cfg);
    rec.entry_count = static_cast<int>(ctx.map.entries.size());
    for (const auto& e : ctx.map.entries) rec.positive_count += (e.quality == 1);

    Tensor tensor;
    try {
      tensor = predict(predictor, ctx, cfg, obj.id, ti, rec.seed);
    } catch (const std::exception& e) {
      rec.error = e.what();
      return;
    }
    // With eval noise on, the decoder sees the corrupted depth, emulating a
    // live sensor end-to-end. Default off: decode from the clean render.
    DepthImage depth = ctx.render.depth;
    if (cfg.eval_noise) {
      depth = apply_sensor_noise(depth, cfg.noise, mix_seed(rec.seed, kTagNoise));
    }
    // The robot base frame is the world frame here, so the camera pose is
    // the camera -> base extrinsics.
    const ProposalSet proposals = propose(tensor, cfg.intrinsics, depth,
                                          setup.camera.camera_to_world, cfg.nms,
                                          cfg.gripper.max_width);
    if (proposals.proposals.empty()) {
      rec.outcome.result = SimResult::NoProposal;
      return;
    }
    rec.has_proposal = true;
    rec.proposal = proposals.proposals.front();
    rec.outcome = simulate_grasp(ctx.scene, rec.proposal, cfg.gripper, cfg.sim);
  });

  for (std::size_t oi = 0; oi < objects.size(); ++oi) {
    ObjectStats stats;
    stats.object_id = objects[oi].id;
    for (int ti = 0; ti < per_object; ++ti) {
      const TrialRecord& rec = report.records[oi * per_object + ti];
      ++stats.trials;
      if (rec.success()) ++stats.successes;
      if (!rec.error.empty()) ++stats.errors;
      if (rec.error.empty() && !rec.has_proposal) ++stats.no_proposal;
    }
    stats.success_rate = stats.trials > 0
                             ? static_cast<double>(stats.successes) / stats.trials
                             : 0.0;
    report.objects.push_back(stats);
  }
  long successes = 0;
  for (const auto& rec : report.records) successes += rec.success();
  report.overall_success =
      report.records.empty() ? 0.0
                             : static_cast<double>(successes) / report.records.size();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SweepReport threshold_sweep(const std::vector<PreparedObject>& objects,
                            const PredictorSpec& predictor,
                            const std::vector<double>& gammas,
                            const PipelineConfig& cfg, std::uint64_t seed) {
  if (gammas.empty()) throw std::invalid_argument("threshold_sweep: empty gamma list");
  if (objects.empty()) throw std::invalid_argument("threshold_sweep: no objects");
  const auto start = std::chrono::steady_clock::now();

  const int per_object = cfg.trials_per_object;
  const std::size_t n_trials = objects.size() * static_cast<std::size_t>(per_object);
  const std::size_t n_gammas = gammas.size();

  struct TrialResult {
    // Per gamma: kept pixels, per-proposal (quality, success), top success.
    std::vector<std::vector<std::pair<int, int>>> pixels;
    std::vector<std::vector<std::pair<double, bool>>> proposals;
    std::vector<bool> top_success;
    bool errored = false;
  };
  std::vector<TrialResult> results(n_trials);

  parallel_for(cfg.jobs, n_trials, [&](std::size_t task) {
    const int oi = static_cast<int>(task) / per_object;
    const int ti = static_cast<int>(task) % per_object;
    const PreparedObject& obj = objects[oi];
    TrialResult& res = results[task];
    res.pixels.resize(n_gammas);
    res.proposals.resize(n_gammas);
    res.top_success.assign(n_gammas, false);

    const std::uint64_t trial_seed =
        mix_seed(seed, hash_string(obj.id), static_cast<std::uint64_t>(ti));
    const TrialSetup setup = draw_trial_setup(obj, cfg, trial_seed);
    const SceneContext ctx =
        make_scene_context(obj, setup.pose_index, setup.x, setup.y, setup.camera, cfg);

    Tensor tensor;
    try {
      tensor = predict(predictor, ctx, cfg, obj.id, ti, trial_seed);
    } catch (const std::exception&) {
      res.errored = true;
      return;
    }
    const auto peaks = find_quality_peaks(tensor, cfg.nms.peak_distance);

    for (std::size_t gi = 0; gi < n_gammas; ++gi) {
      NmsParams params = cfg.nms;
      params.gamma = gammas[gi];
      const auto kept = nms_select_from_peaks(tensor, peaks, params);
      res.pixels[gi] = kept;
      bool first = true;
      for (const auto& [u, v] : kept) {
        const auto decoded = decode_grasp(tensor, u, v, cfg.intrinsics, ctx.render.depth,
                                          cfg.gripper.max_width);
        if (!decoded) continue;
        const GraspProposal proposal =
            to_base_frame(*decoded, setup.camera.camera_to_world);
        const SimOutcome outcome =
            simulate_grasp(ctx.scene, proposal, cfg.gripper, cfg.sim);
        const bool ok = outcome.result == SimResult::Success;
        res.proposals[gi].emplace_back(proposal.quality, ok);
        if (first) {
          res.top_success[gi] = ok;
          first = false;
        }
      }
    }
  });

  SweepReport report;
  report.trial_pixels.resize(n_gammas);
  for (std::size_t gi = 0; gi < n_gammas; ++gi) {
    SweepRow row;
    row.gamma = gammas[gi];
    double quality_sum = 0.0;
    long proposal_count = 0;
    long proposal_success = 0;
    long top_successes = 0;
    std::vector<double> per_trial_counts;
    per_trial_counts.reserve(n_trials);
    report.trial_pixels[gi].resize(n_trials);

    for (std::size_t t = 0; t < n_trials; ++t) {
      const TrialResult& res = results[t];
      report.trial_pixels[gi][t] = res.pixels[gi];
      per_trial_counts.push_back(static_cast<double>(res.proposals[gi].size()));
      for (const auto& [q, ok] : res.proposals[gi]) {
        quality_sum += q;
        ++proposal_count;
        proposal_success += ok;
      }
      top_successes += res.top_success[gi];
    }
    row.proposal_count = proposal_count;
    row.mean_pred_quality = proposal_count > 0 ? quality_sum / proposal_count : 0.0;
    row.proposal_success =
        proposal_count > 0 ? static_cast<double>(proposal_success) / proposal_count : 0.0;
    row.object_success = n_trials > 0 ? static_cast<double>(top_successes) / n_trials : 0.0;

    double mean = 0.0;
    for (double c : per_trial_counts) mean += c;
    mean = per_trial_counts.empty() ? 0.0 : mean / per_trial_counts.size();
    double var = 0.0;
    for (double c : per_trial_counts) var += (c - mean) * (c - mean);
    var = per_trial_counts.size() > 1 ? var / (per_trial_counts.size() - 1) : 0.0;
    const double half_width =
        per_trial_counts.empty() ? 0.0
                                 : 1.96 * std::sqrt(var / per_trial_counts.size());
    row.mean_proposals = mean;
    row.ci95_low = mean - half_width;
    row.ci95_high = mean + half_width;
    report.rows.push_back(row);
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace graspkit
