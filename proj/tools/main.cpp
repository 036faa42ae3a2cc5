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

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "graspkit/dataset.hpp"
#include "graspkit/decode.hpp"
#include "graspkit/evaluate.hpp"
#include "graspkit/primitives.hpp"
#include "graspkit/sample_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitFormat = 3;

struct CommonFlags {
  std::string config_file;
  std::uint64_t seed = 0;
  int jobs = 0;
  bool seed_set = false;
};

/// flag > file > default.
graspkit::PipelineConfig effective_config(const CLI::App* cmd, const CommonFlags& flags,
                                          const graspkit::PipelineConfig& base) {
  graspkit::PipelineConfig cfg = base;
  if (!flags.config_file.empty()) {
    cfg = graspkit::load_config(flags.config_file, cfg);
  }
  if (cmd->count("--seed") > 0) cfg.seed = flags.seed;
  if (cmd->count("--jobs") > 0) cfg.jobs = flags.jobs;
  return cfg;
}

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_file, "pipeline config file");
  cmd->add_option("--seed", flags.seed, "master random seed");
  cmd->add_option("--jobs", flags.jobs, "worker threads (results independent of N)");
}

std::vector<double> parse_gammas(const std::string& text) {
  std::vector<double> gammas;
  const auto c1 = text.find(':');
  if (c1 != std::string::npos) {
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) {
      throw graspkit::FormatError("expected --gammas start:end:step or a,b,c list");
    }
    const double start = std::stod(text.substr(0, c1));
    const double end = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = std::stod(text.substr(c2 + 1));
    if (step <= 0 || end < start) throw graspkit::FormatError("bad --gammas range");
    for (double g = start; g <= end + 1e-9; g += step) gammas.push_back(g);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) gammas.push_back(std::stod(item));
    }
  }
  if (gammas.empty()) throw graspkit::FormatError("empty --gammas list");
  return gammas;
}

int cmd_generate(const CLI::App* cmd, const CommonFlags& flags,
                 const std::string& meshes_dir, const std::string& out_dir,
                 int images_per_pose, int max_poses, int max_grasps) {
  graspkit::PipelineConfig cfg = effective_config(cmd, flags, {});
  if (cmd->count("--images-per-pose") > 0) cfg.images_per_pose = images_per_pose;
  if (cmd->count("--max-poses") > 0) cfg.max_poses = max_poses;
  if (cmd->count("--max-grasps") > 0) cfg.max_grasps = max_grasps;
  cfg.validate();

  std::vector<std::string> failures;
  auto meshes = graspkit::load_mesh_dir(meshes_dir, &failures);
  for (const auto& f : failures) std::cerr << "skipping mesh: " << f << "\n";
  if (meshes.empty()) {
    std::cerr << "error: no loadable meshes in " << meshes_dir << "\n";
    return kExitIo;
  }
  const auto manifest = graspkit::generate_dataset(meshes, out_dir, cfg);
  std::cout << "dataset written to " << out_dir << ": " << manifest.objects
            << " objects, " << manifest.poses << " poses, " << manifest.images
            << " images, " << manifest.grasp_entries << " grasp entries\n";
  return kExitOk;
}

int cmd_decode(const std::string& tensor_file, const std::string& depth_file,
               const std::string& intrinsics_file, const std::string& extrinsics_file,
               double gamma, int peak_distance, int max_proposals, double max_width) {
  const auto intrinsics = graspkit::load_intrinsics_file(intrinsics_file);
  const auto extrinsics = extrinsics_file.empty()
                              ? graspkit::RigidTransform::identity()
                              : graspkit::load_transform_file(extrinsics_file);
  const auto tensor = graspkit::read_tensor(tensor_file);
  const auto depth =
      graspkit::read_depth_raw(depth_file, intrinsics.width, intrinsics.height);
  graspkit::NmsParams params;
  params.gamma = gamma;
  params.peak_distance = peak_distance;
  params.max_proposals = max_proposals;
  const auto result =
      graspkit::propose(tensor, intrinsics, depth, extrinsics, params, max_width);
  std::cout << graspkit::proposals_to_json(result.proposals);
  for (const auto& skipped : result.skipped) {
    std::cerr << "skipped pixel (" << skipped.u << ", " << skipped.v
              << "): " << skipped.reason << "\n";
  }
  return kExitOk;
}

std::vector<graspkit::PreparedObject> gather_objects(const std::string& dataset_dir,
                                                     const std::string& meshes_dir,
                                                     graspkit::PipelineConfig& cfg,
                                                     const CLI::App* cmd,
                                                     const CommonFlags& flags) {
  if (!dataset_dir.empty()) {
    // Label-affecting settings come from the dataset's own config; explicit
    // flags and --config still override on top.
    cfg = effective_config(cmd, flags, graspkit::load_dataset_config(dataset_dir));
    return graspkit::prepare_dataset_objects(dataset_dir, cfg);
  }
  std::vector<std::string> failures;
  auto meshes = graspkit::load_mesh_dir(meshes_dir, &failures);
  for (const auto& f : failures) std::cerr << "skipping mesh: " << f << "\n";
  if (meshes.empty()) throw graspkit::IoError("no loadable meshes in " + meshes_dir);
  std::vector<graspkit::PreparedObject> objects;
  for (auto& [id, mesh] : meshes) {
    objects.push_back(graspkit::prepare_object(
        id, std::move(mesh), graspkit::draw_target_width(cfg, id), cfg, cfg.seed));
  }
  return objects;
}

int cmd_eval(const CLI::App* cmd, const CommonFlags& flags, const std::string& dataset_dir,
             const std::string& meshes_dir, const std::string& predictor_text,
             int trials, double gamma, const std::string& out_dir) {
  graspkit::PipelineConfig cfg = effective_config(cmd, flags, {});
  const auto predictor = graspkit::PredictorSpec::parse(predictor_text);
  auto objects = gather_objects(dataset_dir, meshes_dir, cfg, cmd, flags);
  if (cmd->count("--trials") > 0) cfg.trials_per_object = trials;
  if (cmd->count("--gamma") > 0) cfg.nms.gamma = gamma;
  cfg.validate();

  const auto report = graspkit::run_trials(objects, predictor, cfg, cfg.seed);
  graspkit::emit_report(report, out_dir);
  graspkit::save_config(std::filesystem::path(out_dir) / "config.ini", cfg);
  std::printf("overall success %.4f over %zu trials (%.1fs)\n", report.overall_success,
              report.records.size(), report.wall_seconds);
  for (const auto& obj : report.objects) {
    std::printf("  %-12s %3d/%3d success, %d no-proposal\n", obj.object_id.c_str(),
                obj.successes, obj.trials, obj.no_proposal);
  }
  return kExitOk;
}

int cmd_sweep(const CLI::App* cmd, const CommonFlags& flags, const std::string& dataset_dir,
              const std::string& meshes_dir, const std::string& predictor_text,
              int trials, const std::string& gammas_text, const std::string& out_dir) {
  graspkit::PipelineConfig cfg = effective_config(cmd, flags, {});
  const auto predictor = graspkit::PredictorSpec::parse(predictor_text);
  const auto gammas = parse_gammas(gammas_text);
  auto objects = gather_objects(dataset_dir, meshes_dir, cfg, cmd, flags);
  if (cmd->count("--trials") > 0) cfg.trials_per_object = trials;
  cfg.validate();

  const auto sweep = graspkit::threshold_sweep(objects, predictor, gammas, cfg, cfg.seed);
  graspkit::emit_sweep(sweep, out_dir);
  graspkit::save_config(std::filesystem::path(out_dir) / "config.ini", cfg);
  std::printf("sweep over %zu thresholds done (%.1fs)\n", gammas.size(),
              sweep.wall_seconds);
  for (const auto& row : sweep.rows) {
    std::printf("  gamma %.2f: quality %.3f, object success %.3f, proposals %.2f\n",
                row.gamma, row.mean_pred_quality, row.object_success, row.mean_proposals);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"6-DoF grasp dataset synthesis, decoding and evaluation"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "render a ground-truth grasp dataset");
  CommonFlags gen_flags;
  std::string gen_meshes, gen_out;
  int gen_images = 20, gen_poses = 25, gen_grasps = 100;
  generate->add_option("--meshes", gen_meshes, "directory of STL/OBJ meshes")->required();
  generate->add_option("--out", gen_out, "output dataset directory")->required();
  generate->add_option("--images-per-pose", gen_images, "renders per stable pose");
  generate->add_option("--max-poses", gen_poses, "stable pose cap per object");
  generate->add_option("--max-grasps", gen_grasps, "grasp candidates per object");
  add_common(generate, gen_flags);

  // decode
  auto* decode = app.add_subcommand("decode", "decode a tensor into grasp proposals");
  std::string dec_tensor, dec_depth, dec_intr, dec_extr;
  double dec_gamma = 0.4, dec_max_width = 0.08;
  int dec_peak = 4, dec_max = 10;
  decode->add_option("--tensor", dec_tensor, "tensor.f32 file")->required();
  decode->add_option("--depth", dec_depth, "depth.f32 file")->required();
  decode->add_option("--intrinsics", dec_intr, "intrinsics JSON")->required();
  decode->add_option("--extrinsics", dec_extr, "camera->base transform JSON");
  decode->add_option("--gamma", dec_gamma, "acceptance threshold");
  decode->add_option("--peak-distance", dec_peak, "NMS peak distance (px)");
  decode->add_option("--max-proposals", dec_max, "proposal cap");
  decode->add_option("--max-width", dec_max_width, "gripper width clamp (m)");

  // eval
  auto* eval = app.add_subcommand("eval", "run the simulated grasp protocol");
  CommonFlags eval_flags;
  std::string eval_dataset, eval_meshes, eval_pred = "oracle", eval_out = "eval_out";
  int eval_trials = 100;
  double eval_gamma = 0.4;
  eval->add_option("--dataset", eval_dataset, "evaluate a generated dataset");
  eval->add_option("--meshes", eval_meshes, "evaluate a mesh directory");
  eval->add_option("--predictor", eval_pred, "oracle | perturbed:<sigma> | file:<dir>");
  eval->add_option("--trials", eval_trials, "trials per object");
  eval->add_option("--gamma", eval_gamma, "acceptance threshold");
  eval->add_option("--out", eval_out, "report directory");
  add_common(eval, eval_flags);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "acceptance-threshold sweep");
  CommonFlags sweep_flags;
  std::string sw_dataset, sw_meshes, sw_pred = "perturbed:0.3", sw_out = "sweep_out";
  std::string sw_gammas = "0.1:0.9:0.1";
  int sw_trials = 20;
  sweep->add_option("--dataset", sw_dataset, "sweep over a generated dataset");
  sweep->add_option("--meshes", sw_meshes, "sweep over a mesh directory");
  sweep->add_option("--predictor", sw_pred, "oracle | perturbed:<sigma> | file:<dir>");
  sweep->add_option("--trials", sw_trials, "trials per object");
  sweep->add_option("--gammas", sw_gammas, "start:end:step or comma list");
  sweep->add_option("--out", sw_out, "report directory");
  add_common(sweep, sweep_flags);

  // primitives
  auto* prim = app.add_subcommand("primitives", "write the bundled primitive meshes");
  std::string prim_out;
  prim->add_option("--out", prim_out, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      return cmd_generate(generate, gen_flags, gen_meshes, gen_out, gen_images, gen_poses,
                          gen_grasps);
    }
    if (decode->parsed()) {
      return cmd_decode(dec_tensor, dec_depth, dec_intr, dec_extr, dec_gamma, dec_peak,
                        dec_max, dec_max_width);
    }
    if (eval->parsed()) {
      if (eval_dataset.empty() == eval_meshes.empty()) {
        std::cerr << "error: eval needs exactly one of --dataset or --meshes\n";
        return kExitUsage;
      }
      return cmd_eval(eval, eval_flags, eval_dataset, eval_meshes, eval_pred, eval_trials,
                      eval_gamma, eval_out);
    }
    if (sweep->parsed()) {
      if (sw_dataset.empty() == sw_meshes.empty()) {
        std::cerr << "error: sweep needs exactly one of --dataset or --meshes\n";
        return kExitUsage;
      }
      return cmd_sweep(sweep, sweep_flags, sw_dataset, sw_meshes, sw_pred, sw_trials,
                       sw_gammas, sw_out);
    }
    if (prim->parsed()) {
      graspkit::write_bundled_primitives(prim_out);
      std::cout << "primitives written to " << prim_out << "\n";
      return kExitOk;
    }
  } catch (const graspkit::FormatError& e) {
    std::cerr << "data format error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const graspkit::MeshError& e) {
    std::cerr << "data format error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const graspkit::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
