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

#include "graspkit/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace graspkit {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

struct Field {
  std::function<void(PipelineConfig&, const std::string&)> set;
  std::function<std::string(const PipelineConfig&)> get;
};

template <typename T>
std::string render(const T& v) {
  if constexpr (std::is_same_v<T, bool>) {
    return v ? "true" : "false";
  } else if constexpr (std::is_floating_point_v<T>) {
    std::ostringstream oss;
    oss.precision(17);
    oss << v;
    return oss.str();
  } else {
    return std::to_string(v);
  }
}

template <typename T>
void parse_into(T& out, const std::string& value, const std::string& key) {
  if constexpr (std::is_same_v<T, bool>) {
    if (value == "true" || value == "1") {
      out = true;
    } else if (value == "false" || value == "0") {
      out = false;
    } else {
      throw FormatError("config: bad boolean for " + key + ": '" + value + "'");
    }
  } else {
    std::istringstream iss(value);
    T parsed{};
    iss >> parsed;
    if (iss.fail() || !trim(value).size()) {
      throw FormatError("config: cannot parse value for " + key + ": '" + value + "'");
    }
    out = parsed;
  }
}

/// One registry drives parsing, echoing and unknown-key rejection.
const std::map<std::string, Field>& fields() {
  static const std::map<std::string, Field> table = [] {
    std::map<std::string, Field> t;
    auto reg = [&t](const std::string& key, auto member) {
      t[key] = Field{
          [member, key](PipelineConfig& c, const std::string& v) {
            parse_into(c.*member, v, key);
          },
          [member](const PipelineConfig& c) { return render(c.*member); },
      };
    };
    auto reg_sub = [&t](const std::string& key, auto outer, auto inner) {
      t[key] = Field{
          [outer, inner, key](PipelineConfig& c, const std::string& v) {
            parse_into(c.*outer.*inner, v, key);
          },
          [outer, inner](const PipelineConfig& c) { return render(c.*outer.*inner); },
      };
    };
    auto reg_vec = [&t](const std::string& key, auto outer, auto inner, int axis) {
      t[key] = Field{
          [outer, inner, axis, key](PipelineConfig& c, const std::string& v) {
            double d = 0;
            parse_into(d, v, key);
            (c.*outer.*inner)[axis] = d;
          },
          [outer, inner, axis](const PipelineConfig& c) {
            return render((c.*outer.*inner)[axis]);
          },
      };
    };

    reg("run.seed", &PipelineConfig::seed);
    reg("run.jobs", &PipelineConfig::jobs);
    reg("mesh.rescale_min", &PipelineConfig::rescale_min);
    reg("mesh.rescale_max", &PipelineConfig::rescale_max);
    reg_sub("gripper.max_width", &PipelineConfig::gripper, &GripperModel::max_width);
    reg_vec("gripper.finger_half_x", &PipelineConfig::gripper,
            &GripperModel::finger_half_extents, 0);
    reg_vec("gripper.finger_half_y", &PipelineConfig::gripper,
            &GripperModel::finger_half_extents, 1);
    reg_vec("gripper.finger_half_z", &PipelineConfig::gripper,
            &GripperModel::finger_half_extents, 2);
    reg_vec("gripper.palm_half_x", &PipelineConfig::gripper,
            &GripperModel::palm_half_extents, 0);
    reg_vec("gripper.palm_half_y", &PipelineConfig::gripper,
            &GripperModel::palm_half_extents, 1);
    reg_vec("gripper.palm_half_z", &PipelineConfig::gripper,
            &GripperModel::palm_half_extents, 2);
    reg_sub("gripper.tcp_to_palm", &PipelineConfig::gripper, &GripperModel::tcp_to_palm);
    reg_sub("gripper.friction", &PipelineConfig::gripper, &GripperModel::friction);
    reg("sampler.max_grasps", &PipelineConfig::max_grasps);
    reg("sampler.k", &PipelineConfig::sampler_k);
    reg("sampler.quality_delta", &PipelineConfig::quality_delta);
    reg_sub("sampler.eps_trials", &PipelineConfig::epsilon, &EpsilonParams::trials);
    reg_sub("sampler.eps_sigma_contact", &PipelineConfig::epsilon,
            &EpsilonParams::sigma_contact);
    reg_sub("sampler.eps_mu_mean", &PipelineConfig::epsilon, &EpsilonParams::mu_mean);
    reg_sub("sampler.eps_mu_std", &PipelineConfig::epsilon, &EpsilonParams::mu_std);
    reg_sub("sampler.eps_mu_floor", &PipelineConfig::epsilon, &EpsilonParams::mu_floor);
    reg_sub("camera.width", &PipelineConfig::intrinsics, &CameraIntrinsics::width);
    reg_sub("camera.height", &PipelineConfig::intrinsics, &CameraIntrinsics::height);
    reg_sub("camera.fx", &PipelineConfig::intrinsics, &CameraIntrinsics::fx);
    reg_sub("camera.fy", &PipelineConfig::intrinsics, &CameraIntrinsics::fy);
    reg_sub("camera.cx", &PipelineConfig::intrinsics, &CameraIntrinsics::cx);
    reg_sub("camera.cy", &PipelineConfig::intrinsics, &CameraIntrinsics::cy);
    reg_sub("camera.radius_min", &PipelineConfig::camera_bounds, &CameraBounds::radius_min);
    reg_sub("camera.radius_max", &PipelineConfig::camera_bounds, &CameraBounds::radius_max);
    reg_sub("camera.polar_min_deg", &PipelineConfig::camera_bounds,
            &CameraBounds::polar_min_deg);
    reg_sub("camera.polar_max_deg", &PipelineConfig::camera_bounds,
            &CameraBounds::polar_max_deg);
    reg_sub("camera.azimuth_min_deg", &PipelineConfig::camera_bounds,
            &CameraBounds::azimuth_min_deg);
    reg_sub("camera.azimuth_max_deg", &PipelineConfig::camera_bounds,
            &CameraBounds::azimuth_max_deg);
    reg_sub("camera.target_jitter", &PipelineConfig::camera_bounds,
            &CameraBounds::target_jitter);
    reg("render.tau_vis", &PipelineConfig::tau_vis);
    reg("noise.enabled", &PipelineConfig::noise_enabled);
    reg_sub("noise.axial_a0", &PipelineConfig::noise, &NoiseParams::axial_a0);
    reg_sub("noise.axial_a2", &PipelineConfig::noise, &NoiseParams::axial_a2);
    reg_sub("noise.lateral_sigma", &PipelineConfig::noise, &NoiseParams::lateral_sigma);
    reg_sub("decode.gamma", &PipelineConfig::nms, &NmsParams::gamma);
    reg_sub("decode.peak_distance", &PipelineConfig::nms, &NmsParams::peak_distance);
    reg_sub("decode.max_proposals", &PipelineConfig::nms, &NmsParams::max_proposals);
    t["sim.approach_distance"] = Field{
        [](PipelineConfig& c, const std::string& v) {
          parse_into(c.sim.approach.distance, v, "sim.approach_distance");
        },
        [](const PipelineConfig& c) { return render(c.sim.approach.distance); }};
    t["sim.approach_step"] = Field{
        [](PipelineConfig& c, const std::string& v) {
          parse_into(c.sim.approach.step, v, "sim.approach_step");
        },
        [](const PipelineConfig& c) { return render(c.sim.approach.step); }};
    reg_sub("sim.mu_sim", &PipelineConfig::sim, &SimParams::mu_sim);
    reg("eval.trials_per_object", &PipelineConfig::trials_per_object);
    reg("eval.workspace_size", &PipelineConfig::workspace_size);
    reg("eval.noise", &PipelineConfig::eval_noise);
    reg("dataset.images_per_pose", &PipelineConfig::images_per_pose);
    reg("dataset.max_poses", &PipelineConfig::max_poses);
    return t;
  }();
  return table;
}

}  // namespace

void PipelineConfig::validate() const {
  intrinsics.validate();
  if (rescale_min <= 0 || rescale_min > rescale_max) {
    throw FormatError("config: invalid rescale range");
  }
  if (gripper.max_width <= 0 || gripper.friction <= 0) {
    throw FormatError("config: gripper max_width and friction must be positive");
  }
  if (max_grasps < 0 || sampler_k <= 0) throw FormatError("config: bad sampler counts");
  if (quality_delta < 0 || quality_delta > 1) throw FormatError("config: delta outside [0,1]");
  if (epsilon.trials <= 0) throw FormatError("config: eps_trials must be positive");
  if (tau_vis <= 0) throw FormatError("config: tau_vis must be positive");
  if (nms.gamma < 0 || nms.gamma > 1) throw FormatError("config: gamma outside [0,1]");
  if (nms.peak_distance < 1 || nms.max_proposals < 0) throw FormatError("config: bad nms");
  if (sim.approach.distance <= 0 || sim.approach.step <= 0) {
    throw FormatError("config: bad approach parameters");
  }
  if (trials_per_object < 0 || workspace_size <= 0) throw FormatError("config: bad eval");
  if (images_per_pose <= 0 || max_poses <= 0) throw FormatError("config: bad dataset");
  if (jobs < 1) throw FormatError("config: jobs must be >= 1");
}

PipelineConfig load_config(const std::filesystem::path& path, const PipelineConfig& base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config: " + path.string());
  PipelineConfig cfg = base;
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw FormatError(path.string() + ":" + std::to_string(lineno) + ": bad section");
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw FormatError(path.string() + ":" + std::to_string(lineno) +
                        ": expected key = value");
    }
    const std::string key = section + "." + trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = fields().find(key);
    if (it == fields().end()) {
      throw FormatError(path.string() + ":" + std::to_string(lineno) +
                        ": unknown config key '" + key + "'");
    }
    it->second.set(cfg, value);
  }
  cfg.validate();
  return cfg;
}

std::string config_to_string(const PipelineConfig& config) {
  std::ostringstream out;
  std::string section;
  for (const auto& [key, field] : fields()) {
    const auto dot = key.find('.');
    const std::string sec = key.substr(0, dot);
    if (sec != section) {
      if (!section.empty()) out << '\n';
      out << '[' << sec << "]\n";
      section = sec;
    }
    out << key.substr(dot + 1) << " = " << field.get(config) << '\n';
  }
  return out.str();
}

void save_config(const std::filesystem::path& path, const PipelineConfig& config) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write config: " + path.string());
  out << config_to_string(config);
  if (!out) throw IoError("config write failed: " + path.string());
}

}  // namespace graspkit
