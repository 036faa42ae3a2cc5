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

#include <cstdio>
#include <fstream>

#include "graspkit/evaluate.hpp"
#include "json_util.hpp"

namespace graspkit {
namespace {

using jsonutil::json;

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

json record_to_json(const TrialRecord& rec) {
  json j;
  j["object_id"] = rec.object_id;
  j["object_index"] = rec.object_index;
  j["trial_index"] = rec.trial_index;
  j["seed"] = rec.seed;
  j["pose_index"] = rec.pose_index;
  j["offset"] = json::array({rec.offset_x, rec.offset_y});
  j["camera_to_world"] = jsonutil::transform(rec.camera_to_world);
  j["entry_count"] = rec.entry_count;
  j["positive_count"] = rec.positive_count;
  j["outcome"] = to_string(rec.outcome.result);
  j["success"] = rec.success();
  if (rec.has_proposal) {
    j["proposal"] = json{{"tcp_m", jsonutil::vec3(rec.proposal.tcp)},
                         {"r", jsonutil::quat(rec.proposal.rotation)},
                         {"width_m", rec.proposal.width},
                         {"quality", rec.proposal.quality},
                         {"pixel", json::array({rec.proposal.u, rec.proposal.v})}};
    j["swept_distance"] = rec.outcome.swept_distance;
    j["closure_width"] = rec.outcome.closure_width;
  }
  if (!rec.error.empty()) j["error"] = rec.error;
  return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write: " + path.string());
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

/// Minimal deterministic SVG bar chart of per-object success rates.
std::string bar_chart_svg(const std::vector<ObjectStats>& objects) {
  const int bar_w = 48, gap = 16, height = 240, base = 200, left = 50;
  const int width = left + static_cast<int>(objects.size()) * (bar_w + gap) + 20;
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\">\n";
  svg += "<text x=\"8\" y=\"20\" font-size=\"13\">grasp success per object</text>\n";
  for (int tick = 0; tick <= 4; ++tick) {
    const int y = base - tick * 40;
    svg += "<line x1=\"" + std::to_string(left - 6) + "\" y1=\"" + std::to_string(y) +
           "\" x2=\"" + std::to_string(width - 10) + "\" y2=\"" + std::to_string(y) +
           "\" stroke=\"#ddd\"/>\n";
    svg += "<text x=\"6\" y=\"" + std::to_string(y + 4) + "\" font-size=\"10\">" +
           fixed6(tick * 0.25).substr(0, 4) + "</text>\n";
  }
  int x = left;
  for (const auto& obj : objects) {
    const int h = static_cast<int>(obj.success_rate * 160.0 + 0.5);
    svg += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(base - h) +
           "\" width=\"" + std::to_string(bar_w) + "\" height=\"" + std::to_string(h) +
           "\" fill=\"#4878a8\"/>\n";
    svg += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(base + 14) +
           "\" font-size=\"10\">" + obj.object_id + "</text>\n";
    x += bar_w + gap;
  }
  svg += "</svg>\n";
  return svg;
}

std::string polyline(const std::vector<double>& xs, const std::vector<double>& ys,
                     double x0, double x1, double y0, double y1, int left, int top,
                     int plot_w, int plot_h, const char* color) {
  std::string pts;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double px = left + (xs[i] - x0) / (x1 - x0 + 1e-12) * plot_w;
    const double py = top + plot_h - (ys[i] - y0) / (y1 - y0 + 1e-12) * plot_h;
    pts += fixed6(px) + "," + fixed6(py) + " ";
  }
  return "<polyline fill=\"none\" stroke=\"" + std::string(color) +
         "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
}

std::string sweep_chart_svg(const SweepReport& sweep) {
  const int left = 50, top = 30, plot_w = 300, plot_h = 160;
  const int width = left + plot_w + 30, height = top + plot_h + 50;
  std::vector<double> gammas, quality, obj_s, prop_s, counts;
  double max_count = 1.0;
  for (const auto& row : sweep.rows) {
    gammas.push_back(row.gamma);
    quality.push_back(row.mean_pred_quality);
    obj_s.push_back(row.object_success);
    prop_s.push_back(row.proposal_success);
    counts.push_back(row.mean_proposals);
    max_count = std::max(max_count, row.ci95_high);
  }
  if (gammas.empty()) return "<svg xmlns=\"http://www.w3.org/2000/svg\"/>\n";
  const double g0 = gammas.front(), g1 = gammas.back();

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(width) + "\" height=\"" +
                    std::to_string(3 * height) + "\">\n";
  svg += "<text x=\"8\" y=\"18\" font-size=\"12\">mean predicted quality vs gamma</text>\n";
  svg += polyline(gammas, quality, g0, g1, 0.0, 1.0, left, top, plot_w, plot_h, "#4878a8");
  svg += "<g transform=\"translate(0," + std::to_string(height) + ")\">\n";
  svg += "<text x=\"8\" y=\"18\" font-size=\"12\">grasp success vs gamma (object, all proposals)</text>\n";
  svg += polyline(gammas, obj_s, g0, g1, 0.0, 1.0, left, top, plot_w, plot_h, "#4878a8");
  svg += polyline(gammas, prop_s, g0, g1, 0.0, 1.0, left, top, plot_w, plot_h, "#a84848");
  svg += "</g>\n";
  svg += "<g transform=\"translate(0," + std::to_string(2 * height) + ")\">\n";
  svg += "<text x=\"8\" y=\"18\" font-size=\"12\">proposals per trial vs gamma (95% CI)</text>\n";
  std::vector<double> lo, hi;
  for (const auto& row : sweep.rows) {
    lo.push_back(row.ci95_low);
    hi.push_back(row.ci95_high);
  }
  svg += polyline(gammas, counts, g0, g1, 0.0, max_count, left, top, plot_w, plot_h,
                  "#4878a8");
  svg += polyline(gammas, lo, g0, g1, 0.0, max_count, left, top, plot_w, plot_h, "#b8c8d8");
  svg += polyline(gammas, hi, g0, g1, 0.0, max_count, left, top, plot_w, plot_h, "#b8c8d8");
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace

void emit_report(const TrialReport& report, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create report dir: " + out_dir.string());

  json j;
  j["overall_success"] = report.overall_success;
  json objects = json::array();
  for (const auto& obj : report.objects) {
    objects.push_back(json{{"object_id", obj.object_id},
                           {"trials", obj.trials},
                           {"successes", obj.successes},
                           {"success_rate", obj.success_rate},
                           {"no_proposal_count", obj.no_proposal},
                           {"error_count", obj.errors}});
  }
  j["objects"] = objects;
  json records = json::array();
  for (const auto& rec : report.records) records.push_back(record_to_json(rec));
  j["trials"] = records;
  jsonutil::save_json_file(out_dir / "report.json", j);

  std::string csv = "object_id,trials,successes,success_rate,no_proposal_count\n";
  for (const auto& obj : report.objects) {
    csv += obj.object_id + "," + std::to_string(obj.trials) + "," +
           std::to_string(obj.successes) + "," + fixed6(obj.success_rate) + "," +
           std::to_string(obj.no_proposal) + "\n";
  }
  write_text(out_dir / "summary.csv", csv);
  write_text(out_dir / "summary.svg", bar_chart_svg(report.objects));
}

void emit_sweep(const SweepReport& sweep, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create report dir: " + out_dir.string());

  json j;
  json rows = json::array();
  for (const auto& row : sweep.rows) {
    rows.push_back(json{{"gamma", row.gamma},
                        {"mean_pred_quality", row.mean_pred_quality},
                        {"object_success", row.object_success},
                        {"proposal_success", row.proposal_success},
                        {"mean_proposals", row.mean_proposals},
                        {"ci95_low", row.ci95_low},
                        {"ci95_high", row.ci95_high},
                        {"proposal_count", row.proposal_count}});
  }
  j["sweep"] = rows;
  jsonutil::save_json_file(out_dir / "report.json", j);

  std::string csv =
      "gamma,mean_pred_quality,object_success,proposal_success,mean_proposals,"
      "ci95_low,ci95_high\n";
  for (const auto& row : sweep.rows) {
    csv += fixed6(row.gamma) + "," + fixed6(row.mean_pred_quality) + "," +
           fixed6(row.object_success) + "," + fixed6(row.proposal_success) + "," +
           fixed6(row.mean_proposals) + "," + fixed6(row.ci95_low) + "," +
           fixed6(row.ci95_high) + "\n";
  }
  write_text(out_dir / "sweep.csv", csv);
  write_text(out_dir / "sweep.svg", sweep_chart_svg(sweep));
}

}  // namespace graspkit
