/*
 * Copyright 2026 The saves-bench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "saves/report.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

#include "saves/error.hpp"
#include "saves/text_format.hpp"
#include "saves/version.hpp"

namespace saves {

namespace {

using nlohmann::json;

json ToolStamp() {
  return json{{"name", kToolName}, {"version", kToolVersion}};
}

const char* const kMetricKeys[] = {"sq_error_rel", "abs_error_rel", "irmse",
                                   "rmse"};

json AggregateRows(const std::vector<const DepthFrameRow*>& rows) {
  json out;
  out["frame_count"] = rows.size();
  std::uint64_t pixel_total = 0;
  double sums[5] = {0, 0, 0, 0, 0};
  for (const DepthFrameRow* row : rows) {
    sums[0] += row->metrics.sq_error_rel;
    sums[1] += row->metrics.abs_error_rel;
    sums[2] += row->metrics.irmse;
    sums[3] += row->metrics.rmse;
    sums[4] += row->metrics.scale_factor;
    pixel_total += row->metrics.valid_pixel_count;
  }
  const double n = static_cast<double>(rows.size());
  out["sq_error_rel"] = sums[0] / n;
  out["abs_error_rel"] = sums[1] / n;
  out["irmse"] = sums[2] / n;
  out["rmse"] = sums[3] / n;
  out["scale_factor"] = sums[4] / n;
  out["valid_pixel_total"] = pixel_total;

  // Independent re-check of the mean identity: reverse-order accumulation
  // must agree within 1e-12.
  double check[4] = {0, 0, 0, 0};
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    check[0] += (*it)->metrics.sq_error_rel;
    check[1] += (*it)->metrics.abs_error_rel;
    check[2] += (*it)->metrics.irmse;
    check[3] += (*it)->metrics.rmse;
  }
  for (int k = 0; k < 4; ++k) {
    const double a = sums[k] / n;
    const double b = check[k] / n;
    if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(a))) {
      throw std::logic_error("aggregate does not match per-frame mean");
    }
  }
  return out;
}

json SummaryToJson(const DepthStatsSummary& s) {
  return json{{"count", s.count},
              {"min", s.min},
              {"max", s.max},
              {"mean", s.mean},
              {"p10", s.p10},
              {"p25", s.p25},
              {"p50", s.p50},
              {"p75", s.p75},
              {"p90", s.p90},
              {"p99", s.p99},
              {"mean_above_p90", s.mean_above_p90},
              {"approximate", s.approximate}};
}

std::string PadRight(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

const char* const kDepthConventionHeader =
    "# depth evaluation\n"
    "# conventions:\n"
    "#   sqErrorRel  = mean((pred - gt)^2 / gt)            [m]\n"
    "#   absErrorRel = mean(|pred - gt| / gt)\n"
    "#   iRMSE       = sqrt(mean((1000/gt - 1000/pred)^2)) [1/km]\n"
    "#   RMSE        = sqrt(mean((pred - gt)^2))           [m]\n"
    "#   scale matching: per-image pred * median(gt)/median(pred),\n"
    "#   lower median; gt outside [min_depth, max_depth] is masked\n"
    "#   (strictly greater than max_depth is dropped, equal is kept)\n";

const char* const kOdomConventionHeader =
    "# odometry evaluation\n"
    "# conventions:\n"
    "#   APE_RMSE = sqrt(mean ||t_ref - t_est||^2) over matched poses [m]\n"
    "#   APE%     = 100 * APE_RMSE / reference path length over the\n"
    "#              matched span\n";

}  // namespace

json BuildDepthReport(const json& config_echo,
                      const std::vector<DepthFrameRow>& rows,
                      const std::vector<SkipRecord>& skips) {
  json report;
  report["schema_version"] = kReportSchemaVersion;
  report["kind"] = "depth_eval";
  report["tool"] = ToolStamp();
  report["config"] = config_echo;

  json per_frame = json::array();
  std::map<std::string, std::vector<const DepthFrameRow*>> by_dataset;
  std::vector<const DepthFrameRow*> all;
  for (const DepthFrameRow& row : rows) {
    per_frame.push_back(json{{"frame_id", row.frame_id},
                             {"dataset_label", row.dataset_label},
                             {"sq_error_rel", row.metrics.sq_error_rel},
                             {"abs_error_rel", row.metrics.abs_error_rel},
                             {"irmse", row.metrics.irmse},
                             {"rmse", row.metrics.rmse},
                             {"valid_pixel_count", row.metrics.valid_pixel_count},
                             {"scale_factor", row.metrics.scale_factor}});
    by_dataset[row.dataset_label].push_back(&row);
    all.push_back(&row);
  }
  report["per_frame"] = std::move(per_frame);

  json aggregate;
  if (!all.empty()) {
    aggregate["overall"] = AggregateRows(all);
    json by_label;
    for (const auto& [label, group] : by_dataset) {
      by_label[label] = AggregateRows(group);
    }
    aggregate["by_dataset"] = std::move(by_label);
  }
  report["aggregate"] = std::move(aggregate);

  json skip_array = json::array();
  for (const SkipRecord& skip : skips) {
    skip_array.push_back(json{{"frame_id", skip.frame_id},
                              {"reason", skip.reason}});
  }
  report["skips"] = std::move(skip_array);
  return report;
}

json BuildOdomReport(const json& config_echo, const OdomMetrics& metrics,
                     double umeyama_scale, const json& files) {
  json report;
  report["schema_version"] = kReportSchemaVersion;
  report["kind"] = "odom_eval";
  report["tool"] = ToolStamp();
  report["config"] = config_echo;
  report["metrics"] = {
      {"ape_rmse", metrics.ape_rmse},
      {"ape_percent", metrics.ape_percent},
      {"path_length", metrics.path_length},
      {"matched_pose_count", metrics.matched_pose_count},
      {"alignment_mode", AlignModeName(metrics.alignment_mode)}};
  if (metrics.alignment_mode == AlignMode::kUmeyamaScale) {
    report["metrics"]["umeyama_scale"] = umeyama_scale;
  }
  report["files"] = files;
  return report;
}

json BuildStatsReport(
    const json& config_echo,
    const std::vector<std::pair<std::string, DepthStatsSummary>>& per_dataset) {
  json report;
  report["schema_version"] = kReportSchemaVersion;
  report["kind"] = "stats";
  report["tool"] = ToolStamp();
  report["config"] = config_echo;
  report["conventions"] = {
      {"percentile", "linear interpolation on sorted values"},
      {"mean_above_p90", "mean of values >= p90"}};
  json per_label;
  for (const auto& [label, summary] : per_dataset) {
    per_label[label] = SummaryToJson(summary);
  }
  report["per_dataset"] = std::move(per_label);
  return report;
}

std::string SerializeReport(const json& report) {
  return report.dump(2) + "\n";
}

void WriteReportJson(const json& report, const std::string& path) {
  WriteTextFile(SerializeReport(report), path);
}

std::string RenderDepthCsv(const json& report) {
  std::string out =
      "frame_id,dataset_label,sq_error_rel,abs_error_rel,irmse,rmse,"
      "valid_pixel_count,scale_factor\n";
  for (const json& row : report.at("per_frame")) {
    out += row.at("frame_id").get<std::string>();
    out += ',';
    out += row.at("dataset_label").get<std::string>();
    for (const char* key : kMetricKeys) {
      out += ',';
      out += FormatDouble(row.at(key).get<double>());
    }
    out += ',';
    out += std::to_string(row.at("valid_pixel_count").get<std::uint64_t>());
    out += ',';
    out += FormatDouble(row.at("scale_factor").get<double>());
    out += '\n';
  }
  return out;
}

std::string RenderDepthTable(const json& report) {
  std::string out = kDepthConventionHeader;
  const json& config = report.at("config");
  out += "# min_depth=" + FormatDouble(config.at("min_depth").get<double>()) +
         " max_depth=" + FormatDouble(config.at("max_depth").get<double>()) +
         " clamp_pred=" +
         (config.at("clamp_pred").get<bool>() ? std::string("on")
                                              : std::string("off")) +
         "\n\n";

  std::vector<std::vector<std::string>> table;
  table.push_back({"dataset", "frames", "sqErrorRel", "absErrorRel", "iRMSE",
                   "RMSE"});
  const json& aggregate = report.at("aggregate");
  auto add_row = [&table](const std::string& label, const json& agg) {
    std::vector<std::string> row{label,
                                 std::to_string(
                                     agg.at("frame_count").get<std::uint64_t>())};
    for (const char* key : kMetricKeys) {
      row.push_back(FormatFixed(agg.at(key).get<double>(), 4));
    }
    table.push_back(std::move(row));
  };
  if (aggregate.contains("by_dataset")) {
    for (const auto& [label, agg] : aggregate.at("by_dataset").items()) {
      add_row(label, agg);
    }
    if (aggregate.at("by_dataset").size() > 1) {
      add_row("overall", aggregate.at("overall"));
    }
  }

  std::vector<std::size_t> widths(table.front().size(), 0);
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  for (const auto& row : table) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += PadRight(row[c], widths[c] + (c + 1 < row.size() ? 2 : 0));
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }

  const json& skips = report.at("skips");
  if (!skips.empty()) {
    out += "\nskipped frames:\n";
    for (const json& skip : skips) {
      out += "  " + skip.at("frame_id").get<std::string>() + ": " +
             skip.at("reason").get<std::string>() + "\n";
    }
  }
  return out;
}

std::string RenderOdomText(const json& report) {
  const json& metrics = report.at("metrics");
  std::string out = kOdomConventionHeader;
  out += "\n";
  out += "alignment_mode:     " +
         metrics.at("alignment_mode").get<std::string>() + "\n";
  out += "matched_pose_count: " +
         std::to_string(metrics.at("matched_pose_count").get<std::uint64_t>()) +
         "\n";
  out += "path_length [m]:    " +
         FormatFixed(metrics.at("path_length").get<double>(), 4) + "\n";
  out += "APE_RMSE [m]:       " +
         FormatFixed(metrics.at("ape_rmse").get<double>(), 4) + "\n";
  out += "APE [%]:            " +
         FormatFixed(metrics.at("ape_percent").get<double>(), 4) + "\n";
  if (metrics.contains("umeyama_scale")) {
    out += "umeyama_scale:      " +
           FormatFixed(metrics.at("umeyama_scale").get<double>(), 6) + "\n";
  }
  return out;
}

std::string RenderStatsText(const json& report) {
  std::string out =
      "# depth statistics\n"
      "# percentiles: linear interpolation; mean_above_p90: mean of values "
      ">= p90\n";
  for (const auto& [label, s] : report.at("per_dataset").items()) {
    out += "\n[" + label + "]\n";
    out += "  count:          " +
           std::to_string(s.at("count").get<std::uint64_t>()) + "\n";
    for (const char* key : {"min", "max", "mean", "p10", "p25", "p50", "p75",
                            "p90", "p99", "mean_above_p90"}) {
      out += "  " + PadRight(std::string(key) + ":", 16) +
             FormatFixed(s.at(key).get<double>(), 4) + "\n";
    }
    if (s.at("approximate").get<bool>()) {
      out += "  (sketched percentiles; error <= 0.5% of observed range)\n";
    }
  }
  return out;
}

std::string RenderAdaptText(const json& metadata) {
  const json& config = metadata.at("config");
  std::string out = "# adapt summary\n";
  out += "max_range [m]:          " +
         FormatDouble(config.at("max_range").get<double>()) + "\n";
  if (!config.at("profile").is_null() && !config.at("profile").empty()) {
    out += "sparsity profile seed:  " +
           std::to_string(config.at("profile").at("seed").get<std::uint64_t>()) +
           "\n";
    out += "sparsity bins:          " +
           std::to_string(config.at("profile").at("bin_edges").size()) + "\n";
  } else {
    out += "sparsity profile:       none\n";
  }
  out += "project_clouds:         ";
  out += config.at("project_clouds").get<bool>() ? "on\n" : "off\n";
  out += "frames_adapted:         " +
         std::to_string(metadata.at("frames_adapted").get<std::uint64_t>()) +
         "\n";
  out += "frames_passed_through:  " +
         std::to_string(
             metadata.at("frames_passed_through").get<std::uint64_t>()) +
         "\n";
  return out;
}

std::string RenderConvertText(const json& summary) {
  std::string out = "# convert summary\n";
  out += "frames:   " +
         std::to_string(summary.at("frames").get<std::uint64_t>()) + "\n";
  const json& warnings = summary.at("warnings");
  out += "warnings: " + std::to_string(warnings.size()) + "\n";
  for (const json& warning : warnings) {
    out += "  " + warning.get<std::string>() + "\n";
  }
  return out;
}

std::string RenderReportFiles(const json& report, const std::string& out_dir) {
  const std::string kind = report.at("kind").get<std::string>();
  std::string text;
  bool write_plain_text = false;
  if (kind == "depth_eval") {
    text = RenderDepthTable(report);
    if (!out_dir.empty()) {
      const std::filesystem::path dir(out_dir);
      WriteTextFile(text, (dir / "table.txt").string());
      WriteTextFile(RenderDepthCsv(report), (dir / "per_frame.csv").string());
    }
  } else if (kind == "odom_eval") {
    text = RenderOdomText(report);
    write_plain_text = true;
  } else if (kind == "stats") {
    text = RenderStatsText(report);
    write_plain_text = true;
  } else if (kind == "adapt") {
    text = RenderAdaptText(report);
    write_plain_text = true;
  } else if (kind == "convert") {
    text = RenderConvertText(report);
    write_plain_text = true;
  } else {
    ThrowInvalidArgument("unknown report kind: " + kind);
  }
  if (write_plain_text && !out_dir.empty()) {
    WriteTextFile(text,
                  (std::filesystem::path(out_dir) / "report.txt").string());
  }
  return text;
}

std::string RenderTrajectorySvg(const Trajectory& reference,
                                const Trajectory& estimate_aligned) {
  constexpr double kCanvas = 800.0;
  constexpr double kMargin = 48.0;

  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
  bool first = true;
  auto expand = [&](const Trajectory& trajectory) {
    for (const TrajectoryEntry& entry : trajectory.entries()) {
      const double x = entry.pose.translation().x();
      const double y = entry.pose.translation().y();
      if (first) {
        min_x = max_x = x;
        min_y = max_y = y;
        first = false;
      } else {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
      }
    }
  };
  expand(reference);
  expand(estimate_aligned);

  const double span = std::max({max_x - min_x, max_y - min_y, 1e-6});
  const double scale = (kCanvas - 2.0 * kMargin) / span;
  const double center_x = 0.5 * (min_x + max_x);
  const double center_y = 0.5 * (min_y + max_y);

  auto to_svg = [&](double x, double y) {
    // SVG y grows downward; world y grows up.
    const double sx = kCanvas / 2.0 + (x - center_x) * scale;
    const double sy = kCanvas / 2.0 - (y - center_y) * scale;
    return FormatFixed(sx, 6) + "," + FormatFixed(sy, 6);
  };
  auto polyline = [&](const Trajectory& trajectory, const char* color) {
    std::string points;
    for (const TrajectoryEntry& entry : trajectory.entries()) {
      if (!points.empty()) points += ' ';
      points += to_svg(entry.pose.translation().x(),
                       entry.pose.translation().y());
    }
    return std::string("  <polyline fill=\"none\" stroke=\"") + color +
           "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"800\" viewBox=\"0 0 800 800\">\n";
  svg += "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  svg += polyline(reference, "#1f77b4");
  svg += polyline(estimate_aligned, "#d62728");
  svg += "  <text x=\"56\" y=\"40\" font-family=\"monospace\" "
         "font-size=\"16\" fill=\"#1f77b4\">reference</text>\n";
  svg += "  <text x=\"56\" y=\"62\" font-family=\"monospace\" "
         "font-size=\"16\" fill=\"#d62728\">estimate (aligned)</text>\n";
  svg += "</svg>\n";
  return svg;
}

void WriteTrajectorySvg(const Trajectory& reference,
                        const Trajectory& estimate_aligned,
                        const std::string& path) {
  WriteTextFile(RenderTrajectorySvg(reference, estimate_aligned), path);
}

void WriteTextFile(const std::string& content, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    ThrowIo("cannot open for writing: " + path);
  }
  out << content;
  if (!out) {
    ThrowIo("write failed: " + path);
  }
}

}  // namespace saves
