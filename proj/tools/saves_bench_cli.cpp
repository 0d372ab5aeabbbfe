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

// Command-line front end. All functionality lives behind the C API of the
// savesbench shared library; this binary only parses arguments, merges the
// optional config file with flag overrides, and maps statuses to exit codes
// (0 success, 2 usage/config error, 3 data error).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "saves_bench.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

int ExitCodeFor(saves_status status) {
  switch (status) {
    case SAVES_OK:
      return kExitOk;
    case SAVES_ERR_INVALID_ARGUMENT:
      return kExitUsage;
    case SAVES_ERR_IO:
    case SAVES_ERR_PARSE:
    case SAVES_ERR_DATA:
      return kExitData;
    case SAVES_ERR_INTERNAL:
      return kExitInternal;
  }
  return kExitInternal;
}

int Fail(saves_status status) {
  std::cerr << "error (" << saves_status_name(status)
            << "): " << saves_last_error() << "\n";
  return ExitCodeFor(status);
}

int FailUsage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

void PrintReport(saves_report* report, bool quiet) {
  if (report == nullptr) return;
  if (!quiet) std::cout << saves_report_text(report);
  saves_report_free(report);
}

std::optional<json> LoadConfigFile(const std::string& path,
                                   std::string* error) {
  std::ifstream in(path);
  if (!in) {
    *error = "cannot open config file: " + path;
    return std::nullopt;
  }
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    *error = "config file " + path + ": " + e.what();
    return std::nullopt;
  }
}

// Config-file value wins only when the flag was not given on the command
// line.
template <typename T>
void MergeOption(const CLI::App* cmd, const std::string& flag,
                 const json& config, const char* key, T* value) {
  if (cmd->count(flag) > 0) return;
  if (const auto it = config.find(key); it != config.end()) {
    *value = it->get<T>();
  }
}

bool ParseTrajFormat(const std::string& name, saves_traj_format* out) {
  if (name == "auto") {
    *out = SAVES_TRAJ_AUTO;
  } else if (name == "tum") {
    *out = SAVES_TRAJ_TUM;
  } else if (name == "kitti") {
    *out = SAVES_TRAJ_KITTI;
  } else {
    return false;
  }
  return true;
}

bool ParseAlignMode(const std::string& name, saves_align_mode* out) {
  if (name == "origin") {
    *out = SAVES_ALIGN_ORIGIN;
  } else if (name == "umeyama") {
    *out = SAVES_ALIGN_UMEYAMA;
  } else if (name == "umeyama-scale") {
    *out = SAVES_ALIGN_UMEYAMA_SCALE;
  } else {
    return false;
  }
  return true;
}

struct ProfileBuffers {
  std::vector<double> edges;
  std::vector<double> fractions;
  std::uint64_t seed = 0;
  bool present = false;
};

bool ParseProfileJson(const json& node, ProfileBuffers* out,
                      std::string* error) {
  try {
    out->edges = node.at("bin_edges").get<std::vector<double>>();
    out->fractions = node.at("keep_fractions").get<std::vector<double>>();
    out->seed = node.value("seed", std::uint64_t{0});
    out->present = true;
    return true;
  } catch (const json::exception& e) {
    *error = std::string("sparsity profile: ") + e.what();
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "saves-bench: depth and odometry benchmarking plus dataset adaptation "
      "for synthetic vs real driving data"};
  app.set_version_flag("--version", std::string(saves_version()));
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("--quiet", quiet, "suppress report text on stdout");

  // ---- convert ----
  auto* convert = app.add_subcommand(
      "convert", "build a manifest from a recognized dataset layout");
  std::string convert_kind;
  std::string convert_input;
  std::string convert_out;
  double convert_period = 0.1;
  std::string convert_label;
  double fx = 0, fy = 0, cx = 0, cy = 0;
  int cam_width = 0, cam_height = 0;
  convert->add_option("kind", convert_kind,
                      "kitti-depth-layout | tum-traj | kitti-traj | cloud-dir")
      ->required();
  convert->add_option("input", convert_input, "input file or directory")
      ->required();
  convert->add_option("--out", convert_out, "output manifest path")
      ->required();
  convert->add_option("--frame-period", convert_period,
                      "seconds between synthesized timestamps");
  convert->add_option("--label", convert_label, "dataset label");
  convert->add_option("--fx", fx, "focal length x [px]");
  convert->add_option("--fy", fy, "focal length y [px]");
  convert->add_option("--cx", cx, "principal point x [px]");
  convert->add_option("--cy", cy, "principal point y [px]");
  convert->add_option("--width", cam_width, "image width [px]");
  convert->add_option("--height", cam_height, "image height [px]");

  // ---- eval-depth ----
  auto* eval_depth = app.add_subcommand(
      "eval-depth", "evaluate depth predictions against a manifest");
  std::string depth_manifest;
  std::string depth_pred_dir;
  std::string depth_out_dir;
  std::string depth_config_path;
  saves_depth_eval_options depth_options;
  saves_depth_eval_options_init(&depth_options);
  bool clamp_pred = depth_options.clamp_pred != 0;
  eval_depth->add_option("--manifest", depth_manifest, "manifest path")
      ->required();
  eval_depth->add_option("--pred-dir", depth_pred_dir,
                         "directory of <frame_id>.png predictions");
  eval_depth->add_option("--out-dir", depth_out_dir, "output directory");
  eval_depth->add_option("--config", depth_config_path,
                         "JSON config file (flags override)");
  eval_depth->add_option("--min-depth", depth_options.min_depth,
                         "minimum evaluated ground-truth depth [m]");
  eval_depth->add_option("--max-depth", depth_options.max_depth,
                         "maximum evaluated ground-truth depth [m]");
  eval_depth->add_flag("--clamp-pred,!--no-clamp-pred", clamp_pred,
                       "clamp predictions into [min,max] before metrics");

  // ---- eval-odom ----
  auto* eval_odom = app.add_subcommand(
      "eval-odom", "align trajectories and compute APE / APE%");
  std::string odom_ref;
  std::string odom_est;
  std::string odom_out_dir;
  std::string odom_config_path;
  std::string ref_format_name = "auto";
  std::string est_format_name = "auto";
  std::string align_name = "origin";
  saves_odom_options odom_options;
  saves_odom_options_init(&odom_options);
  double kitti_frame_period = 0.1;
  eval_odom->add_option("--ref", odom_ref, "reference trajectory")->required();
  eval_odom->add_option("--est", odom_est, "estimated trajectory")->required();
  eval_odom->add_option("--out-dir", odom_out_dir, "output directory");
  eval_odom->add_option("--config", odom_config_path,
                        "JSON config file (flags override)");
  eval_odom->add_option("--ref-format", ref_format_name, "auto|tum|kitti");
  eval_odom->add_option("--est-format", est_format_name, "auto|tum|kitti");
  eval_odom->add_option("--align", align_name,
                        "origin|umeyama|umeyama-scale (default origin)");
  eval_odom->add_option("--max-time-diff", odom_options.max_time_diff,
                        "association window [s]");
  eval_odom->add_option("--offset", odom_options.time_offset,
                        "time offset added to estimate [s]");
  eval_odom->add_option("--kitti-frame-period", kitti_frame_period,
                        "timestamp step for KITTI pose files [s]");

  // ---- adapt ----
  auto* adapt = app.add_subcommand(
      "adapt", "apply range masking / sparsification to a dataset");
  std::string adapt_manifest;
  std::string adapt_out_dir;
  std::string adapt_config_path;
  std::string adapt_profile_path;
  double max_range = 80.0;
  bool project_clouds = false;
  adapt->add_option("--manifest", adapt_manifest, "manifest path")->required();
  adapt->add_option("--out-dir", adapt_out_dir, "output directory")
      ->required();
  adapt->add_option("--config", adapt_config_path,
                    "JSON config file (flags override)");
  adapt->add_option("--max-range", max_range,
                    "mask ground truth strictly beyond this depth [m]");
  adapt->add_option("--profile", adapt_profile_path,
                    "JSON sparsity profile "
                    "{bin_edges, keep_fractions, seed}");
  adapt->add_flag("--project-clouds", project_clouds,
                  "synthesize depth from point clouds for frames without gt");

  // ---- stats ----
  auto* stats = app.add_subcommand(
      "stats", "depth distribution statistics per dataset label");
  std::string stats_manifest;
  std::string stats_out_dir;
  stats->add_option("--manifest", stats_manifest, "manifest path")->required();
  stats->add_option("--out-dir", stats_out_dir, "output directory");

  // ---- report ----
  auto* report_cmd = app.add_subcommand(
      "report", "re-render table/CSV/text views from a report.json");
  std::string report_in;
  std::string report_out_dir;
  report_cmd->add_option("--in", report_in, "existing report.json")
      ->required();
  report_cmd->add_option("--out-dir", report_out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (convert->parsed()) {
    saves_convert_request request{};
    if (convert_kind == "kitti-depth-layout") {
      request.kind = SAVES_CONVERT_KITTI_DEPTH_LAYOUT;
    } else if (convert_kind == "tum-traj") {
      request.kind = SAVES_CONVERT_TUM_TRAJ;
    } else if (convert_kind == "kitti-traj") {
      request.kind = SAVES_CONVERT_KITTI_TRAJ;
    } else if (convert_kind == "cloud-dir") {
      request.kind = SAVES_CONVERT_CLOUD_DIR;
    } else {
      return FailUsage("unknown convert kind: " + convert_kind);
    }
    request.input_path = convert_input.c_str();
    request.out_manifest_path = convert_out.c_str();
    request.frame_period = convert_period;
    request.dataset_label =
        convert->count("--label") > 0 ? convert_label.c_str() : nullptr;
    const int intrinsic_flags =
        (convert->count("--fx") > 0) + (convert->count("--fy") > 0) +
        (convert->count("--cx") > 0) + (convert->count("--cy") > 0) +
        (convert->count("--width") > 0) + (convert->count("--height") > 0);
    if (intrinsic_flags != 0 && intrinsic_flags != 6) {
      return FailUsage(
          "--fx/--fy/--cx/--cy/--width/--height must be given together");
    }
    if (intrinsic_flags == 6) {
      request.has_intrinsics = 1;
      request.intrinsics =
          saves_camera_intrinsics{fx, fy, cx, cy, cam_width, cam_height};
    }
    saves_report* report = nullptr;
    const saves_status status = saves_run_convert(&request, &report);
    if (status != SAVES_OK) return Fail(status);
    PrintReport(report, quiet);
    return kExitOk;
  }

  if (eval_depth->parsed()) {
    if (!depth_config_path.empty()) {
      std::string error;
      const auto config = LoadConfigFile(depth_config_path, &error);
      if (!config) return FailUsage(error);
      try {
        MergeOption(eval_depth, "--min-depth", *config, "min_depth",
                    &depth_options.min_depth);
        MergeOption(eval_depth, "--max-depth", *config, "max_depth",
                    &depth_options.max_depth);
        MergeOption(eval_depth, "--clamp-pred", *config, "clamp_pred",
                    &clamp_pred);
        MergeOption(eval_depth, "--pred-dir", *config, "predictions_dir",
                    &depth_pred_dir);
      } catch (const json::exception& e) {
        return FailUsage("config file " + depth_config_path + ": " + e.what());
      }
    }
    depth_options.clamp_pred = clamp_pred ? 1 : 0;
    saves_eval_depth_request request{};
    request.manifest_path = depth_manifest.c_str();
    request.predictions_dir =
        depth_pred_dir.empty() ? nullptr : depth_pred_dir.c_str();
    request.out_dir = depth_out_dir.empty() ? nullptr : depth_out_dir.c_str();
    request.options = depth_options;
    saves_report* report = nullptr;
    const saves_status status = saves_run_eval_depth(&request, &report);
    if (status != SAVES_OK) return Fail(status);
    PrintReport(report, quiet);
    return kExitOk;
  }

  if (eval_odom->parsed()) {
    if (!odom_config_path.empty()) {
      std::string error;
      const auto config = LoadConfigFile(odom_config_path, &error);
      if (!config) return FailUsage(error);
      try {
        MergeOption(eval_odom, "--align", *config, "align", &align_name);
        MergeOption(eval_odom, "--ref-format", *config, "ref_format",
                    &ref_format_name);
        MergeOption(eval_odom, "--est-format", *config, "est_format",
                    &est_format_name);
        MergeOption(eval_odom, "--max-time-diff", *config, "max_time_diff",
                    &odom_options.max_time_diff);
        MergeOption(eval_odom, "--offset", *config, "offset",
                    &odom_options.time_offset);
        MergeOption(eval_odom, "--kitti-frame-period", *config,
                    "kitti_frame_period", &kitti_frame_period);
      } catch (const json::exception& e) {
        return FailUsage("config file " + odom_config_path + ": " + e.what());
      }
    }
    saves_eval_odom_request request{};
    request.ref_path = odom_ref.c_str();
    request.est_path = odom_est.c_str();
    if (!ParseTrajFormat(ref_format_name, &request.ref_format)) {
      return FailUsage("unknown --ref-format: " + ref_format_name);
    }
    if (!ParseTrajFormat(est_format_name, &request.est_format)) {
      return FailUsage("unknown --est-format: " + est_format_name);
    }
    if (!ParseAlignMode(align_name, &odom_options.align_mode)) {
      return FailUsage("unknown --align: " + align_name);
    }
    request.options = odom_options;
    request.kitti_frame_period = kitti_frame_period;
    request.out_dir = odom_out_dir.empty() ? nullptr : odom_out_dir.c_str();
    saves_report* report = nullptr;
    const saves_status status = saves_run_eval_odom(&request, &report);
    if (status != SAVES_OK) return Fail(status);
    PrintReport(report, quiet);
    return kExitOk;
  }

  if (adapt->parsed()) {
    ProfileBuffers profile;
    json config = json::object();
    if (!adapt_config_path.empty()) {
      std::string error;
      const auto loaded = LoadConfigFile(adapt_config_path, &error);
      if (!loaded) return FailUsage(error);
      config = *loaded;
      try {
        MergeOption(adapt, "--max-range", config, "max_range", &max_range);
        MergeOption(adapt, "--project-clouds", config, "project_clouds",
                    &project_clouds);
      } catch (const json::exception& e) {
        return FailUsage("config file " + adapt_config_path + ": " + e.what());
      }
    }
    if (!adapt_profile_path.empty()) {
      std::string error;
      const auto loaded = LoadConfigFile(adapt_profile_path, &error);
      if (!loaded) return FailUsage(error);
      if (!ParseProfileJson(*loaded, &profile, &error)) {
        return FailUsage(error);
      }
    } else if (config.contains("profile") && !config["profile"].is_null()) {
      std::string error;
      if (!ParseProfileJson(config["profile"], &profile, &error)) {
        return FailUsage(error);
      }
    }
    saves_adapt_request request{};
    request.manifest_path = adapt_manifest.c_str();
    request.out_dir = adapt_out_dir.c_str();
    request.max_range = max_range;
    request.project_clouds = project_clouds ? 1 : 0;
    if (profile.present) {
      request.has_profile = 1;
      request.profile_bin_edges = profile.edges.data();
      request.profile_keep_fractions = profile.fractions.data();
      request.profile_bin_count = profile.edges.size();
      request.profile_seed = profile.seed;
    }
    saves_report* report = nullptr;
    const saves_status status = saves_run_adapt(&request, &report);
    if (status != SAVES_OK) return Fail(status);
    PrintReport(report, quiet);
    return kExitOk;
  }

  if (stats->parsed()) {
    saves_stats_request request{};
    request.manifest_path = stats_manifest.c_str();
    request.out_dir = stats_out_dir.empty() ? nullptr : stats_out_dir.c_str();
    saves_report* report = nullptr;
    const saves_status status = saves_run_stats(&request, &report);
    if (status != SAVES_OK) return Fail(status);
    PrintReport(report, quiet);
    return kExitOk;
  }

  if (report_cmd->parsed()) {
    saves_report* report = nullptr;
    const saves_status status = saves_render_report(
        report_in.c_str(),
        report_out_dir.empty() ? nullptr : report_out_dir.c_str(), &report);
    if (status != SAVES_OK) return Fail(status);
    PrintReport(report, quiet);
    return kExitOk;
  }

  return FailUsage("no subcommand given");
}
