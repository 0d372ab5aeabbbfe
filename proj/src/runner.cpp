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

#include "saves/runner.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "saves/error.hpp"
#include "saves/manifest.hpp"
#include "saves/parallel.hpp"
#include "saves/png_io.hpp"
#include "saves/pointcloud_io.hpp"
#include "saves/report.hpp"
#include "saves/stats.hpp"
#include "saves/text_format.hpp"
#include "saves/version.hpp"

namespace saves {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr double kPngMaxDepth = 65535.0 / 256.0;

void EnsureDirectory(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    ThrowIo("cannot create directory " + dir + ": " + ec.message());
  }
}

const char* FormatName(TrajectoryFormat format) {
  switch (format) {
    case TrajectoryFormat::kAuto: return "auto";
    case TrajectoryFormat::kTum: return "tum";
    case TrajectoryFormat::kKitti: return "kitti";
  }
  return "auto";
}

// Carried assets keep deterministic references in derived manifests:
// already-absolute stays absolute, in-tree paths stay relative, everything
// else is pinned to its resolved absolute location.
std::string CarryPath(const Manifest& source, const std::string& stored,
                      const fs::path& new_base) {
  const fs::path resolved =
      source.Resolve(stored).lexically_normal();
  const fs::path relative = resolved.lexically_relative(new_base);
  if (!relative.empty() && relative.native().rfind("..", 0) != 0) {
    return relative.generic_string();
  }
  return fs::absolute(resolved).lexically_normal().generic_string();
}

std::vector<const ManifestFrame*> FramesSortedById(const Manifest& manifest) {
  std::vector<const ManifestFrame*> frames;
  frames.reserve(manifest.frames.size());
  for (const ManifestFrame& frame : manifest.frames) {
    frames.push_back(&frame);
  }
  std::sort(frames.begin(), frames.end(),
            [](const ManifestFrame* a, const ManifestFrame* b) {
              return a->frame_id < b->frame_id;
            });
  return frames;
}

}  // namespace

nlohmann::json RunEvalDepth(const EvalDepthRequest& request) {
  request.config.Validate();
  const Manifest manifest = LoadManifest(request.manifest_path);

  std::vector<const ManifestFrame*> frames;
  for (const ManifestFrame* frame : FramesSortedById(manifest)) {
    if (frame->gt_depth_path) frames.push_back(frame);
  }
  if (frames.empty()) {
    ThrowData("no evaluable frames: manifest has no ground-truth depth");
  }

  struct Slot {
    std::optional<DepthFrameRow> row;
    std::optional<SkipRecord> skip;
  };
  std::vector<Slot> slots(frames.size());

  ParallelFor(frames.size(), [&](std::size_t i) {
    const ManifestFrame& frame = *frames[i];
    try {
      fs::path pred_path;
      if (request.predictions_dir) {
        pred_path = fs::path(*request.predictions_dir) /
                    (frame.frame_id + ".png");
        if (!fs::exists(pred_path)) {
          slots[i].skip = SkipRecord{
              frame.frame_id, "prediction not found: " + pred_path.string()};
          return;
        }
      } else if (frame.pred_depth_path) {
        pred_path = manifest.Resolve(*frame.pred_depth_path);
      } else {
        slots[i].skip = SkipRecord{frame.frame_id, "no prediction available"};
        return;
      }

      const DepthMap gt =
          ReadDepthPng(manifest.Resolve(*frame.gt_depth_path).string());
      DepthMap pred = ReadDepthPng(pred_path.string());
      if (!pred.HasSameDimensions(gt)) {
        pred = ResizeDepth(pred, gt.width(), gt.height());
      }
      ScaleMatchResult matched = ScaleMatch(
          pred, gt, request.config.min_depth, request.config.max_depth);
      DepthMetrics metrics =
          ComputeDepthMetrics(matched.scaled, gt, request.config);
      metrics.scale_factor = matched.scale;
      slots[i].row = DepthFrameRow{frame.frame_id,
                                   manifest.EffectiveLabel(frame), metrics};
    } catch (const Error& e) {
      slots[i].skip = SkipRecord{frame.frame_id, e.what()};
    }
  });

  std::vector<DepthFrameRow> rows;
  std::vector<SkipRecord> skips;
  for (Slot& slot : slots) {
    if (slot.row) rows.push_back(std::move(*slot.row));
    if (slot.skip) skips.push_back(std::move(*slot.skip));
  }
  if (rows.empty()) {
    ThrowData("no evaluable frames: all " + std::to_string(skips.size()) +
              " frames were skipped (first: " + skips.front().reason + ")");
  }

  json config_echo;
  config_echo["manifest_path"] = request.manifest_path;
  config_echo["predictions_dir"] =
      request.predictions_dir ? json(*request.predictions_dir) : json();
  config_echo["min_depth"] = request.config.min_depth;
  config_echo["max_depth"] = request.config.max_depth;
  config_echo["clamp_pred"] = request.config.clamp_pred;

  const json report = BuildDepthReport(config_echo, rows, skips);
  if (request.out_dir) {
    EnsureDirectory(*request.out_dir);
    WriteReportJson(report,
                    (fs::path(*request.out_dir) / "report.json").string());
    RenderReportFiles(report, *request.out_dir);
  }
  return report;
}

nlohmann::json RunEvalOdom(const EvalOdomRequest& request) {
  request.association.Validate();
  const Trajectory reference =
      ReadTrajectory(request.ref_path, request.ref_format,
                     request.kitti_frame_period);
  const Trajectory estimate =
      ReadTrajectory(request.est_path, request.est_format,
                     request.kitti_frame_period);

  const IndexPairs pairs =
      reference.index_based() && estimate.index_based()
          ? AssociateByIndex(reference, estimate)
          : Associate(reference, estimate, request.association);

  Trajectory aligned;
  double umeyama_scale = 1.0;
  switch (request.align_mode) {
    case AlignMode::kOrigin:
      aligned = AlignOrigin(reference, estimate, pairs);
      break;
    case AlignMode::kUmeyama:
      aligned = AlignUmeyama(reference, estimate, pairs, false).aligned;
      break;
    case AlignMode::kUmeyamaScale: {
      UmeyamaResult result = AlignUmeyama(reference, estimate, pairs, true);
      aligned = std::move(result.aligned);
      umeyama_scale = result.scale;
      break;
    }
  }

  OdomMetrics metrics = ComputeApe(reference, aligned, pairs);
  metrics.alignment_mode = request.align_mode;

  json config_echo;
  config_echo["ref_path"] = request.ref_path;
  config_echo["est_path"] = request.est_path;
  config_echo["ref_format"] = FormatName(request.ref_format);
  config_echo["est_format"] = FormatName(request.est_format);
  config_echo["align"] = AlignModeName(request.align_mode);
  config_echo["max_time_diff"] = request.association.max_time_diff;
  config_echo["offset"] = request.association.offset;
  config_echo["kitti_frame_period"] = request.kitti_frame_period;

  json files;
  if (request.out_dir) {
    files["aligned_trajectory"] = "est_aligned.tum.txt";
    files["plot"] = "trajectory.svg";
    files["text"] = "report.txt";
  }
  const json report =
      BuildOdomReport(config_echo, metrics, umeyama_scale, files);

  if (request.out_dir) {
    EnsureDirectory(*request.out_dir);
    const fs::path dir(*request.out_dir);
    WriteReportJson(report, (dir / "report.json").string());
    WriteTrajectoryTum(aligned, (dir / "est_aligned.tum.txt").string());
    WriteTrajectorySvg(reference, aligned, (dir / "trajectory.svg").string());
    RenderReportFiles(report, *request.out_dir);
  }
  return report;
}

nlohmann::json RunAdapt(const AdaptRequest& request) {
  if (!(request.max_range > 0.0)) {
    ThrowInvalidArgument("max_range must be positive");
  }
  if (request.max_range > kPngMaxDepth) {
    ThrowInvalidArgument(
        "max_range exceeds the 16-bit PNG encodable ceiling (" +
        FormatDouble(kPngMaxDepth) + " m)");
  }
  if (request.profile) {
    request.profile->Validate();
  }
  const Manifest manifest = LoadManifest(request.manifest_path);
  if (manifest.frames.empty()) {
    ThrowInvalidArgument("manifest has no frames");
  }

  EnsureDirectory(request.out_dir);
  const fs::path out_dir(request.out_dir);
  EnsureDirectory((out_dir / "depth").string());

  struct Slot {
    ManifestFrame frame;
    bool adapted = false;
  };
  std::vector<Slot> slots(manifest.frames.size());

  ParallelFor(manifest.frames.size(), [&](std::size_t i) {
    const ManifestFrame& source_frame = manifest.frames[i];
    ManifestFrame out_frame = source_frame;
    if (out_frame.rgb_path) {
      out_frame.rgb_path = CarryPath(manifest, *out_frame.rgb_path, out_dir);
    }
    if (out_frame.cloud_path) {
      out_frame.cloud_path =
          CarryPath(manifest, *out_frame.cloud_path, out_dir);
    }
    if (out_frame.pred_depth_path) {
      out_frame.pred_depth_path =
          CarryPath(manifest, *out_frame.pred_depth_path, out_dir);
    }

    std::optional<DepthMap> depth;
    if (source_frame.gt_depth_path) {
      depth = ReadDepthPng(
          manifest.Resolve(*source_frame.gt_depth_path).string());
    } else if (request.project_clouds && source_frame.cloud_path) {
      if (!manifest.has_intrinsics) {
        ThrowData("projection requested but manifest has no intrinsics");
      }
      const PointCloud cloud = ReadPointCloudBin(
          manifest.Resolve(*source_frame.cloud_path).string());
      depth = ProjectCloud(cloud, manifest.cam_from_lidar,
                           manifest.intrinsics);
    }

    if (depth) {
      DepthMap adapted = MaskDepth(*depth, request.max_range);
      if (request.profile) {
        adapted = Sparsify(adapted, *request.profile);
      }
      const std::string file_name = source_frame.frame_id + ".png";
      WriteDepthPng(adapted, (out_dir / "depth" / file_name).string());
      out_frame.gt_depth_path = "depth/" + file_name;
      slots[i].adapted = true;
    }
    slots[i].frame = std::move(out_frame);
  });

  Manifest out_manifest;
  out_manifest.dataset_label = manifest.dataset_label;
  out_manifest.has_intrinsics = manifest.has_intrinsics;
  out_manifest.intrinsics = manifest.intrinsics;
  out_manifest.cam_from_lidar = manifest.cam_from_lidar;
  out_manifest.ref_trajectory_path =
      manifest.ref_trajectory_path
          ? std::optional<std::string>(
                CarryPath(manifest, *manifest.ref_trajectory_path, out_dir))
          : std::nullopt;
  out_manifest.base_dir = out_dir;
  std::size_t adapted_count = 0;
  for (Slot& slot : slots) {
    if (slot.adapted) ++adapted_count;
    out_manifest.frames.push_back(std::move(slot.frame));
  }
  SaveManifest(out_manifest, (out_dir / "manifest.json").string());

  json profile_echo;
  if (request.profile) {
    profile_echo = json{{"bin_edges", request.profile->bin_edges},
                        {"keep_fractions", request.profile->keep_fractions},
                        {"seed", request.profile->seed}};
  }
  json metadata;
  metadata["schema_version"] = kReportSchemaVersion;
  metadata["kind"] = "adapt";
  metadata["tool"] = json{{"name", kToolName}, {"version", kToolVersion}};
  metadata["config"] = json{{"source_manifest", request.manifest_path},
                            {"max_range", request.max_range},
                            {"profile", profile_echo},
                            {"project_clouds", request.project_clouds}};
  metadata["frames_adapted"] = adapted_count;
  metadata["frames_passed_through"] = slots.size() - adapted_count;
  WriteReportJson(metadata, (out_dir / "adapt_metadata.json").string());
  return metadata;
}

nlohmann::json RunStats(const StatsRequest& request) {
  const Manifest manifest = LoadManifest(request.manifest_path);
  if (manifest.frames.empty()) {
    ThrowInvalidArgument("manifest has no frames");
  }

  std::map<std::string, DepthStatsAccumulator> by_label;
  for (const ManifestFrame* frame : FramesSortedById(manifest)) {
    if (!frame->gt_depth_path) continue;
    const DepthMap map =
        ReadDepthPng(manifest.Resolve(*frame->gt_depth_path).string());
    by_label.try_emplace(manifest.EffectiveLabel(*frame)).first->second
        .AddMap(map);
  }
  if (by_label.empty()) {
    ThrowData("manifest has no ground-truth depth frames");
  }

  std::vector<std::pair<std::string, DepthStatsSummary>> summaries;
  for (const auto& [label, accumulator] : by_label) {
    if (accumulator.empty()) continue;
    summaries.emplace_back(label, accumulator.Summarize());
  }
  if (summaries.empty()) {
    ThrowData("no valid pixels");
  }

  json config_echo;
  config_echo["manifest_path"] = request.manifest_path;
  const json report = BuildStatsReport(config_echo, summaries);
  if (request.out_dir) {
    EnsureDirectory(*request.out_dir);
    WriteReportJson(report,
                    (fs::path(*request.out_dir) / "report.json").string());
    RenderReportFiles(report, *request.out_dir);
  }
  return report;
}

namespace {

struct LayoutScan {
  std::map<std::string, fs::path> gt;
  std::map<std::string, fs::path> rgb;
  std::map<std::string, fs::path> pred;
  std::map<std::string, fs::path> clouds;
  std::vector<std::string> warnings;
};

// Collects <stem> -> path for files with the given extension; anything else
// in the directory becomes a warning.
void ScanDirectory(const fs::path& dir, const std::string& extension,
                   std::map<std::string, fs::path>* out,
                   std::vector<std::string>* warnings) {
  std::vector<fs::path> entries;
  for (const auto& entry : fs::directory_iterator(dir)) {
    entries.push_back(entry.path());
  }
  std::sort(entries.begin(), entries.end());
  for (const fs::path& path : entries) {
    if (!fs::is_regular_file(path)) continue;
    if (path.extension() == extension) {
      (*out)[path.stem().string()] = path;
    } else {
      warnings->push_back("ignored (wrong extension): " + path.string());
    }
  }
}

std::optional<fs::path> FirstExistingSubdir(
    const fs::path& root, const std::vector<std::string>& names) {
  for (const std::string& name : names) {
    if (fs::is_directory(root / name)) return root / name;
  }
  return std::nullopt;
}

std::optional<CameraIntrinsics> LoadIntrinsicsJson(const fs::path& path) {
  if (!fs::exists(path)) return std::nullopt;
  std::ifstream in(path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    ThrowParse(path.string() + ": invalid JSON: " + e.what());
  }
  try {
    CameraIntrinsics k;
    k.fx = doc.at("fx").get<double>();
    k.fy = doc.at("fy").get<double>();
    k.cx = doc.at("cx").get<double>();
    k.cy = doc.at("cy").get<double>();
    k.width = doc.at("width").get<int>();
    k.height = doc.at("height").get<int>();
    k.Validate();
    return k;
  } catch (const json::exception& e) {
    ThrowParse(path.string() + ": " + e.what());
  }
}

std::string RelativeTo(const fs::path& path, const fs::path& base) {
  const fs::path relative =
      fs::absolute(path).lexically_normal().lexically_relative(
          fs::absolute(base).lexically_normal());
  if (!relative.empty() && relative.native().rfind("..", 0) != 0) {
    return relative.generic_string();
  }
  return fs::absolute(path).lexically_normal().generic_string();
}

}  // namespace

nlohmann::json RunConvert(const ConvertRequest& request) {
  const fs::path out_manifest_path(request.out_manifest_path);
  const fs::path out_base = out_manifest_path.has_parent_path()
                                ? out_manifest_path.parent_path()
                                : fs::path(".");
  EnsureDirectory(out_base.string());

  Manifest manifest;
  manifest.base_dir = out_base;
  std::vector<std::string> warnings;

  const fs::path input(request.input_path);

  if (request.kind == ConvertKind::kTumTrajectory ||
      request.kind == ConvertKind::kKittiTrajectory) {
    const Trajectory trajectory =
        request.kind == ConvertKind::kTumTrajectory
            ? ReadTrajectoryTum(request.input_path)
            : ReadTrajectoryKitti(request.input_path, request.frame_period);
    if (trajectory.empty()) {
      ThrowInvalidArgument("empty trajectory: " + request.input_path);
    }
    const std::string traj_name = input.stem().string() + ".tum.txt";
    WriteTrajectoryTum(trajectory, (out_base / traj_name).string());
    manifest.dataset_label =
        request.dataset_label.value_or(input.stem().string());
    manifest.ref_trajectory_path = traj_name;
  } else {
    if (!fs::is_directory(input)) {
      ThrowInvalidArgument("unrecognized layout: not a directory: " +
                           request.input_path);
    }
    LayoutScan scan;
    if (request.kind == ConvertKind::kKittiDepthLayout) {
      const auto gt_dir =
          FirstExistingSubdir(input, {"gt_depth", "groundtruth_depth"});
      if (!gt_dir) {
        ThrowInvalidArgument("unrecognized layout: " +
                             (input / "gt_depth").string() + " not found");
      }
      ScanDirectory(*gt_dir, ".png", &scan.gt, &scan.warnings);
      if (scan.gt.empty()) {
        ThrowInvalidArgument("empty directory: " + gt_dir->string());
      }
      if (const auto dir =
              FirstExistingSubdir(input, {"rgb", "image", "image_02"})) {
        ScanDirectory(*dir, ".png", &scan.rgb, &scan.warnings);
      }
      if (const auto dir = FirstExistingSubdir(
              input, {"pred_depth", "prediction", "predictions"})) {
        ScanDirectory(*dir, ".png", &scan.pred, &scan.warnings);
      }
      if (const auto dir =
              FirstExistingSubdir(input, {"velodyne", "clouds"})) {
        ScanDirectory(*dir, ".bin", &scan.clouds, &scan.warnings);
      }
    } else {  // kCloudDir
      ScanDirectory(input, ".bin", &scan.clouds, &scan.warnings);
      if (scan.clouds.empty()) {
        ThrowInvalidArgument("empty directory: no .bin files under " +
                             request.input_path);
      }
    }

    std::optional<CameraIntrinsics> intrinsics = request.intrinsics;
    if (!intrinsics) {
      intrinsics = LoadIntrinsicsJson(input / "intrinsics.json");
    }
    if (!intrinsics) {
      ThrowInvalidArgument(
          "intrinsics required: provide intrinsics.json in " +
          request.input_path + " or pass --fx/--fy/--cx/--cy/--width/--height");
    }
    manifest.intrinsics = *intrinsics;
    manifest.has_intrinsics = true;
    manifest.dataset_label = request.dataset_label.value_or(
        input.filename().empty() ? std::string("converted")
                                 : input.filename().string());

    const auto& primary =
        request.kind == ConvertKind::kKittiDepthLayout ? scan.gt : scan.clouds;
    std::size_t index = 0;
    for (const auto& [stem, path] : primary) {
      ManifestFrame frame;
      frame.frame_id = stem;
      frame.timestamp = static_cast<double>(index) * request.frame_period;
      if (request.kind == ConvertKind::kKittiDepthLayout) {
        frame.gt_depth_path = RelativeTo(path, out_base);
        if (const auto it = scan.rgb.find(stem); it != scan.rgb.end()) {
          frame.rgb_path = RelativeTo(it->second, out_base);
        }
        if (const auto it = scan.pred.find(stem); it != scan.pred.end()) {
          frame.pred_depth_path = RelativeTo(it->second, out_base);
        }
        if (const auto it = scan.clouds.find(stem); it != scan.clouds.end()) {
          frame.cloud_path = RelativeTo(it->second, out_base);
        }
      } else {
        frame.cloud_path = RelativeTo(path, out_base);
      }
      manifest.frames.push_back(std::move(frame));
      ++index;
    }
    // Companion files whose stems have no primary entry.
    auto warn_unmatched = [&](const std::map<std::string, fs::path>& group,
                              const char* what) {
      for (const auto& [stem, path] : group) {
        if (primary.find(stem) == primary.end()) {
          warnings.push_back(std::string("unmatched ") + what + ": " +
                             path.string());
        }
      }
    };
    if (request.kind == ConvertKind::kKittiDepthLayout) {
      warn_unmatched(scan.rgb, "rgb");
      warn_unmatched(scan.pred, "prediction");
      warn_unmatched(scan.clouds, "cloud");
    }
    warnings.insert(warnings.end(), scan.warnings.begin(),
                    scan.warnings.end());
  }

  SaveManifest(manifest, request.out_manifest_path);

  json summary;
  summary["schema_version"] = kReportSchemaVersion;
  summary["kind"] = "convert";
  summary["tool"] = json{{"name", kToolName}, {"version", kToolVersion}};
  summary["config"] = json{{"input_path", request.input_path},
                           {"out_manifest", request.out_manifest_path},
                           {"frame_period", request.frame_period}};
  summary["frames"] = manifest.frames.size();
  summary["warnings"] = warnings;
  return summary;
}

nlohmann::json LoadReportJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    ThrowIo("not found: " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    ThrowParse(path + ": invalid JSON: " + e.what());
  }
}

}  // namespace saves
