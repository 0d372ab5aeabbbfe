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

#ifndef SAVES_RUNNER_HPP_
#define SAVES_RUNNER_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "saves/adapt.hpp"
#include "saves/depth_eval.hpp"
#include "saves/odom_eval.hpp"
#include "saves/trajectory_io.hpp"

namespace saves {

// Run-level entry points behind the CLI subcommands. Each loads its inputs,
// fans per-frame work across the worker pool (SAVES_BENCH_THREADS), writes
// its output files when out_dir is set, and returns the report document.
// Outputs are byte-identical for identical inputs regardless of worker
// count.

struct EvalDepthRequest {
  std::string manifest_path;
  // Per-frame predictions <predictions_dir>/<frame_id>.png; when absent the
  // manifest's pred_depth_path entries are used.
  std::optional<std::string> predictions_dir;
  DepthEvalConfig config;
  std::optional<std::string> out_dir;
};

// report.json, per_frame.csv, table.txt. Per-frame failures become skip
// records; zero evaluable frames raise kData.
nlohmann::json RunEvalDepth(const EvalDepthRequest& request);

struct EvalOdomRequest {
  std::string ref_path;
  std::string est_path;
  TrajectoryFormat ref_format = TrajectoryFormat::kAuto;
  TrajectoryFormat est_format = TrajectoryFormat::kAuto;
  AlignMode align_mode = AlignMode::kOrigin;
  AssociationConfig association;
  double kitti_frame_period = 0.1;
  std::optional<std::string> out_dir;
};

// report.json, report.txt, est_aligned.tum.txt, trajectory.svg. Two
// index-based trajectories (KITTI pose files) associate by index.
nlohmann::json RunEvalOdom(const EvalOdomRequest& request);

struct AdaptRequest {
  std::string manifest_path;
  std::string out_dir;
  double max_range = 80.0;
  std::optional<SparsityProfile> profile;
  // Synthesize ground truth by projecting the frame's point cloud when a
  // frame has a cloud but no depth.
  bool project_clouds = false;
};

// Writes depth/<frame_id>.png per adapted frame plus manifest.json and
// adapt_metadata.json. Re-running with identical inputs reproduces the
// output tree byte for byte. max_range must fit the 16-bit PNG ceiling
// (65535/256 m).
nlohmann::json RunAdapt(const AdaptRequest& request);

struct StatsRequest {
  std::string manifest_path;
  std::optional<std::string> out_dir;
};

// Valid-pixel depth statistics per dataset label over the manifest's ground
// truth maps; report.json + report.txt.
nlohmann::json RunStats(const StatsRequest& request);

enum class ConvertKind {
  kKittiDepthLayout,
  kTumTrajectory,
  kKittiTrajectory,
  kCloudDir,
};

struct ConvertRequest {
  ConvertKind kind = ConvertKind::kKittiDepthLayout;
  std::string input_path;
  std::string out_manifest_path;
  double frame_period = 0.1;  // synthesized timestamps for index-based input
  std::optional<std::string> dataset_label;
  std::optional<CameraIntrinsics> intrinsics;  // overrides intrinsics.json
};

// Emits a manifest referencing the recognized files; trajectory inputs are
// normalized to TUM alongside the manifest. Unrecognized layouts raise
// kInvalidArgument naming the first unmatched path; files that do not fit
// the layout become warnings in the returned summary.
nlohmann::json RunConvert(const ConvertRequest& request);

// Re-renders table/CSV/text views from an existing report.json.
nlohmann::json LoadReportJson(const std::string& path);

}  // namespace saves

#endif  // SAVES_RUNNER_HPP_
