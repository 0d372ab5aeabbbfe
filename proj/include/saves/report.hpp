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

#ifndef SAVES_REPORT_HPP_
#define SAVES_REPORT_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "saves/depth_eval.hpp"
#include "saves/odom_eval.hpp"
#include "saves/stats.hpp"
#include "saves/trajectory.hpp"

namespace saves {

struct DepthFrameRow {
  std::string frame_id;
  std::string dataset_label;
  DepthMetrics metrics;
};

struct SkipRecord {
  std::string frame_id;
  std::string reason;
};

// Report documents are plain JSON with a versioned schema and no volatile
// content (no timestamps, no machine identity), so identical runs serialize
// to identical bytes. Aggregates are the arithmetic means of the per-frame
// rows; the builder re-verifies that within 1e-12 before emitting.
nlohmann::json BuildDepthReport(const nlohmann::json& config_echo,
                                const std::vector<DepthFrameRow>& rows,
                                const std::vector<SkipRecord>& skips);

nlohmann::json BuildOdomReport(const nlohmann::json& config_echo,
                               const OdomMetrics& metrics, double umeyama_scale,
                               const nlohmann::json& files);

nlohmann::json BuildStatsReport(
    const nlohmann::json& config_echo,
    const std::vector<std::pair<std::string, DepthStatsSummary>>& per_dataset);

std::string SerializeReport(const nlohmann::json& report);
void WriteReportJson(const nlohmann::json& report, const std::string& path);

// One CSV row per frame; header fixed:
// frame_id,dataset_label,sq_error_rel,abs_error_rel,irmse,rmse,
// valid_pixel_count,scale_factor
std::string RenderDepthCsv(const nlohmann::json& report);

// Text tables mirror the familiar benchmark layout (datasets x metrics) and
// begin with the metric definitions so the conventions are auditable.
std::string RenderDepthTable(const nlohmann::json& report);
std::string RenderOdomText(const nlohmann::json& report);
std::string RenderStatsText(const nlohmann::json& report);
std::string RenderAdaptText(const nlohmann::json& metadata);
std::string RenderConvertText(const nlohmann::json& summary);

// Dispatches on report["kind"]; returns the rendered text and, when out_dir
// is nonempty, writes table/CSV files there.
std::string RenderReportFiles(const nlohmann::json& report,
                              const std::string& out_dir);

// Top-down XY plot of reference vs aligned estimate. SVG so the output is
// deterministic and reviewable; coordinates are printed with fixed
// precision.
std::string RenderTrajectorySvg(const Trajectory& reference,
                                const Trajectory& estimate_aligned);
void WriteTrajectorySvg(const Trajectory& reference,
                        const Trajectory& estimate_aligned,
                        const std::string& path);

void WriteTextFile(const std::string& content, const std::string& path);

}  // namespace saves

#endif  // SAVES_REPORT_HPP_
