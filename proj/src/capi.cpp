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

#include "saves_bench.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "saves/adapt.hpp"
#include "saves/depth_eval.hpp"
#include "saves/depth_map.hpp"
#include "saves/error.hpp"
#include "saves/odom_eval.hpp"
#include "saves/point_cloud.hpp"
#include "saves/png_io.hpp"
#include "saves/pointcloud_io.hpp"
#include "saves/report.hpp"
#include "saves/runner.hpp"
#include "saves/trajectory.hpp"
#include "saves/trajectory_io.hpp"
#include "saves/version.hpp"

struct saves_depth_map {
  saves::DepthMap map;
};
struct saves_point_cloud {
  saves::PointCloud cloud;
};
struct saves_trajectory {
  saves::Trajectory trajectory;
};
struct saves_report {
  std::string json_text;
  std::string text;
};

namespace {

thread_local std::string g_last_error;

saves_status StatusFromKind(saves::ErrorKind kind) {
  switch (kind) {
    case saves::ErrorKind::kInvalidArgument:
      return SAVES_ERR_INVALID_ARGUMENT;
    case saves::ErrorKind::kIo:
      return SAVES_ERR_IO;
    case saves::ErrorKind::kParse:
      return SAVES_ERR_PARSE;
    case saves::ErrorKind::kData:
      return SAVES_ERR_DATA;
  }
  return SAVES_ERR_INTERNAL;
}

// Runs the body, translating exceptions into status codes and the
// thread-local error message.
template <typename Fn>
saves_status Guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SAVES_OK;
  } catch (const saves::Error& e) {
    g_last_error = e.what();
    return StatusFromKind(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SAVES_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SAVES_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SAVES_ERR_INTERNAL;
  }
}

saves_status RequireArgument(bool condition, const char* message) {
  if (condition) return SAVES_OK;
  g_last_error = message;
  return SAVES_ERR_INVALID_ARGUMENT;
}

saves::DepthEvalConfig ToConfig(const saves_depth_eval_options* options) {
  saves::DepthEvalConfig config;
  if (options != nullptr) {
    config.min_depth = options->min_depth;
    config.max_depth = options->max_depth;
    config.clamp_pred = options->clamp_pred != 0;
  }
  return config;
}

saves::CameraIntrinsics ToIntrinsics(const saves_camera_intrinsics* k) {
  saves::CameraIntrinsics out;
  out.fx = k->fx;
  out.fy = k->fy;
  out.cx = k->cx;
  out.cy = k->cy;
  out.width = k->width;
  out.height = k->height;
  return out;
}

saves::TrajectoryFormat ToFormat(saves_traj_format format) {
  switch (format) {
    case SAVES_TRAJ_TUM:
      return saves::TrajectoryFormat::kTum;
    case SAVES_TRAJ_KITTI:
      return saves::TrajectoryFormat::kKitti;
    default:
      return saves::TrajectoryFormat::kAuto;
  }
}

saves::AlignMode ToAlignMode(saves_align_mode mode) {
  switch (mode) {
    case SAVES_ALIGN_UMEYAMA:
      return saves::AlignMode::kUmeyama;
    case SAVES_ALIGN_UMEYAMA_SCALE:
      return saves::AlignMode::kUmeyamaScale;
    default:
      return saves::AlignMode::kOrigin;
  }
}

saves_align_mode FromAlignMode(saves::AlignMode mode) {
  switch (mode) {
    case saves::AlignMode::kUmeyama:
      return SAVES_ALIGN_UMEYAMA;
    case saves::AlignMode::kUmeyamaScale:
      return SAVES_ALIGN_UMEYAMA_SCALE;
    case saves::AlignMode::kOrigin:
      break;
  }
  return SAVES_ALIGN_ORIGIN;
}

saves_report* MakeReport(const nlohmann::json& report_json,
                         std::string text) {
  auto* report = new saves_report;
  report->json_text = saves::SerializeReport(report_json);
  report->text = std::move(text);
  return report;
}

void FillMetrics(const saves::DepthMetrics& metrics,
                 saves_depth_metrics* out) {
  out->sq_error_rel = metrics.sq_error_rel;
  out->abs_error_rel = metrics.abs_error_rel;
  out->irmse = metrics.irmse;
  out->rmse = metrics.rmse;
  out->scale_factor = metrics.scale_factor;
  out->valid_pixel_count = metrics.valid_pixel_count;
}

}  // namespace

extern "C" {

const char* saves_version(void) { return saves::kToolVersion; }

const char* saves_status_name(saves_status status) {
  switch (status) {
    case SAVES_OK:
      return "ok";
    case SAVES_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SAVES_ERR_IO:
      return "io error";
    case SAVES_ERR_PARSE:
      return "parse error";
    case SAVES_ERR_DATA:
      return "data error";
    case SAVES_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* saves_last_error(void) { return g_last_error.c_str(); }

/* ---------------------------------------------------------------- depth */

saves_status saves_depth_map_create(int32_t width, int32_t height,
                                    const double* values, const uint8_t* valid,
                                    saves_depth_map** out) {
  if (auto s = RequireArgument(out != nullptr, "out must not be null");
      s != SAVES_OK) {
    return s;
  }
  *out = nullptr;
  return Guard([&] {
    if (width <= 0 || height <= 0) {
      saves::ThrowInvalidArgument("depth map dimensions must be positive");
    }
    const std::size_t n =
        static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (values == nullptr || valid == nullptr) {
      *out = new saves_depth_map{saves::DepthMap(width, height)};
      return;
    }
    *out = new saves_depth_map{saves::DepthMap(
        width, height, std::vector<double>(values, values + n),
        std::vector<std::uint8_t>(valid, valid + n))};
  });
}

void saves_depth_map_free(saves_depth_map* map) { delete map; }

int32_t saves_depth_map_width(const saves_depth_map* map) {
  return map != nullptr ? map->map.width() : 0;
}

int32_t saves_depth_map_height(const saves_depth_map* map) {
  return map != nullptr ? map->map.height() : 0;
}

uint64_t saves_depth_map_valid_count(const saves_depth_map* map) {
  return map != nullptr ? map->map.ValidCount() : 0;
}

double saves_depth_map_value_at(const saves_depth_map* map, int32_t x,
                                int32_t y) {
  if (map == nullptr || x < 0 || y < 0 || x >= map->map.width() ||
      y >= map->map.height()) {
    return 0.0;
  }
  return map->map.ValueAt(x, y);
}

int saves_depth_map_is_valid(const saves_depth_map* map, int32_t x,
                             int32_t y) {
  if (map == nullptr || x < 0 || y < 0 || x >= map->map.width() ||
      y >= map->map.height()) {
    return 0;
  }
  return map->map.IsValid(x, y) ? 1 : 0;
}

saves_status saves_depth_map_read_png(const char* path,
                                      saves_depth_map** out) {
  if (auto s = RequireArgument(path != nullptr && out != nullptr,
                               "path and out must not be null");
      s != SAVES_OK) {
    return s;
  }
  *out = nullptr;
  return Guard(
      [&] { *out = new saves_depth_map{saves::ReadDepthPng(path)}; });
}

saves_status saves_depth_map_write_png(const saves_depth_map* map,
                                       const char* path) {
  if (auto s = RequireArgument(map != nullptr && path != nullptr,
                               "map and path must not be null");
      s != SAVES_OK) {
    return s;
  }
  return Guard([&] { saves::WriteDepthPng(map->map, path); });
}

saves_status saves_depth_map_resize(const saves_depth_map* map, int32_t width,
                                    int32_t height, saves_depth_map** out) {
  if (auto s = RequireArgument(map != nullptr && out != nullptr,
                               "map and out must not be null");
      s != SAVES_OK) {
    return s;
  }
  *out = nullptr;
  return Guard([&] {
    *out = new saves_depth_map{saves::ResizeDepth(map->map, width, height)};
  });
}

saves_status saves_depth_map_mask(const saves_depth_map* map, double max_range,
                                  saves_depth_map** out) {
  if (auto s = RequireArgument(map != nullptr && out != nullptr,
                               "map and out must not be null");
      s != SAVES_OK) {
    return s;
  }
  *out = nullptr;
  return Guard([&] {
    *out = new saves_depth_map{saves::MaskDepth(map->map, max_range)};
  });
}

saves_status saves_depth_map_sparsify(const saves_depth_map* map,
                                      const double* bin_edges,
                                      const double* keep_fractions,
                                      size_t bin_count, uint64_t seed,
                                      saves_depth_map** out) {
  if (auto s = RequireArgument(
          map != nullptr && out != nullptr && bin_edges != nullptr &&
              keep_fractions != nullptr && bin_count > 0,
          "map, out, and a nonempty profile are required");
      s != SAVES_OK) {
    return s;
  }
  *out = nullptr;
  return Guard([&] {
    saves::SparsityProfile profile;
    profile.bin_edges.assign(bin_edges, bin_edges + bin_count);
    profile.keep_fractions.assign(keep_fractions, keep_fractions + bin_count);
    profile.seed = seed;
    *out = new saves_depth_map{saves::Sparsify(map->map, profile)};
  });
}

void saves_depth_eval_options_init(saves_depth_eval_options* options) {
  if (options == nullptr) return;
  const saves::DepthEvalConfig defaults;
  options->min_depth = defaults.min_depth;
  options->max_depth = defaults.max_depth;
  options->clamp_pred = defaults.clamp_pred ? 1 : 0;
}

saves_status saves_depth_scale_match(const saves_depth_map* pred,
                                     const saves_depth_map* gt,
                                     const saves_depth_eval_options* options,
                                     saves_depth_map** scaled_out,
                                     double* scale_out) {
  if (auto s = RequireArgument(pred != nullptr && gt != nullptr &&
                                   scaled_out != nullptr,
                               "pred, gt, and scaled_out must not be null");
      s != SAVES_OK) {
    return s;
  }
  *scaled_out = nullptr;
  return Guard([&] {
    const saves::DepthEvalConfig config = ToConfig(options);
    config.Validate();
    saves::ScaleMatchResult result = saves::ScaleMatch(
        pred->map, gt->map, config.min_depth, config.max_depth);
    *scaled_out = new saves_depth_map{std::move(result.scaled)};
    if (scale_out != nullptr) *scale_out = result.scale;
  });
}

saves_status saves_depth_metrics_compute(
    const saves_depth_map* pred_scaled, const saves_depth_map* gt,
    const saves_depth_eval_options* options, saves_depth_metrics* out) {
  if (auto s = RequireArgument(pred_scaled != nullptr && gt != nullptr &&
                                   out != nullptr,
                               "pred, gt, and out must not be null");
      s != SAVES_OK) {
    return s;
  }
  return Guard([&] {
    const saves::DepthMetrics metrics =
        saves::ComputeDepthMetrics(pred_scaled->map, gt->map,
                                   ToConfig(options));
    FillMetrics(metrics, out);
  });
}

/* --------------------------------------------------------------- clouds */

saves_status saves_point_cloud_read_bin(const char* path,
                                        saves_point_cloud** out) {
  if (auto s = RequireArgument(path != nullptr && out != nullptr,
                               "path and out must not be null");
      s != SAVES_OK) {
    return s;
  }
  *out = nullptr;
  return Guard(
      [&] { *out = new saves_point_cloud{saves::ReadPointCloudBin(path)}; });
}

void saves_point_cloud_free(saves_point_cloud* cloud) { delete cloud; }

size_t saves_point_cloud_size(const saves_point_cloud* cloud) {
  return cloud != nullptr ? cloud->cloud.size() : 0;
}

saves_status saves_point_cloud_point(const saves_point_cloud* cloud,
                                     size_t index, double out_xyz[3]) {
  if (auto s = RequireArgument(cloud != nullptr && out_xyz != nullptr,
                               "cloud and out_xyz must not be null");
      s != SAVES_OK) {
    return s;
  }
  return Guard([&] {
    if (index >= cloud->cloud.size()) {
      saves::ThrowInvalidArgument("point index out of range");
    }
    const Eigen::Vector3d& p = cloud->cloud.points[index];
    out_xyz[0] = p.x();
    out_xyz[1] = p.y();
    out_xyz[2] = p.z();
  });
}

saves_status saves_point_cloud_project(const saves_point_cloud* cloud,
                                       const double rotation_wxyz[4],
                                       const double translation_xyz[3],
                                       const saves_camera_intrinsics* intrinsics,
                                       saves_depth_map** out) {
  if (auto s = RequireArgument(cloud != nullptr && intrinsics != nullptr &&
                                   out != nullptr,
                               "cloud, intrinsics, and out must not be null");
      s != SAVES_OK) {
    return s;
  }
  if (auto s = RequireArgument(
          (rotation_wxyz == nullptr) == (translation_xyz == nullptr),
          "rotation and translation must be passed together");
      s != SAVES_OK) {
    return s;
  }
  *out = nullptr;
  return Guard([&] {
    saves::RigidTransform cam_from_lidar;
    if (rotation_wxyz != nullptr) {
      cam_from_lidar = saves::RigidTransform(
          Eigen::Quaterniond(rotation_wxyz[0], rotation_wxyz[1],
                             rotation_wxyz[2], rotation_wxyz[3]),
          Eigen::Vector3d(translation_xyz[0], translation_xyz[1],
                          translation_xyz[2]));
    }
    *out = new saves_depth_map{saves::ProjectCloud(
        cloud->cloud, cam_from_lidar, ToIntrinsics(intrinsics))};
  });
}

saves_status saves_depth_map_backproject(
    const saves_depth_map* map, const saves_camera_intrinsics* intrinsics,
    saves_point_cloud** out) {
  if (auto s = RequireArgument(map != nullptr && intrinsics != nullptr &&
                                   out != nullptr,
                               "map, intrinsics, and out must not be null");
      s != SAVES_OK) {
    return s;
  }
  *out = nullptr;
  return Guard([&] {
    *out = new saves_point_cloud{
        saves::Backproject(map->map, ToIntrinsics(intrinsics))};
  });
}

/* ---------------------------------------------------------- trajectories */

saves_status saves_trajectory_read(const char* path, saves_traj_format format,
                                   double kitti_frame_period,
                                   saves_trajectory** out) {
  if (auto s = RequireArgument(path != nullptr && out != nullptr,
                               "path and out must not be null");
      s != SAVES_OK) {
    return s;
  }
  *out = nullptr;
  return Guard([&] {
    *out = new saves_trajectory{
        saves::ReadTrajectory(path, ToFormat(format), kitti_frame_period)};
  });
}

void saves_trajectory_free(saves_trajectory* trajectory) { delete trajectory; }

size_t saves_trajectory_size(const saves_trajectory* trajectory) {
  return trajectory != nullptr ? trajectory->trajectory.size() : 0;
}

saves_status saves_trajectory_entry(const saves_trajectory* trajectory,
                                    size_t index, double* timestamp,
                                    double rotation_wxyz[4],
                                    double translation_xyz[3]) {
  if (auto s = RequireArgument(trajectory != nullptr,
                               "trajectory must not be null");
      s != SAVES_OK) {
    return s;
  }
  return Guard([&] {
    if (index >= trajectory->trajectory.size()) {
      saves::ThrowInvalidArgument("trajectory index out of range");
    }
    const saves::TrajectoryEntry& entry = trajectory->trajectory.at(index);
    if (timestamp != nullptr) *timestamp = entry.timestamp;
    if (rotation_wxyz != nullptr) {
      const Eigen::Quaterniond& q = entry.pose.rotation();
      rotation_wxyz[0] = q.w();
      rotation_wxyz[1] = q.x();
      rotation_wxyz[2] = q.y();
      rotation_wxyz[3] = q.z();
    }
    if (translation_xyz != nullptr) {
      const Eigen::Vector3d& t = entry.pose.translation();
      translation_xyz[0] = t.x();
      translation_xyz[1] = t.y();
      translation_xyz[2] = t.z();
    }
  });
}

saves_status saves_trajectory_write_tum(const saves_trajectory* trajectory,
                                        const char* path) {
  if (auto s = RequireArgument(trajectory != nullptr && path != nullptr,
                               "trajectory and path must not be null");
      s != SAVES_OK) {
    return s;
  }
  return Guard(
      [&] { saves::WriteTrajectoryTum(trajectory->trajectory, path); });
}

void saves_odom_options_init(saves_odom_options* options) {
  if (options == nullptr) return;
  const saves::AssociationConfig defaults;
  options->align_mode = SAVES_ALIGN_ORIGIN;
  options->max_time_diff = defaults.max_time_diff;
  options->time_offset = defaults.offset;
}

saves_status saves_odom_evaluate(const saves_trajectory* reference,
                                 const saves_trajectory* estimate,
                                 const saves_odom_options* options,
                                 saves_odom_metrics* metrics_out,
                                 saves_trajectory** aligned_out) {
  if (auto s = RequireArgument(reference != nullptr && estimate != nullptr &&
                                   metrics_out != nullptr,
                               "reference, estimate, and metrics_out must "
                               "not be null");
      s != SAVES_OK) {
    return s;
  }
  if (aligned_out != nullptr) *aligned_out = nullptr;
  return Guard([&] {
    saves::AssociationConfig association;
    saves::AlignMode mode = saves::AlignMode::kOrigin;
    if (options != nullptr) {
      association.max_time_diff = options->max_time_diff;
      association.offset = options->time_offset;
      mode = ToAlignMode(options->align_mode);
    }
    const saves::Trajectory& ref = reference->trajectory;
    const saves::Trajectory& est = estimate->trajectory;
    const saves::IndexPairs pairs =
        ref.index_based() && est.index_based()
            ? saves::AssociateByIndex(ref, est)
            : saves::Associate(ref, est, association);

    saves::Trajectory aligned;
    double umeyama_scale = 1.0;
    switch (mode) {
      case saves::AlignMode::kOrigin:
        aligned = saves::AlignOrigin(ref, est, pairs);
        break;
      case saves::AlignMode::kUmeyama:
        aligned = saves::AlignUmeyama(ref, est, pairs, false).aligned;
        break;
      case saves::AlignMode::kUmeyamaScale: {
        saves::UmeyamaResult result =
            saves::AlignUmeyama(ref, est, pairs, true);
        aligned = std::move(result.aligned);
        umeyama_scale = result.scale;
        break;
      }
    }
    saves::OdomMetrics metrics = saves::ComputeApe(ref, aligned, pairs);
    metrics.alignment_mode = mode;

    metrics_out->ape_rmse = metrics.ape_rmse;
    metrics_out->ape_percent = metrics.ape_percent;
    metrics_out->path_length = metrics.path_length;
    metrics_out->umeyama_scale = umeyama_scale;
    metrics_out->matched_pose_count = metrics.matched_pose_count;
    metrics_out->alignment_mode = FromAlignMode(metrics.alignment_mode);
    if (aligned_out != nullptr) {
      *aligned_out = new saves_trajectory{std::move(aligned)};
    }
  });
}

/* ----------------------------------------------------------------- runs */

void saves_report_free(saves_report* report) { delete report; }

const char* saves_report_json(const saves_report* report) {
  return report != nullptr ? report->json_text.c_str() : "";
}

const char* saves_report_text(const saves_report* report) {
  return report != nullptr ? report->text.c_str() : "";
}

saves_status saves_run_eval_depth(const saves_eval_depth_request* request,
                                  saves_report** report_out) {
  if (auto s = RequireArgument(request != nullptr &&
                                   request->manifest_path != nullptr,
                               "request and manifest_path must not be null");
      s != SAVES_OK) {
    return s;
  }
  if (report_out != nullptr) *report_out = nullptr;
  return Guard([&] {
    saves::EvalDepthRequest run;
    run.manifest_path = request->manifest_path;
    if (request->predictions_dir != nullptr) {
      run.predictions_dir = request->predictions_dir;
    }
    if (request->out_dir != nullptr) run.out_dir = request->out_dir;
    run.config = ToConfig(&request->options);
    const nlohmann::json report = saves::RunEvalDepth(run);
    if (report_out != nullptr) {
      *report_out = MakeReport(report, saves::RenderDepthTable(report));
    }
  });
}

saves_status saves_run_eval_odom(const saves_eval_odom_request* request,
                                 saves_report** report_out) {
  if (auto s = RequireArgument(request != nullptr &&
                                   request->ref_path != nullptr &&
                                   request->est_path != nullptr,
                               "request, ref_path, and est_path must not be "
                               "null");
      s != SAVES_OK) {
    return s;
  }
  if (report_out != nullptr) *report_out = nullptr;
  return Guard([&] {
    saves::EvalOdomRequest run;
    run.ref_path = request->ref_path;
    run.est_path = request->est_path;
    run.ref_format = ToFormat(request->ref_format);
    run.est_format = ToFormat(request->est_format);
    run.align_mode = ToAlignMode(request->options.align_mode);
    run.association.max_time_diff = request->options.max_time_diff;
    run.association.offset = request->options.time_offset;
    run.kitti_frame_period = request->kitti_frame_period;
    if (request->out_dir != nullptr) run.out_dir = request->out_dir;
    const nlohmann::json report = saves::RunEvalOdom(run);
    if (report_out != nullptr) {
      *report_out = MakeReport(report, saves::RenderOdomText(report));
    }
  });
}

saves_status saves_run_adapt(const saves_adapt_request* request,
                             saves_report** report_out) {
  if (auto s = RequireArgument(request != nullptr &&
                                   request->manifest_path != nullptr &&
                                   request->out_dir != nullptr,
                               "request, manifest_path, and out_dir must not "
                               "be null");
      s != SAVES_OK) {
    return s;
  }
  if (report_out != nullptr) *report_out = nullptr;
  return Guard([&] {
    saves::AdaptRequest run;
    run.manifest_path = request->manifest_path;
    run.out_dir = request->out_dir;
    run.max_range = request->max_range;
    run.project_clouds = request->project_clouds != 0;
    if (request->has_profile != 0) {
      if (request->profile_bin_edges == nullptr ||
          request->profile_keep_fractions == nullptr ||
          request->profile_bin_count == 0) {
        saves::ThrowInvalidArgument("profile buffers must be provided");
      }
      saves::SparsityProfile profile;
      profile.bin_edges.assign(
          request->profile_bin_edges,
          request->profile_bin_edges + request->profile_bin_count);
      profile.keep_fractions.assign(
          request->profile_keep_fractions,
          request->profile_keep_fractions + request->profile_bin_count);
      profile.seed = request->profile_seed;
      run.profile = std::move(profile);
    }
    const nlohmann::json metadata = saves::RunAdapt(run);
    if (report_out != nullptr) {
      *report_out = MakeReport(metadata, saves::RenderAdaptText(metadata));
    }
  });
}

saves_status saves_run_stats(const saves_stats_request* request,
                             saves_report** report_out) {
  if (auto s = RequireArgument(request != nullptr &&
                                   request->manifest_path != nullptr,
                               "request and manifest_path must not be null");
      s != SAVES_OK) {
    return s;
  }
  if (report_out != nullptr) *report_out = nullptr;
  return Guard([&] {
    saves::StatsRequest run;
    run.manifest_path = request->manifest_path;
    if (request->out_dir != nullptr) run.out_dir = request->out_dir;
    const nlohmann::json report = saves::RunStats(run);
    if (report_out != nullptr) {
      *report_out = MakeReport(report, saves::RenderStatsText(report));
    }
  });
}

saves_status saves_run_convert(const saves_convert_request* request,
                               saves_report** report_out) {
  if (auto s = RequireArgument(request != nullptr &&
                                   request->input_path != nullptr &&
                                   request->out_manifest_path != nullptr,
                               "request, input_path, and out_manifest_path "
                               "must not be null");
      s != SAVES_OK) {
    return s;
  }
  if (report_out != nullptr) *report_out = nullptr;
  return Guard([&] {
    saves::ConvertRequest run;
    switch (request->kind) {
      case SAVES_CONVERT_TUM_TRAJ:
        run.kind = saves::ConvertKind::kTumTrajectory;
        break;
      case SAVES_CONVERT_KITTI_TRAJ:
        run.kind = saves::ConvertKind::kKittiTrajectory;
        break;
      case SAVES_CONVERT_CLOUD_DIR:
        run.kind = saves::ConvertKind::kCloudDir;
        break;
      default:
        run.kind = saves::ConvertKind::kKittiDepthLayout;
        break;
    }
    run.input_path = request->input_path;
    run.out_manifest_path = request->out_manifest_path;
    run.frame_period = request->frame_period;
    if (request->dataset_label != nullptr) {
      run.dataset_label = request->dataset_label;
    }
    if (request->has_intrinsics != 0) {
      run.intrinsics = ToIntrinsics(&request->intrinsics);
    }
    const nlohmann::json summary = saves::RunConvert(run);
    if (report_out != nullptr) {
      *report_out = MakeReport(summary, saves::RenderConvertText(summary));
    }
  });
}

saves_status saves_render_report(const char* report_json_path,
                                 const char* out_dir,
                                 saves_report** report_out) {
  if (auto s = RequireArgument(report_json_path != nullptr,
                               "report_json_path must not be null");
      s != SAVES_OK) {
    return s;
  }
  if (report_out != nullptr) *report_out = nullptr;
  return Guard([&] {
    const nlohmann::json report = saves::LoadReportJson(report_json_path);
    const std::string text = saves::RenderReportFiles(
        report, out_dir != nullptr ? out_dir : "");
    if (report_out != nullptr) {
      *report_out = MakeReport(report, text);
    }
  });
}

}  // extern "C"
