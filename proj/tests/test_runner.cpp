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

#include <doctest.h>

#include "saves/error.hpp"
#include "saves/manifest.hpp"
#include "saves/png_io.hpp"
#include "saves/pointcloud_io.hpp"
#include "test_support.hpp"

namespace saves {
namespace {

using nlohmann::json;

// Three-frame dataset: gt maps plus predictions that are gt scaled by a
// per-frame factor, so scale matching recovers the factor and all metrics
// vanish.
struct SmallDataset {
  std::string manifest_path;
  std::string pred_dir;
};

SmallDataset MakeSmallDataset(const testing::TempDir& dir) {
  std::filesystem::create_directories(dir.path() / "gt");
  std::filesystem::create_directories(dir.path() / "pred");
  Manifest manifest;
  manifest.dataset_label = "tiny";
  manifest.has_intrinsics = true;
  manifest.intrinsics = CameraIntrinsics{50, 50, 4, 3, 8, 6};
  manifest.base_dir = dir.path();

  const double factors[3] = {0.5, 1.0, 2.0};
  for (int f = 0; f < 3; ++f) {
    DepthMap gt(8, 6);
    DepthMap pred(8, 6);
    for (int y = 0; y < 6; ++y) {
      for (int x = 0; x < 8; ++x) {
        const double depth = 4.0 + x + y + f;
        gt.Set(x, y, depth);
        pred.Set(x, y, depth * factors[f]);
      }
    }
    const std::string id = "00000" + std::to_string(f);
    WriteDepthPng(gt, dir.file("gt/" + id + ".png"));
    WriteDepthPng(pred, dir.file("pred/" + id + ".png"));
    ManifestFrame frame;
    frame.frame_id = id;
    frame.timestamp = 0.1 * f;
    frame.gt_depth_path = "gt/" + id + ".png";
    manifest.frames.push_back(frame);
  }
  SaveManifest(manifest, dir.file("manifest.json"));
  return SmallDataset{dir.file("manifest.json"), dir.file("pred")};
}

TEST_CASE("depth run recovers per-frame scales and zero error") {
  testing::TempDir dir;
  const SmallDataset dataset = MakeSmallDataset(dir);
  EvalDepthRequest request;
  request.manifest_path = dataset.manifest_path;
  request.predictions_dir = dataset.pred_dir;
  request.out_dir = dir.file("out");
  const json report = RunEvalDepth(request);

  REQUIRE(report.at("per_frame").size() == 3);
  CHECK(report.at("per_frame")[0].at("frame_id") == "000000");
  CHECK(report.at("per_frame")[0].at("scale_factor").get<double>() ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(report.at("per_frame")[2].at("scale_factor").get<double>() ==
        doctest::Approx(0.5).epsilon(1e-9));
  for (const json& row : report.at("per_frame")) {
    CHECK(row.at("rmse").get<double>() < 1e-9);
    CHECK(row.at("sq_error_rel").get<double>() < 1e-9);
  }
  CHECK(report.at("skips").empty());
  CHECK(std::filesystem::exists(dir.file("out/report.json")));
  CHECK(std::filesystem::exists(dir.file("out/per_frame.csv")));
  CHECK(std::filesystem::exists(dir.file("out/table.txt")));
}

TEST_CASE("missing predictions are skips, not failures") {
  testing::TempDir dir;
  const SmallDataset dataset = MakeSmallDataset(dir);
  std::filesystem::remove(dir.file("pred/000001.png"));

  EvalDepthRequest request;
  request.manifest_path = dataset.manifest_path;
  request.predictions_dir = dataset.pred_dir;
  const json report = RunEvalDepth(request);
  CHECK(report.at("per_frame").size() == 2);
  REQUIRE(report.at("skips").size() == 1);
  CHECK(report.at("skips")[0].at("frame_id") == "000001");

  // All predictions gone: run-level data error.
  std::filesystem::remove(dir.file("pred/000000.png"));
  std::filesystem::remove(dir.file("pred/000002.png"));
  CHECK_THROWS_AS(RunEvalDepth(request), Error);
}

TEST_CASE("depth run over two runs is byte-identical") {
  testing::TempDir dir;
  const SmallDataset dataset = MakeSmallDataset(dir);
  EvalDepthRequest request;
  request.manifest_path = dataset.manifest_path;
  request.predictions_dir = dataset.pred_dir;
  request.out_dir = dir.file("out_a");
  RunEvalDepth(request);
  request.out_dir = dir.file("out_b");
  RunEvalDepth(request);
  CHECK(testing::ReadFile(dir.file("out_a/report.json")) ==
        testing::ReadFile(dir.file("out_b/report.json")));
  CHECK(testing::ReadFile(dir.file("out_a/per_frame.csv")) ==
        testing::ReadFile(dir.file("out_b/per_frame.csv")));
}

TEST_CASE("odom run writes aligned trajectory, svg, and metrics") {
  testing::TempDir dir;
  std::string ref_text = "# t x y z qx qy qz qw\n";
  std::string est_text;
  for (int i = 0; i < 20; ++i) {
    const double t = 0.1 * i;
    ref_text += std::to_string(t) + " " + std::to_string(1.0 * i) + " 0 0 " +
                "0 0 0 1\n";
    // Constant offset in y: origin alignment cancels it exactly.
    est_text += std::to_string(t) + " " + std::to_string(1.0 * i) + " 2 0 " +
                "0 0 0 1\n";
  }
  testing::WriteFile(dir.file("ref.txt"), ref_text);
  testing::WriteFile(dir.file("est.txt"), est_text);

  EvalOdomRequest request;
  request.ref_path = dir.file("ref.txt");
  request.est_path = dir.file("est.txt");
  request.out_dir = dir.file("odom");
  const json report = RunEvalOdom(request);
  CHECK(report.at("metrics").at("ape_rmse").get<double>() < 1e-9);
  CHECK(report.at("metrics").at("matched_pose_count") == 20);
  CHECK(std::filesystem::exists(dir.file("odom/report.json")));
  CHECK(std::filesystem::exists(dir.file("odom/report.txt")));
  CHECK(std::filesystem::exists(dir.file("odom/est_aligned.tum.txt")));
  CHECK(std::filesystem::exists(dir.file("odom/trajectory.svg")));
}

TEST_CASE("adapt masks, writes a rebased manifest, and is idempotent") {
  testing::TempDir dir;
  const SmallDataset dataset = MakeSmallDataset(dir);

  AdaptRequest request;
  request.manifest_path = dataset.manifest_path;
  request.out_dir = dir.file("adapted");
  request.max_range = 12.0;
  const json metadata = RunAdapt(request);
  CHECK(metadata.at("frames_adapted") == 3);

  const Manifest adapted = LoadManifest(dir.file("adapted/manifest.json"));
  REQUIRE(adapted.frames.size() == 3);
  for (const ManifestFrame& frame : adapted.frames) {
    const DepthMap map =
        ReadDepthPng(adapted.Resolve(*frame.gt_depth_path).string());
    for (const double v : map.ValidValues()) CHECK(v <= 12.0);
  }

  const std::string before =
      testing::ReadFile(dir.file("adapted/depth/000000.png")) +
      testing::ReadFile(dir.file("adapted/manifest.json")) +
      testing::ReadFile(dir.file("adapted/adapt_metadata.json"));
  RunAdapt(request);
  const std::string after =
      testing::ReadFile(dir.file("adapted/depth/000000.png")) +
      testing::ReadFile(dir.file("adapted/manifest.json")) +
      testing::ReadFile(dir.file("adapted/adapt_metadata.json"));
  CHECK(before == after);

  request.max_range = 500.0;  // beyond the PNG ceiling
  CHECK_THROWS_AS(RunAdapt(request), Error);
}

TEST_CASE("adapt can project clouds into ground truth") {
  testing::TempDir dir;
  std::filesystem::create_directories(dir.path() / "clouds");
  PointCloud cloud;
  cloud.points.emplace_back(0.0, 0.0, 10.0);
  cloud.points.emplace_back(0.0, 0.0, 90.0);  // masked away at 80
  WritePointCloudBin(cloud, dir.file("clouds/000000.bin"));

  Manifest manifest;
  manifest.dataset_label = "cloudy";
  manifest.has_intrinsics = true;
  manifest.intrinsics = CameraIntrinsics{100, 100, 8, 8, 16, 16};
  manifest.base_dir = dir.path();
  ManifestFrame frame;
  frame.frame_id = "000000";
  frame.timestamp = 0.0;
  frame.cloud_path = "clouds/000000.bin";
  manifest.frames.push_back(frame);
  SaveManifest(manifest, dir.file("manifest.json"));

  AdaptRequest request;
  request.manifest_path = dir.file("manifest.json");
  request.out_dir = dir.file("adapted");
  request.max_range = 80.0;
  request.project_clouds = true;
  const json metadata = RunAdapt(request);
  CHECK(metadata.at("frames_adapted") == 1);
  const DepthMap projected = ReadDepthPng(dir.file("adapted/depth/000000.png"));
  CHECK(projected.ValidCount() == 1);
  CHECK(projected.ValueAt(8, 8) == 10.0);
}

TEST_CASE("stats run groups by dataset label") {
  testing::TempDir dir;
  const SmallDataset dataset = MakeSmallDataset(dir);

  // Relabel one frame.
  Manifest manifest = LoadManifest(dataset.manifest_path);
  manifest.frames[2].dataset_label = "other";
  SaveManifest(manifest, dataset.manifest_path);

  StatsRequest request;
  request.manifest_path = dataset.manifest_path;
  request.out_dir = dir.file("stats");
  const json report = RunStats(request);
  CHECK(report.at("per_dataset").size() == 2);
  CHECK(report.at("per_dataset").contains("tiny"));
  CHECK(report.at("per_dataset").contains("other"));
  CHECK(std::filesystem::exists(dir.file("stats/report.txt")));

  // Empty manifest is a usage error.
  Manifest empty;
  empty.dataset_label = "none";
  SaveManifest(empty, dir.file("empty.json"));
  StatsRequest bad;
  bad.manifest_path = dir.file("empty.json");
  CHECK_THROWS_AS(RunStats(bad), Error);
}

TEST_CASE("convert recognizes a depth layout and warns on strays") {
  testing::TempDir dir;
  std::filesystem::create_directories(dir.path() / "data" / "gt_depth");
  std::filesystem::create_directories(dir.path() / "data" / "rgb");
  DepthMap gt(4, 4);
  gt.Set(0, 0, 5.0);
  WriteDepthPng(gt, dir.file("data/gt_depth/000000.png"));
  WriteDepthPng(gt, dir.file("data/gt_depth/000001.png"));
  testing::WriteFile(dir.file("data/gt_depth/notes.txt"), "stray");
  WriteDepthPng(gt, dir.file("data/rgb/000000.png"));
  WriteDepthPng(gt, dir.file("data/rgb/000009.png"));  // unmatched stem
  testing::WriteFile(
      dir.file("data/intrinsics.json"),
      R"({"fx": 50, "fy": 50, "cx": 2, "cy": 2, "width": 4, "height": 4})");

  ConvertRequest request;
  request.kind = ConvertKind::kKittiDepthLayout;
  request.input_path = dir.file("data");
  request.out_manifest_path = dir.file("converted/manifest.json");
  const json summary = RunConvert(request);
  CHECK(summary.at("frames") == 2);
  CHECK(summary.at("warnings").size() == 2);

  const Manifest manifest = LoadManifest(dir.file("converted/manifest.json"));
  REQUIRE(manifest.frames.size() == 2);
  CHECK(manifest.frames[0].frame_id == "000000");
  CHECK(manifest.frames[0].rgb_path.has_value());
  CHECK_FALSE(manifest.frames[1].rgb_path.has_value());
  CHECK(manifest.frames[1].timestamp == doctest::Approx(0.1));

  // Unrecognized layout: first unmatched path is named.
  ConvertRequest missing;
  missing.kind = ConvertKind::kKittiDepthLayout;
  missing.input_path = dir.file("nothing");
  missing.out_manifest_path = dir.file("converted2/manifest.json");
  CHECK_THROWS_AS(RunConvert(missing), Error);
}

TEST_CASE("convert normalizes trajectories to TUM") {
  testing::TempDir dir;
  testing::WriteFile(dir.file("poses.txt"),
                     "1 0 0 0 0 1 0 0 0 0 1 0\n"
                     "1 0 0 1 0 1 0 0 0 0 1 0\n");
  ConvertRequest request;
  request.kind = ConvertKind::kKittiTrajectory;
  request.input_path = dir.file("poses.txt");
  request.out_manifest_path = dir.file("traj/manifest.json");
  request.frame_period = 0.5;
  const json summary = RunConvert(request);
  CHECK(summary.at("frames") == 0);

  const Manifest manifest = LoadManifest(dir.file("traj/manifest.json"));
  REQUIRE(manifest.ref_trajectory_path.has_value());
  const Trajectory normalized = ReadTrajectoryTum(
      manifest.Resolve(*manifest.ref_trajectory_path).string());
  REQUIRE(normalized.size() == 2);
  CHECK(normalized.at(1).timestamp == doctest::Approx(0.5));
  CHECK(normalized.at(1).pose.translation() == Eigen::Vector3d(0, 0, 1));
}

TEST_CASE("convert cloud directories") {
  testing::TempDir dir;
  std::filesystem::create_directories(dir.path() / "bins");
  PointCloud cloud;
  cloud.points.emplace_back(1.0, 2.0, 3.0);
  WritePointCloudBin(cloud, dir.file("bins/a.bin"));
  WritePointCloudBin(cloud, dir.file("bins/b.bin"));

  ConvertRequest request;
  request.kind = ConvertKind::kCloudDir;
  request.input_path = dir.file("bins");
  request.out_manifest_path = dir.file("out/manifest.json");
  request.intrinsics = CameraIntrinsics{100, 100, 50, 50, 100, 100};
  const json summary = RunConvert(request);
  CHECK(summary.at("frames") == 2);
  const Manifest manifest = LoadManifest(dir.file("out/manifest.json"));
  CHECK(manifest.frames[0].cloud_path.has_value());

  // Empty directory is a usage error.
  std::filesystem::create_directories(dir.path() / "empty");
  ConvertRequest empty;
  empty.kind = ConvertKind::kCloudDir;
  empty.input_path = dir.file("empty");
  empty.out_manifest_path = dir.file("out2/manifest.json");
  empty.intrinsics = request.intrinsics;
  CHECK_THROWS_AS(RunConvert(empty), Error);
}

}  // namespace
}  // namespace saves
