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

#include "saves/adapt.hpp"

#include <cmath>
#include <random>

#include <doctest.h>

#include "saves/error.hpp"
#include "saves/png_io.hpp"
#include "test_support.hpp"

namespace saves {
namespace {

TEST_CASE("mask keeps exactly max_range and drops strictly beyond") {
  DepthMap map(3, 1);
  map.Set(0, 0, 80.0);
  map.Set(1, 0, 80.1);
  map.Set(2, 0, 80.0 + 1.0 / 256.0);
  const DepthMap masked = MaskDepth(map, 80.0);
  CHECK(masked.IsValid(0, 0));
  CHECK_FALSE(masked.IsValid(1, 0));
  CHECK_FALSE(masked.IsValid(2, 0));
  CHECK(masked.ValueAt(0, 0) == 80.0);
}

TEST_CASE("an effectively infinite range leaves the map unchanged") {
  std::mt19937_64 rng(91);
  const DepthMap map = testing::RandomDepthMap(rng, 20, 20, 1.0, 500.0, 0.8);
  const DepthMap masked = MaskDepth(map, 1e9);
  CHECK(masked.values() == map.values());
  CHECK(masked.valid() == map.valid());
}

TEST_CASE("an all-sky map masks to zero valid pixels and still encodes") {
  DepthMap map(4, 4);
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 4; ++x) map.Set(x, y, 200.0);
  }
  const DepthMap masked = MaskDepth(map, 80.0);
  CHECK(masked.ValidCount() == 0);
  testing::TempDir dir;
  CHECK_NOTHROW(WriteDepthPng(masked, dir.file("empty.png")));
  CHECK(ReadDepthPng(dir.file("empty.png")).ValidCount() == 0);
}

TEST_CASE("mask is monotone and never alters surviving depths") {
  std::mt19937_64 rng(92);
  const DepthMap map = testing::RandomDepthMap(rng, 24, 24, 1.0, 150.0, 0.9);
  const DepthMap tight = MaskDepth(map, 50.0);
  const DepthMap loose = MaskDepth(map, 100.0);
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      if (tight.IsValid(x, y)) {
        CHECK(loose.IsValid(x, y));  // valid(50) subset of valid(100)
        CHECK(tight.ValueAt(x, y) == map.ValueAt(x, y));
      }
      if (loose.IsValid(x, y)) {
        CHECK(map.IsValid(x, y));
        CHECK(loose.ValueAt(x, y) == map.ValueAt(x, y));
      }
    }
  }
  CHECK_THROWS_AS(MaskDepth(map, 0.0), Error);
}

TEST_CASE("sparsify keep fraction 1 is the identity, 0 drops everything") {
  std::mt19937_64 rng(93);
  const DepthMap map = testing::RandomDepthMap(rng, 16, 16, 1.0, 60.0, 0.9);

  SparsityProfile all{{0.0}, {1.0}, 42};
  const DepthMap kept = Sparsify(map, all);
  CHECK(kept.values() == map.values());
  CHECK(kept.valid() == map.valid());

  SparsityProfile none{{0.0}, {0.0}, 42};
  CHECK(Sparsify(map, none).ValidCount() == 0);
}

TEST_CASE("sparsify retains the configured fraction within binomial bounds") {
  DepthMap map(400, 250);  // 1e5 pixels
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) map.Set(x, y, 30.0);
  }
  SparsityProfile quarter{{0.0}, {0.25}, 20260101};
  const DepthMap thinned = Sparsify(map, quarter);
  const double fraction =
      static_cast<double>(thinned.ValidCount()) / map.size();
  CHECK(std::abs(fraction - 0.25) < 0.01);
}

TEST_CASE("sparsify applies the bin of each depth") {
  DepthMap map(2, 1);
  map.Set(0, 0, 5.0);    // bin [0, 10): keep 1.0
  map.Set(1, 0, 50.0);   // bin [10, inf): keep 0.0
  SparsityProfile profile{{0.0, 10.0}, {1.0, 0.0}, 7};
  const DepthMap out = Sparsify(map, profile);
  CHECK(out.IsValid(0, 0));
  CHECK_FALSE(out.IsValid(1, 0));
}

TEST_CASE("sparsify is a pure function of map and profile") {
  std::mt19937_64 rng(94);
  const DepthMap map = testing::RandomDepthMap(rng, 32, 32, 1.0, 100.0, 0.9);
  SparsityProfile profile{{0.0, 20.0, 60.0}, {0.9, 0.5, 0.1}, 1234};
  const DepthMap a = Sparsify(map, profile);
  const DepthMap b = Sparsify(map, profile);
  CHECK(a.values() == b.values());
  CHECK(a.valid() == b.valid());
  // Surviving depths are untouched.
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      if (a.IsValid(x, y)) CHECK(a.ValueAt(x, y) == map.ValueAt(x, y));
    }
  }
  // A different seed produces a different thinning.
  profile.seed = 4321;
  const DepthMap c = Sparsify(map, profile);
  CHECK(c.valid() != a.valid());
}

TEST_CASE("sparsity profile validation") {
  CHECK_THROWS_AS(
      Sparsify(DepthMap(1, 1), SparsityProfile{{1.0}, {0.5}, 0}), Error);
  CHECK_THROWS_AS(
      Sparsify(DepthMap(1, 1), SparsityProfile{{0.0, 0.0}, {0.5, 0.5}, 0}),
      Error);
  CHECK_THROWS_AS(
      Sparsify(DepthMap(1, 1), SparsityProfile{{0.0}, {1.5}, 0}), Error);
  CHECK_THROWS_AS(Sparsify(DepthMap(1, 1), SparsityProfile{{}, {}, 0}),
                  Error);
}

TEST_CASE("principal-ray projection") {
  PointCloud cloud;
  cloud.points.emplace_back(0.0, 0.0, 10.0);
  const CameraIntrinsics k{100, 100, 50, 50, 100, 100};
  const DepthMap map = ProjectCloud(cloud, RigidTransform::Identity(), k);
  CHECK(map.IsValid(50, 50));
  CHECK(map.ValueAt(50, 50) == 10.0);
  CHECK(map.ValidCount() == 1);
}

TEST_CASE("z-buffer keeps the nearest depth; order does not matter") {
  const CameraIntrinsics k{100, 100, 50, 50, 100, 100};
  PointCloud near_first;
  near_first.points.emplace_back(0.0, 0.0, 5.0);
  near_first.points.emplace_back(0.0, 0.0, 10.0);
  PointCloud far_first;
  far_first.points.emplace_back(0.0, 0.0, 10.0);
  far_first.points.emplace_back(0.0, 0.0, 5.0);
  for (const PointCloud& cloud : {near_first, far_first}) {
    const DepthMap map = ProjectCloud(cloud, RigidTransform::Identity(), k);
    CHECK(map.ValueAt(50, 50) == 5.0);
  }
}

TEST_CASE("points behind the camera and out of frame are discarded") {
  PointCloud cloud;
  cloud.points.emplace_back(0.0, 0.0, -1.0);
  cloud.points.emplace_back(0.0, 0.0, 0.0);
  cloud.points.emplace_back(100.0, 0.0, 1.0);  // projects far outside
  const CameraIntrinsics k{100, 100, 50, 50, 100, 100};
  CHECK(ProjectCloud(cloud, RigidTransform::Identity(), k).ValidCount() == 0);
}

TEST_CASE("projection applies the extrinsic transform") {
  // Lidar point on +x; camera looks along lidar +x via a -90 deg rotation
  // about y mapping x -> z.
  PointCloud cloud;
  cloud.points.emplace_back(10.0, 0.0, 0.0);
  const RigidTransform cam_from_lidar(
      Eigen::Quaterniond(Eigen::AngleAxisd(-M_PI / 2,
                                           Eigen::Vector3d::UnitY())),
      Eigen::Vector3d::Zero());
  const CameraIntrinsics k{100, 100, 50, 50, 100, 100};
  const DepthMap map = ProjectCloud(cloud, cam_from_lidar, k);
  CHECK(map.IsValid(50, 50));
  CHECK(map.ValueAt(50, 50) == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("backproject inverts the principal-ray case") {
  DepthMap map(100, 100);
  map.Set(50, 50, 10.0);
  const CameraIntrinsics k{100, 100, 50, 50, 100, 100};
  const PointCloud cloud = Backproject(map, k);
  REQUIRE(cloud.size() == 1);
  CHECK(cloud.points[0] == Eigen::Vector3d(0.0, 0.0, 10.0));

  CHECK(Backproject(DepthMap(10, 10), k).size() == 0);
}

TEST_CASE("project after backproject reproduces sparse maps exactly") {
  std::mt19937_64 rng(95);
  const CameraIntrinsics k{120.5, 118.25, 31.5, 24.25, 64, 48};
  for (int round = 0; round < 50; ++round) {
    const DepthMap map =
        testing::RandomDepthMap(rng, 64, 48, 0.5, 90.0, 0.05);
    const PointCloud cloud = Backproject(map, k);
    const DepthMap reprojected =
        ProjectCloud(cloud, RigidTransform::Identity(), k);
    CHECK(reprojected.values() == map.values());
    CHECK(reprojected.valid() == map.valid());
  }
}

TEST_CASE("keyed uniforms are deterministic and roughly uniform") {
  CHECK(KeyedUniform(1, 2) == KeyedUniform(1, 2));
  CHECK(KeyedUniform(1, 2) != KeyedUniform(1, 3));
  CHECK(KeyedUniform(1, 2) != KeyedUniform(2, 2));
  double sum = 0.0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const double u = KeyedUniform(99, i);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
  }
  CHECK(sum / 10000.0 == doctest::Approx(0.5).epsilon(0.02));
}

}  // namespace
}  // namespace saves
