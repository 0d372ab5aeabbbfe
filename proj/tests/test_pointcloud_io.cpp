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

#include "saves/pointcloud_io.hpp"

#include <cstring>
#include <limits>
#include <random>

#include <doctest.h>

#include "saves/error.hpp"
#include "test_support.hpp"

namespace saves {
namespace {

std::vector<std::uint8_t> PackRecords(const std::vector<float>& floats) {
  std::vector<std::uint8_t> bytes(floats.size() * 4);
  std::memcpy(bytes.data(), floats.data(), bytes.size());
  return bytes;
}

TEST_CASE("two hand-assembled records load field exact") {
  const auto bytes = PackRecords(
      {1.0f, 2.0f, 3.0f, 0.5f, -4.0f, 5.5f, -6.25f, 0.0f});
  REQUIRE(bytes.size() == 32);
  const PointCloud cloud = ParsePointCloudBin(bytes.data(), bytes.size(), "m");
  REQUIRE(cloud.size() == 2);
  CHECK(cloud.points[0] == Eigen::Vector3d(1.0, 2.0, 3.0));
  CHECK(cloud.points[1] == Eigen::Vector3d(-4.0, 5.5, -6.25));
  CHECK(cloud.intensities[0] == 0.5f);
  CHECK(cloud.intensities[1] == 0.0f);
}

TEST_CASE("empty file loads an empty cloud") {
  const PointCloud cloud = ParsePointCloudBin(nullptr, 0, "m");
  CHECK(cloud.size() == 0);
}

TEST_CASE("length not divisible by 16 is a truncation error") {
  std::vector<std::uint8_t> bytes(17, 0);
  CHECK_THROWS_WITH_AS(
      ParsePointCloudBin(bytes.data(), bytes.size(), "m"),
      "m: truncated point record (file length 17 is not a multiple of 16)",
      Error);
}

TEST_CASE("non-finite coordinates are rejected") {
  const auto bytes =
      PackRecords({1.0f, std::numeric_limits<float>::quiet_NaN(), 3.0f, 0.0f});
  CHECK_THROWS_WITH_AS(ParsePointCloudBin(bytes.data(), bytes.size(), "m"),
                       "m: non-finite point at record 0", Error);
}

TEST_CASE("write then read round-trips") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> coord(-50.0, 50.0);
  PointCloud cloud;
  for (int i = 0; i < 300; ++i) {
    // float32 storage: use values that survive the cast exactly
    cloud.points.emplace_back(static_cast<float>(coord(rng)),
                              static_cast<float>(coord(rng)),
                              static_cast<float>(coord(rng)));
    cloud.intensities.push_back(static_cast<float>(i) / 300.0f);
  }
  testing::TempDir dir;
  const std::string path = dir.file("cloud.bin");
  WritePointCloudBin(cloud, path);
  const PointCloud loaded = ReadPointCloudBin(path);
  REQUIRE(loaded.size() == cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    CHECK(loaded.points[i] == cloud.points[i]);
    CHECK(loaded.intensities[i] == cloud.intensities[i]);
  }
  CHECK_THROWS_AS(ReadPointCloudBin(dir.file("missing.bin")), Error);
}

}  // namespace
}  // namespace saves
