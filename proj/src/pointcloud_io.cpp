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

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <vector>

#include "saves/error.hpp"

static_assert(std::endian::native == std::endian::little,
              "point cloud I/O assumes a little-endian host");

namespace saves {

PointCloud ParsePointCloudBin(const std::uint8_t* data, std::size_t size,
                              const std::string& name) {
  if (size % 16 != 0) {
    ThrowParse(name + ": truncated point record (file length " +
               std::to_string(size) + " is not a multiple of 16)");
  }
  const std::size_t count = size / 16;
  PointCloud cloud;
  cloud.points.reserve(count);
  cloud.intensities.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    float record[4];
    std::memcpy(record, data + i * 16, 16);
    if (!std::isfinite(record[0]) || !std::isfinite(record[1]) ||
        !std::isfinite(record[2])) {
      ThrowParse(name + ": non-finite point at record " + std::to_string(i));
    }
    cloud.points.emplace_back(record[0], record[1], record[2]);
    cloud.intensities.push_back(record[3]);
  }
  return cloud;
}

PointCloud ReadPointCloudBin(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ThrowIo("not found: " + path);
  }
  const std::vector<std::uint8_t> bytes(
      (std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return ParsePointCloudBin(bytes.data(), bytes.size(), path);
}

void WritePointCloudBin(const PointCloud& cloud, const std::string& path) {
  cloud.Validate();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    ThrowIo("cannot open for writing: " + path);
  }
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    const float record[4] = {
        static_cast<float>(cloud.points[i].x()),
        static_cast<float>(cloud.points[i].y()),
        static_cast<float>(cloud.points[i].z()),
        cloud.has_intensities() ? cloud.intensities[i] : 0.0f};
    out.write(reinterpret_cast<const char*>(record), 16);
  }
  if (!out) {
    ThrowIo("write failed: " + path);
  }
}

}  // namespace saves
