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

#ifndef SAVES_POINTCLOUD_IO_HPP_
#define SAVES_POINTCLOUD_IO_HPP_

#include <cstdint>
#include <string>

#include "saves/point_cloud.hpp"

namespace saves {

// Velodyne-style binary layout: packed little-endian float32 records of
// (x, y, z, intensity). File length must be a multiple of 16 bytes.
PointCloud ReadPointCloudBin(const std::string& path);
PointCloud ParsePointCloudBin(const std::uint8_t* data, std::size_t size,
                              const std::string& name);

void WritePointCloudBin(const PointCloud& cloud, const std::string& path);

}  // namespace saves

#endif  // SAVES_POINTCLOUD_IO_HPP_
