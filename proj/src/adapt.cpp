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

#include <algorithm>
#include <cmath>

#include "saves/error.hpp"

namespace saves {

DepthMap MaskDepth(const DepthMap& map, double max_range) {
  if (!(max_range > 0.0)) {
    ThrowInvalidArgument("max_range must be positive");
  }
  DepthMap out = map;
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      if (map.IsValid(x, y) && map.ValueAt(x, y) > max_range) {
        out.SetInvalid(x, y);
      }
    }
  }
  return out;
}

void SparsityProfile::Validate() const {
  if (bin_edges.empty() || bin_edges.size() != keep_fractions.size()) {
    ThrowInvalidArgument(
        "sparsity profile needs matching, nonempty edges and fractions");
  }
  if (bin_edges.front() != 0.0) {
    ThrowInvalidArgument("sparsity profile must start at depth 0");
  }
  for (std::size_t i = 0; i < bin_edges.size(); ++i) {
    if (!std::isfinite(bin_edges[i]) ||
        (i > 0 && bin_edges[i] <= bin_edges[i - 1])) {
      ThrowInvalidArgument("sparsity bin edges must be strictly increasing");
    }
    if (!(keep_fractions[i] >= 0.0) || !(keep_fractions[i] <= 1.0)) {
      ThrowInvalidArgument("keep fractions must lie in [0, 1]");
    }
  }
}

std::size_t SparsityProfile::BinIndex(double depth) const {
  const auto it =
      std::upper_bound(bin_edges.begin(), bin_edges.end(), depth);
  return static_cast<std::size_t>(std::distance(bin_edges.begin(), it)) - 1;
}

namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

double KeyedUniform(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t mixed = SplitMix64(seed ^ SplitMix64(index));
  return static_cast<double>(mixed >> 11) * 0x1.0p-53;
}

DepthMap Sparsify(const DepthMap& map, const SparsityProfile& profile) {
  profile.Validate();
  DepthMap out = map;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map.valid()[i] == 0) continue;
    const double depth = map.values()[i];
    const double keep = profile.keep_fractions[profile.BinIndex(depth)];
    if (!(KeyedUniform(profile.seed, i) < keep)) {
      out.SetInvalid(static_cast<int>(i % map.width()),
                     static_cast<int>(i / map.width()));
    }
  }
  return out;
}

DepthMap ProjectCloud(const PointCloud& cloud,
                      const RigidTransform& cam_from_lidar,
                      const CameraIntrinsics& intrinsics) {
  intrinsics.Validate();
  DepthMap out(intrinsics.width, intrinsics.height);
  for (const Eigen::Vector3d& point : cloud.points) {
    const Eigen::Vector3d p = cam_from_lidar.Apply(point);
    const double z = p.z();
    if (!(z > 0.0)) continue;
    const long u = std::lround(intrinsics.fx * p.x() / z + intrinsics.cx);
    const long v = std::lround(intrinsics.fy * p.y() / z + intrinsics.cy);
    if (u < 0 || u >= intrinsics.width || v < 0 || v >= intrinsics.height) {
      continue;
    }
    const int x = static_cast<int>(u);
    const int y = static_cast<int>(v);
    if (!out.IsValid(x, y) || z < out.ValueAt(x, y)) {
      out.Set(x, y, z);
    }
  }
  return out;
}

PointCloud Backproject(const DepthMap& map,
                       const CameraIntrinsics& intrinsics) {
  intrinsics.Validate();
  PointCloud cloud;
  cloud.points.reserve(map.ValidCount());
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      if (!map.IsValid(x, y)) continue;
      const double d = map.ValueAt(x, y);
      cloud.points.emplace_back((x - intrinsics.cx) * d / intrinsics.fx,
                                (y - intrinsics.cy) * d / intrinsics.fy, d);
    }
  }
  return cloud;
}

}  // namespace saves
