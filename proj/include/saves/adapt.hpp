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

#ifndef SAVES_ADAPT_HPP_
#define SAVES_ADAPT_HPP_

#include <cstdint>
#include <vector>

#include "saves/depth_map.hpp"
#include "saves/geometry.hpp"
#include "saves/point_cloud.hpp"

namespace saves {

// Invalidates pixels with depth strictly greater than max_range. Simulators
// assign depth to sky and far geometry; real range sensors do not, so
// synthetic ground truth is cut to the sensor's ceiling. A pixel at exactly
// max_range survives.
DepthMap MaskDepth(const DepthMap& map, double max_range);

// Distance-binned retention probabilities used to thin dense synthetic depth
// until it matches a real sensor's density profile. Bin i covers
// [bin_edges[i], bin_edges[i+1]); the last bin extends to infinity.
struct SparsityProfile {
  std::vector<double> bin_edges;       // strictly increasing, first must be 0
  std::vector<double> keep_fractions;  // same length, each within [0, 1]
  std::uint64_t seed = 0;

  void Validate() const;
  std::size_t BinIndex(double depth) const;
};

// Keeps each valid pixel independently with its bin's fraction, decided by a
// counter-based RNG keyed on (seed, pixel index). The outcome is a pure
// function of (map, profile): identical across runs, thread counts, and
// iteration orders. Surviving depths are never altered.
DepthMap Sparsify(const DepthMap& map, const SparsityProfile& profile);

// Rasterizes a point cloud through the pinhole model into a sparse depth
// map. Points behind the camera are discarded; pixel coordinates round to
// nearest (ties away from zero); a per-pixel z-buffer keeps the closest
// depth.
DepthMap ProjectCloud(const PointCloud& cloud,
                      const RigidTransform& cam_from_lidar,
                      const CameraIntrinsics& intrinsics);

// Inverse of the projection for valid pixels: (u, v, d) lifts to the
// camera-frame point ((u-cx) d / fx, (v-cy) d / fy, d), row-major order.
PointCloud Backproject(const DepthMap& map, const CameraIntrinsics& intrinsics);

// Uniform double in [0, 1) from (seed, index); splitmix64 finalizer.
double KeyedUniform(std::uint64_t seed, std::uint64_t index);

}  // namespace saves

#endif  // SAVES_ADAPT_HPP_
