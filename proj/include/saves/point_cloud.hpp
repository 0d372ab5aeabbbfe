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

#ifndef SAVES_POINT_CLOUD_HPP_
#define SAVES_POINT_CLOUD_HPP_

#include <vector>

#include <Eigen/Core>

#include "saves/error.hpp"

namespace saves {

// LiDAR-style point set in the sensor frame. Intensities are optional; when
// present the vector is the same length as points.
struct PointCloud {
  std::vector<Eigen::Vector3d> points;
  std::vector<float> intensities;

  std::size_t size() const { return points.size(); }
  bool has_intensities() const { return !intensities.empty(); }

  void Validate() const {
    for (const auto& p : points) {
      if (!p.allFinite()) {
        ThrowInvalidArgument("point cloud coordinates must be finite");
      }
    }
    if (!intensities.empty() && intensities.size() != points.size()) {
      ThrowInvalidArgument("intensity count does not match point count");
    }
  }
};

}  // namespace saves

#endif  // SAVES_POINT_CLOUD_HPP_
