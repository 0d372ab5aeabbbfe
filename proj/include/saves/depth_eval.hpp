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

#ifndef SAVES_DEPTH_EVAL_HPP_
#define SAVES_DEPTH_EVAL_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "saves/depth_map.hpp"

namespace saves {

struct DepthEvalConfig {
  double min_depth = 1e-3;  // meters
  double max_depth = 80.0;  // meters; ground truth strictly above is masked
  // Clamp predictions into [min_depth, max_depth] before computing metrics,
  // so models with different output ceilings stay comparable.
  bool clamp_pred = true;

  void Validate() const;
};

// Per-image depth error metrics. Conventions (also printed in report
// headers):
//   abs_error_rel = mean(|d - g| / g)
//   sq_error_rel  = mean((d - g)^2 / g)        [meters]
//   rmse          = sqrt(mean((d - g)^2))      [meters]
//   irmse         = sqrt(mean((1000/g - 1000/d)^2))  [1/km]
// computed over the joint valid mask, g restricted to
// [min_depth, max_depth].
struct DepthMetrics {
  double abs_error_rel = 0.0;
  double sq_error_rel = 0.0;
  double irmse = 0.0;
  double rmse = 0.0;
  std::uint64_t valid_pixel_count = 0;
  double scale_factor = 1.0;
};

// Bilinear resize with align-corners endpoint mapping. A target pixel is
// valid only when every source pixel contributing nonzero weight is valid;
// depth is never invented across sparse ground-truth boundaries.
DepthMap ResizeDepth(const DepthMap& map, int target_width, int target_height);

struct ScaleMatchResult {
  DepthMap scaled;
  double scale = 1.0;
};

// Per-image median scale matching: returns pred * (median(gt) / median(pred))
// with both medians taken over the joint valid mask (gt restricted to
// [min_depth, max_depth]). Throws kData on an empty joint mask ("no
// overlapping valid pixels") or a non-positive prediction median
// ("degenerate prediction").
ScaleMatchResult ScaleMatch(const DepthMap& pred, const DepthMap& gt,
                            double min_depth, double max_depth);

// Metrics over the joint valid mask; see DepthMetrics for definitions.
// scale_factor is left at 1; callers that scale-matched first overwrite it.
DepthMetrics ComputeDepthMetrics(const DepthMap& pred_scaled,
                                 const DepthMap& gt,
                                 const DepthEvalConfig& config);

}  // namespace saves

#endif  // SAVES_DEPTH_EVAL_HPP_
