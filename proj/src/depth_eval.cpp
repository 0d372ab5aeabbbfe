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

#include "saves/depth_eval.hpp"

#include <algorithm>
#include <cmath>

#include "saves/error.hpp"
#include "saves/stats.hpp"

namespace saves {

namespace {

// Joint evaluation mask: both observed and ground truth inside the
// configured range (strictly above max_depth is masked out, exactly
// max_depth is kept).
std::vector<std::uint8_t> JointMask(const DepthMap& pred, const DepthMap& gt,
                                    double min_depth, double max_depth) {
  std::vector<std::uint8_t> mask(gt.size(), 0);
  for (std::size_t i = 0; i < gt.size(); ++i) {
    if (pred.valid()[i] == 0 || gt.valid()[i] == 0) continue;
    const double g = gt.values()[i];
    if (g < min_depth || g > max_depth) continue;
    mask[i] = 1;
  }
  return mask;
}

std::vector<double> MaskedValues(const DepthMap& map,
                                 const std::vector<std::uint8_t>& mask) {
  std::vector<double> out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] != 0) out.push_back(map.values()[i]);
  }
  return out;
}

}  // namespace

void DepthEvalConfig::Validate() const {
  if (!(min_depth > 0.0) || !(max_depth > min_depth) ||
      !std::isfinite(min_depth) || !std::isfinite(max_depth)) {
    ThrowInvalidArgument("depth eval requires 0 < min_depth < max_depth");
  }
}

DepthMap ResizeDepth(const DepthMap& map, int target_width,
                     int target_height) {
  if (target_width <= 0 || target_height <= 0) {
    ThrowInvalidArgument("resize target dimensions must be positive");
  }
  const int sw = map.width();
  const int sh = map.height();
  DepthMap out(target_width, target_height);

  // Align-corners mapping; a singleton target axis collapses onto source 0.
  const double x_step =
      target_width > 1 ? static_cast<double>(sw - 1) / (target_width - 1) : 0.0;
  const double y_step =
      target_height > 1 ? static_cast<double>(sh - 1) / (target_height - 1)
                        : 0.0;

  for (int ty = 0; ty < target_height; ++ty) {
    const double sy = ty * y_step;
    const int y0 = std::min(static_cast<int>(sy), sh - 1);
    const double wy = sy - y0;
    const int y1 = wy > 0.0 ? std::min(y0 + 1, sh - 1) : y0;
    for (int tx = 0; tx < target_width; ++tx) {
      const double sx = tx * x_step;
      const int x0 = std::min(static_cast<int>(sx), sw - 1);
      const double wx = sx - x0;
      const int x1 = wx > 0.0 ? std::min(x0 + 1, sw - 1) : x0;

      const int xs[2] = {x0, x1};
      const int ys[2] = {y0, y1};
      const double x_weights[2] = {1.0 - wx, wx};
      const double y_weights[2] = {1.0 - wy, wy};

      double value = 0.0;
      double weight_sum = 0.0;
      bool all_contributors_valid = true;
      for (int j = 0; j < 2 && all_contributors_valid; ++j) {
        for (int i = 0; i < 2; ++i) {
          const double weight = x_weights[i] * y_weights[j];
          if (weight <= 0.0) continue;
          if (i == 1 && xs[1] == xs[0]) continue;
          if (j == 1 && ys[1] == ys[0]) continue;
          if (!map.IsValid(xs[i], ys[j])) {
            all_contributors_valid = false;
            break;
          }
          value += weight * map.ValueAt(xs[i], ys[j]);
          weight_sum += weight;
        }
      }
      if (all_contributors_valid && weight_sum > 0.0) {
        out.Set(tx, ty, value / weight_sum);
      }
    }
  }
  return out;
}

ScaleMatchResult ScaleMatch(const DepthMap& pred, const DepthMap& gt,
                            double min_depth, double max_depth) {
  if (!pred.HasSameDimensions(gt)) {
    ThrowInvalidArgument("scale match requires equal dimensions");
  }
  const auto mask = JointMask(pred, gt, min_depth, max_depth);
  const std::vector<double> gt_values = MaskedValues(gt, mask);
  if (gt_values.empty()) {
    ThrowData("no overlapping valid pixels");
  }
  const std::vector<double> pred_values = MaskedValues(pred, mask);
  const double gt_median = Median(gt_values);
  const double pred_median = Median(pred_values);
  if (!(pred_median > 0.0)) {
    ThrowData("degenerate prediction");
  }
  const double scale = gt_median / pred_median;

  std::vector<double> scaled_values = pred.values();
  for (std::size_t i = 0; i < scaled_values.size(); ++i) {
    if (pred.valid()[i] != 0) scaled_values[i] *= scale;
  }
  return ScaleMatchResult{
      DepthMap(pred.width(), pred.height(), std::move(scaled_values),
               pred.valid()),
      scale};
}

DepthMetrics ComputeDepthMetrics(const DepthMap& pred_scaled,
                                 const DepthMap& gt,
                                 const DepthEvalConfig& config) {
  config.Validate();
  if (!pred_scaled.HasSameDimensions(gt)) {
    ThrowInvalidArgument("metric computation requires equal dimensions");
  }
  const auto mask =
      JointMask(pred_scaled, gt, config.min_depth, config.max_depth);

  double abs_rel_sum = 0.0;
  double sq_rel_sum = 0.0;
  double sq_sum = 0.0;
  double inv_sq_sum = 0.0;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] == 0) continue;
    const double g = gt.values()[i];
    double d = pred_scaled.values()[i];
    if (config.clamp_pred) {
      d = std::clamp(d, config.min_depth, config.max_depth);
    }
    const double error = d - g;
    abs_rel_sum += std::abs(error) / g;
    sq_rel_sum += error * error / g;
    sq_sum += error * error;
    const double inv_error = 1000.0 / g - 1000.0 / d;
    inv_sq_sum += inv_error * inv_error;
    ++count;
  }
  if (count == 0) {
    ThrowData("no overlapping valid pixels");
  }
  const double n = static_cast<double>(count);
  DepthMetrics metrics;
  metrics.abs_error_rel = abs_rel_sum / n;
  metrics.sq_error_rel = sq_rel_sum / n;
  metrics.rmse = std::sqrt(sq_sum / n);
  metrics.irmse = std::sqrt(inv_sq_sum / n);
  metrics.valid_pixel_count = count;
  return metrics;
}

}  // namespace saves
