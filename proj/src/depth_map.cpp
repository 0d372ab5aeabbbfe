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

#include "saves/depth_map.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

#include "saves/error.hpp"

namespace saves {

DepthMap::DepthMap(int width, int height) : width_(width), height_(height) {
  if (width <= 0 || height <= 0) {
    ThrowInvalidArgument("depth map dimensions must be positive");
  }
  const std::size_t n =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  values_.assign(n, 0.0);
  valid_.assign(n, 0);
}

DepthMap::DepthMap(int width, int height, std::vector<double> values,
                   std::vector<std::uint8_t> valid)
    : width_(width), height_(height), values_(std::move(values)),
      valid_(std::move(valid)) {
  if (width <= 0 || height <= 0) {
    ThrowInvalidArgument("depth map dimensions must be positive");
  }
  const std::size_t n =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  if (values_.size() != n || valid_.size() != n) {
    ThrowInvalidArgument("depth map buffers do not match dimensions");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (valid_[i] != 0 && (!std::isfinite(values_[i]) || values_[i] <= 0.0)) {
      ThrowInvalidArgument("valid depth pixels must be finite and positive");
    }
  }
}

void DepthMap::Set(int x, int y, double depth) {
  if (!std::isfinite(depth) || depth <= 0.0) {
    ThrowInvalidArgument("valid depth pixels must be finite and positive");
  }
  const std::size_t i = Index(x, y);
  values_[i] = depth;
  valid_[i] = 1;
}

void DepthMap::SetInvalid(int x, int y) {
  const std::size_t i = Index(x, y);
  values_[i] = 0.0;
  valid_[i] = 0;
}

std::size_t DepthMap::ValidCount() const {
  std::size_t count = 0;
  for (const std::uint8_t v : valid_) count += v != 0 ? 1 : 0;
  return count;
}

std::vector<double> DepthMap::ValidValues() const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (valid_[i] != 0) out.push_back(values_[i]);
  }
  return out;
}

}  // namespace saves
