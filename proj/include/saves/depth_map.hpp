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

#ifndef SAVES_DEPTH_MAP_HPP_
#define SAVES_DEPTH_MAP_HPP_

#include <cstdint>
#include <vector>

namespace saves {

// Dense 2D grid of metric depths with a validity mask. Depths are meters,
// row major, origin at the top-left pixel. Every valid pixel holds a finite
// positive value; invalid pixels are ignored by all consumers.
class DepthMap {
 public:
  // All-invalid map of the given size. Throws kInvalidArgument on
  // non-positive dimensions.
  DepthMap(int width, int height);

  // Takes ownership of the buffers; enforces the validity invariant.
  DepthMap(int width, int height, std::vector<double> values,
           std::vector<std::uint8_t> valid);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return values_.size(); }

  double ValueAt(int x, int y) const { return values_[Index(x, y)]; }
  bool IsValid(int x, int y) const { return valid_[Index(x, y)] != 0; }

  // Marks (x, y) valid with the given depth. Throws kInvalidArgument unless
  // depth is finite and > 0.
  void Set(int x, int y, double depth);
  void SetInvalid(int x, int y);

  std::size_t Index(int x, int y) const {
    return static_cast<std::size_t>(y) * width_ + x;
  }

  std::size_t ValidCount() const;

  const std::vector<double>& values() const { return values_; }
  const std::vector<std::uint8_t>& valid() const { return valid_; }

  // Depths of all valid pixels in row-major order.
  std::vector<double> ValidValues() const;

  bool HasSameDimensions(const DepthMap& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

 private:
  int width_;
  int height_;
  std::vector<double> values_;
  std::vector<std::uint8_t> valid_;
};

}  // namespace saves

#endif  // SAVES_DEPTH_MAP_HPP_
