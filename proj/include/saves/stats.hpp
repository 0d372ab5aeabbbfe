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

#ifndef SAVES_STATS_HPP_
#define SAVES_STATS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "saves/depth_map.hpp"

namespace saves {

// Median of a nonempty sample. Even-length inputs return the lower of the
// two central elements, so the result is always an observed value (the scale
// factor stays a ratio of actual depths). Throws kData on empty input.
double Median(std::vector<double> values);

// Percentile with the linear-interpolation convention: rank q/100 * (n - 1),
// interpolated between the surrounding order statistics. `sorted` must be
// ascending and nonempty.
double PercentileSorted(const std::vector<double>& sorted, double q);

struct DepthStatsSummary {
  std::uint64_t count = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double p10 = 0.0;
  double p25 = 0.0;
  double p50 = 0.0;
  double p75 = 0.0;
  double p90 = 0.0;
  double p99 = 0.0;
  // Mean of all values >= p90 (ties included, so a constant sample reports
  // the constant).
  double mean_above_p90 = 0.0;
  // True when the sketch path produced the percentiles.
  bool approximate = false;
};

// Streaming accumulator over valid depth pixels. Values are kept exactly up
// to `exact_cap`; beyond that the buffer collapses into a 65536-bin
// histogram over [0, hi) whose range doubles on overflow, which bounds the
// quantile error by hi / 65536 <= 2 * max / 65536, i.e. well under 0.5 % of
// the observed range for depths above a centimeter. In exact mode all
// statistics are computed from the sorted buffer and are therefore
// independent of insertion order.
class DepthStatsAccumulator {
 public:
  static constexpr std::size_t kDefaultExactCap = std::size_t{1} << 23;
  static constexpr std::size_t kBinCount = 1 << 16;

  explicit DepthStatsAccumulator(std::size_t exact_cap = kDefaultExactCap);

  void Add(double depth);
  void AddMap(const DepthMap& map);

  std::uint64_t count() const { return count_; }
  bool empty() const { return count_ == 0; }

  // Throws kData when no valid pixel was accumulated.
  DepthStatsSummary Summarize() const;

 private:
  void CollapseToHistogram();
  void AddToHistogram(double depth);
  std::size_t BinOf(double depth) const;

  std::size_t exact_cap_;
  std::uint64_t count_ = 0;
  double min_ = 0.0;
  double max_ = 0.0;
  std::vector<double> exact_;
  bool sketching_ = false;
  double hi_ = 256.0;  // histogram upper bound, doubles as needed
  std::vector<std::uint64_t> bin_counts_;
  std::vector<double> bin_sums_;
};

}  // namespace saves

#endif  // SAVES_STATS_HPP_
