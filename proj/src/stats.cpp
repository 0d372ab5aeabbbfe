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

#include "saves/stats.hpp"

#include <algorithm>
#include <cmath>

#include "saves/error.hpp"

namespace saves {

double Median(std::vector<double> values) {
  if (values.empty()) {
    ThrowData("empty sample");
  }
  // Lower median: element at index (n - 1) / 2 of the sorted sample.
  const std::size_t k = (values.size() - 1) / 2;
  std::nth_element(values.begin(), values.begin() + k, values.end());
  return values[k];
}

double PercentileSorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) {
    ThrowData("empty sample");
  }
  if (q <= 0.0) return sorted.front();
  if (q >= 100.0) return sorted.back();
  const double rank = q / 100.0 * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(rank);
  const double frac = rank - static_cast<double>(lo);
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

DepthStatsAccumulator::DepthStatsAccumulator(std::size_t exact_cap)
    : exact_cap_(std::max<std::size_t>(exact_cap, 2)) {}

void DepthStatsAccumulator::Add(double depth) {
  if (!std::isfinite(depth) || depth < 0.0) {
    ThrowInvalidArgument("depth statistics require finite non-negative values");
  }
  if (count_ == 0) {
    min_ = depth;
    max_ = depth;
  } else {
    min_ = std::min(min_, depth);
    max_ = std::max(max_, depth);
  }
  ++count_;
  if (!sketching_) {
    exact_.push_back(depth);
    if (exact_.size() > exact_cap_) {
      CollapseToHistogram();
    }
    return;
  }
  AddToHistogram(depth);
}

void DepthStatsAccumulator::AddMap(const DepthMap& map) {
  const auto& values = map.values();
  const auto& valid = map.valid();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (valid[i] != 0) Add(values[i]);
  }
}

void DepthStatsAccumulator::CollapseToHistogram() {
  sketching_ = true;
  while (hi_ <= max_) hi_ *= 2.0;
  bin_counts_.assign(kBinCount, 0);
  bin_sums_.assign(kBinCount, 0.0);
  for (const double v : exact_) AddToHistogram(v);
  exact_.clear();
  exact_.shrink_to_fit();
}

std::size_t DepthStatsAccumulator::BinOf(double depth) const {
  const auto bin = static_cast<std::size_t>(depth / hi_ * kBinCount);
  return std::min(bin, kBinCount - 1);
}

void DepthStatsAccumulator::AddToHistogram(double depth) {
  while (depth >= hi_) {
    // Double the range by merging adjacent bin pairs into the lower half.
    for (std::size_t i = 0; i < kBinCount / 2; ++i) {
      bin_counts_[i] = bin_counts_[2 * i] + bin_counts_[2 * i + 1];
      bin_sums_[i] = bin_sums_[2 * i] + bin_sums_[2 * i + 1];
    }
    std::fill(bin_counts_.begin() + kBinCount / 2, bin_counts_.end(), 0);
    std::fill(bin_sums_.begin() + kBinCount / 2, bin_sums_.end(), 0.0);
    hi_ *= 2.0;
  }
  const std::size_t bin = BinOf(depth);
  bin_counts_[bin] += 1;
  bin_sums_[bin] += depth;
}

namespace {

// Quantile from a histogram: find the bin containing the interpolation rank
// and place the value proportionally inside it.
double HistogramPercentile(const std::vector<std::uint64_t>& counts,
                           double bin_width, std::uint64_t total, double q) {
  const double rank = q / 100.0 * static_cast<double>(total - 1);
  double before = 0.0;
  for (std::size_t b = 0; b < counts.size(); ++b) {
    if (counts[b] == 0) continue;
    const double in_bin = static_cast<double>(counts[b]);
    if (rank < before + in_bin) {
      const double offset = (rank - before + 0.5) / in_bin;
      return (static_cast<double>(b) + std::min(offset, 1.0)) * bin_width;
    }
    before += in_bin;
  }
  return static_cast<double>(counts.size()) * bin_width;
}

}  // namespace

DepthStatsSummary DepthStatsAccumulator::Summarize() const {
  if (count_ == 0) {
    ThrowData("no valid pixels");
  }
  DepthStatsSummary s;
  s.count = count_;
  s.min = min_;
  s.max = max_;

  if (!sketching_) {
    std::vector<double> sorted = exact_;
    std::sort(sorted.begin(), sorted.end());
    double sum = 0.0;
    for (const double v : sorted) sum += v;
    s.mean = sum / static_cast<double>(sorted.size());
    s.p10 = PercentileSorted(sorted, 10.0);
    s.p25 = PercentileSorted(sorted, 25.0);
    s.p50 = PercentileSorted(sorted, 50.0);
    s.p75 = PercentileSorted(sorted, 75.0);
    s.p90 = PercentileSorted(sorted, 90.0);
    s.p99 = PercentileSorted(sorted, 99.0);
    const auto first_at_or_above =
        std::lower_bound(sorted.begin(), sorted.end(), s.p90);
    double above_sum = 0.0;
    std::size_t above_count = 0;
    for (auto it = first_at_or_above; it != sorted.end(); ++it) {
      above_sum += *it;
      ++above_count;
    }
    // p90 <= max, so at least the maximum contributes.
    s.mean_above_p90 = above_sum / static_cast<double>(above_count);
    s.approximate = false;
    return s;
  }

  const double bin_width = hi_ / static_cast<double>(kBinCount);
  double sum = 0.0;
  for (const double v : bin_sums_) sum += v;
  s.mean = sum / static_cast<double>(count_);
  s.p10 = HistogramPercentile(bin_counts_, bin_width, count_, 10.0);
  s.p25 = HistogramPercentile(bin_counts_, bin_width, count_, 25.0);
  s.p50 = HistogramPercentile(bin_counts_, bin_width, count_, 50.0);
  s.p75 = HistogramPercentile(bin_counts_, bin_width, count_, 75.0);
  s.p90 = HistogramPercentile(bin_counts_, bin_width, count_, 90.0);
  s.p99 = HistogramPercentile(bin_counts_, bin_width, count_, 99.0);

  const std::size_t threshold_bin = BinOf(s.p90);
  double above_sum = 0.0;
  double above_count = 0.0;
  for (std::size_t b = threshold_bin; b < kBinCount; ++b) {
    above_sum += bin_sums_[b];
    above_count += static_cast<double>(bin_counts_[b]);
  }
  s.mean_above_p90 = above_count > 0.0 ? above_sum / above_count : s.max;
  s.approximate = true;
  return s;
}

}  // namespace saves
