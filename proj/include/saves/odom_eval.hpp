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

#ifndef SAVES_ODOM_EVAL_HPP_
#define SAVES_ODOM_EVAL_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "saves/trajectory.hpp"

namespace saves {

struct AssociationConfig {
  double max_time_diff = 0.01;  // seconds
  double offset = 0.0;          // added to estimate timestamps

  void Validate() const;
};

using IndexPairs = std::vector<std::pair<std::size_t, std::size_t>>;

// Greedy nearest-first timestamp matching: candidate pairs are taken in
// order of ascending |t_ref - (t_est + offset)| (ties toward the earlier
// estimate entry), skipping any candidate that would reuse an entry or cross
// an accepted pair. The result is injective and strictly monotonic in both
// index sequences, sorted by reference index. Fewer than two matches throw
// kData ("insufficient overlap").
IndexPairs Associate(const Trajectory& reference, const Trajectory& estimate,
                     const AssociationConfig& config);

// Index pairing (i, i) for trajectories without a real time axis.
IndexPairs AssociateByIndex(const Trajectory& reference,
                            const Trajectory& estimate);

// Left-multiplies every estimate pose by
//   T = pose_ref(first pair) * pose_est(first pair)^-1,
// making the first matched estimate pose coincide with its reference
// counterpart.
Trajectory AlignOrigin(const Trajectory& reference, const Trajectory& estimate,
                       const IndexPairs& pairs);

struct UmeyamaResult {
  Trajectory aligned;
  RigidTransform transform;
  double scale = 1.0;
};

// Closed-form least-squares alignment over the matched positions (SVD of the
// cross-covariance), optionally with similarity scale. Needs >= 3 matches
// with a rank-2 covariance; degenerate configurations throw kData
// ("degenerate point set").
UmeyamaResult AlignUmeyama(const Trajectory& reference,
                           const Trajectory& estimate, const IndexPairs& pairs,
                           bool with_scale);

enum class AlignMode { kOrigin, kUmeyama, kUmeyamaScale };

const char* AlignModeName(AlignMode mode);

struct OdomMetrics {
  double ape_rmse = 0.0;     // meters
  double ape_percent = 0.0;  // 100 * ape_rmse / path_length
  double path_length = 0.0;  // meters, over the matched reference span
  std::uint64_t matched_pose_count = 0;
  AlignMode alignment_mode = AlignMode::kOrigin;
};

// Translational absolute pose error over the matched pairs:
//   ape_rmse = sqrt(mean ||t_ref - t_est||^2)
// path_length sums consecutive reference segments between the first and last
// matched reference index. A zero-length reference span throws kData
// ("stationary reference trajectory").
OdomMetrics ComputeApe(const Trajectory& reference,
                       const Trajectory& estimate_aligned,
                       const IndexPairs& pairs);

}  // namespace saves

#endif  // SAVES_ODOM_EVAL_HPP_
