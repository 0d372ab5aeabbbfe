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

#include "saves/odom_eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/SVD>

#include "saves/error.hpp"

namespace saves {

void AssociationConfig::Validate() const {
  if (!(max_time_diff > 0.0) || !std::isfinite(max_time_diff) ||
      !std::isfinite(offset)) {
    ThrowInvalidArgument("association requires max_time_diff > 0");
  }
}

namespace {

struct Candidate {
  double time_diff;
  std::size_t ref_index;
  std::size_t est_index;
};

}  // namespace

IndexPairs Associate(const Trajectory& reference, const Trajectory& estimate,
                     const AssociationConfig& config) {
  config.Validate();
  if (reference.empty() || estimate.empty()) {
    ThrowInvalidArgument("association requires nonempty trajectories");
  }

  std::vector<Candidate> candidates;
  // Estimate timestamps are sorted, so scan a window around each reference
  // timestamp instead of the full cross product.
  std::size_t window_start = 0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double target = reference.at(i).timestamp - config.offset;
    while (window_start < estimate.size() &&
           estimate.at(window_start).timestamp < target - config.max_time_diff) {
      ++window_start;
    }
    for (std::size_t j = window_start; j < estimate.size(); ++j) {
      const double diff = estimate.at(j).timestamp - target;
      if (diff > config.max_time_diff) break;
      candidates.push_back(Candidate{std::abs(diff), i, j});
    }
  }

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     if (a.time_diff != b.time_diff) {
                       return a.time_diff < b.time_diff;
                     }
                     if (a.est_index != b.est_index) {
                       return a.est_index < b.est_index;
                     }
                     return a.ref_index < b.ref_index;
                   });

  std::vector<bool> ref_used(reference.size(), false);
  std::vector<bool> est_used(estimate.size(), false);
  std::map<std::size_t, std::size_t> accepted;  // ref index -> est index
  for (const Candidate& c : candidates) {
    if (ref_used[c.ref_index] || est_used[c.est_index]) continue;
    // Reject crossings so both index sequences stay monotonic.
    const auto next = accepted.upper_bound(c.ref_index);
    if (next != accepted.end() && next->second <= c.est_index) continue;
    if (next != accepted.begin() &&
        std::prev(next)->second >= c.est_index) {
      continue;
    }
    accepted.emplace(c.ref_index, c.est_index);
    ref_used[c.ref_index] = true;
    est_used[c.est_index] = true;
  }

  if (accepted.size() < 2) {
    ThrowData("insufficient overlap");
  }
  return IndexPairs(accepted.begin(), accepted.end());
}

IndexPairs AssociateByIndex(const Trajectory& reference,
                            const Trajectory& estimate) {
  const std::size_t n = std::min(reference.size(), estimate.size());
  if (n < 2) {
    ThrowData("insufficient overlap");
  }
  IndexPairs pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, i);
  return pairs;
}

Trajectory AlignOrigin(const Trajectory& reference, const Trajectory& estimate,
                       const IndexPairs& pairs) {
  if (pairs.empty()) {
    ThrowInvalidArgument("origin alignment requires at least one pair");
  }
  const RigidTransform correction =
      reference.at(pairs.front().first).pose *
      estimate.at(pairs.front().second).pose.Inverse();
  Trajectory aligned(estimate.frame_id());
  aligned.set_index_based(estimate.index_based());
  for (const TrajectoryEntry& entry : estimate.entries()) {
    aligned.Append(entry.timestamp, correction * entry.pose);
  }
  return aligned;
}

UmeyamaResult AlignUmeyama(const Trajectory& reference,
                           const Trajectory& estimate, const IndexPairs& pairs,
                           bool with_scale) {
  if (pairs.size() < 3) {
    ThrowInvalidArgument("umeyama alignment requires at least 3 pairs");
  }
  const double n = static_cast<double>(pairs.size());

  Eigen::Vector3d ref_centroid = Eigen::Vector3d::Zero();
  Eigen::Vector3d est_centroid = Eigen::Vector3d::Zero();
  for (const auto& [ri, ei] : pairs) {
    ref_centroid += reference.at(ri).pose.translation();
    est_centroid += estimate.at(ei).pose.translation();
  }
  ref_centroid /= n;
  est_centroid /= n;

  Eigen::Matrix3d covariance = Eigen::Matrix3d::Zero();
  double est_variance = 0.0;
  for (const auto& [ri, ei] : pairs) {
    const Eigen::Vector3d r = reference.at(ri).pose.translation() - ref_centroid;
    const Eigen::Vector3d e = estimate.at(ei).pose.translation() - est_centroid;
    covariance += r * e.transpose();
    est_variance += e.squaredNorm();
  }
  covariance /= n;
  est_variance /= n;

  Eigen::JacobiSVD<Eigen::Matrix3d> svd(
      covariance, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector3d singular_values = svd.singularValues();
  if (!(singular_values(1) > 1e-12 * std::max(singular_values(0), 1e-300))) {
    ThrowData("degenerate point set");
  }

  Eigen::Matrix3d sign_fix = Eigen::Matrix3d::Identity();
  if (svd.matrixU().determinant() * svd.matrixV().determinant() < 0.0) {
    sign_fix(2, 2) = -1.0;
  }
  const Eigen::Matrix3d rotation =
      svd.matrixU() * sign_fix * svd.matrixV().transpose();

  double scale = 1.0;
  if (with_scale) {
    if (!(est_variance > 0.0)) {
      ThrowData("degenerate point set");
    }
    scale = (singular_values.asDiagonal().toDenseMatrix() * sign_fix).trace() /
            est_variance;
    if (!(scale > 0.0) || !std::isfinite(scale)) {
      ThrowData("degenerate point set");
    }
  }
  const Eigen::Vector3d translation = ref_centroid - scale * (rotation * est_centroid);

  const Eigen::Quaterniond rotation_q(rotation);
  Trajectory aligned(estimate.frame_id());
  aligned.set_index_based(estimate.index_based());
  for (const TrajectoryEntry& entry : estimate.entries()) {
    const RigidTransform pose(
        rotation_q * entry.pose.rotation(),
        scale * (rotation * entry.pose.translation()) + translation);
    aligned.Append(entry.timestamp, pose);
  }
  return UmeyamaResult{std::move(aligned),
                       RigidTransform(rotation_q, translation), scale};
}

const char* AlignModeName(AlignMode mode) {
  switch (mode) {
    case AlignMode::kOrigin: return "origin";
    case AlignMode::kUmeyama: return "umeyama";
    case AlignMode::kUmeyamaScale: return "umeyama-scale";
  }
  return "origin";
}

OdomMetrics ComputeApe(const Trajectory& reference,
                       const Trajectory& estimate_aligned,
                       const IndexPairs& pairs) {
  if (pairs.size() < 2) {
    ThrowInvalidArgument("APE requires at least 2 matched poses");
  }
  double squared_error_sum = 0.0;
  for (const auto& [ri, ei] : pairs) {
    squared_error_sum += (reference.at(ri).pose.translation() -
                          estimate_aligned.at(ei).pose.translation())
                             .squaredNorm();
  }
  const double ape_rmse =
      std::sqrt(squared_error_sum / static_cast<double>(pairs.size()));

  double path_length = 0.0;
  for (std::size_t i = pairs.front().first; i < pairs.back().first; ++i) {
    path_length += (reference.at(i + 1).pose.translation() -
                    reference.at(i).pose.translation())
                       .norm();
  }
  if (!(path_length > 0.0)) {
    ThrowData("stationary reference trajectory");
  }

  OdomMetrics metrics;
  metrics.ape_rmse = ape_rmse;
  metrics.ape_percent = 100.0 * ape_rmse / path_length;
  metrics.path_length = path_length;
  metrics.matched_pose_count = pairs.size();
  return metrics;
}

}  // namespace saves
