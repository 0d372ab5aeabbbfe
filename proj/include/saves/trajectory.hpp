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

#ifndef SAVES_TRAJECTORY_HPP_
#define SAVES_TRAJECTORY_HPP_

#include <string>
#include <vector>

#include "saves/geometry.hpp"

namespace saves {

struct TrajectoryEntry {
  double timestamp = 0.0;  // seconds
  RigidTransform pose;
};

// Time-ordered pose sequence. Timestamps are strictly increasing; evaluation
// operations additionally require at least two entries.
class Trajectory {
 public:
  Trajectory() = default;
  explicit Trajectory(std::string frame_id) : frame_id_(std::move(frame_id)) {}

  // Throws kParse unless the timestamp is strictly greater than the last one.
  void Append(double timestamp, const RigidTransform& pose);

  const std::vector<TrajectoryEntry>& entries() const { return entries_; }
  const TrajectoryEntry& at(std::size_t i) const { return entries_[i]; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const std::string& frame_id() const { return frame_id_; }
  void set_frame_id(std::string frame_id) { frame_id_ = std::move(frame_id); }

  // True when timestamps were synthesized from line numbers (KITTI pose
  // files carry none). Two index-based trajectories associate by index.
  bool index_based() const { return index_based_; }
  void set_index_based(bool index_based) { index_based_ = index_based; }

 private:
  std::string frame_id_;
  std::vector<TrajectoryEntry> entries_;
  bool index_based_ = false;
};

}  // namespace saves

#endif  // SAVES_TRAJECTORY_HPP_
