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

#include "saves/trajectory.hpp"

#include <cmath>
#include <string>

#include "saves/error.hpp"

namespace saves {

void Trajectory::Append(double timestamp, const RigidTransform& pose) {
  if (!std::isfinite(timestamp)) {
    ThrowParse("trajectory timestamp is not finite");
  }
  if (!entries_.empty() && timestamp <= entries_.back().timestamp) {
    ThrowParse("timestamps not increasing at entry " +
               std::to_string(entries_.size() + 1));
  }
  entries_.push_back(TrajectoryEntry{timestamp, pose});
}

}  // namespace saves
