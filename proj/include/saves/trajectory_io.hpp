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

#ifndef SAVES_TRAJECTORY_IO_HPP_
#define SAVES_TRAJECTORY_IO_HPP_

#include <iosfwd>
#include <string>

#include "saves/trajectory.hpp"

namespace saves {

// TUM text format: one pose per line, "timestamp tx ty tz qx qy qz qw",
// whitespace separated, '#' starts a comment. Quaternions are renormalized;
// timestamps must be strictly increasing. Parse errors name the line.
Trajectory ReadTrajectoryTum(const std::string& path);
Trajectory ParseTrajectoryTum(std::istream& in, const std::string& name);

// KITTI pose format: 12 reals per line forming a row-major 3x4 matrix, no
// timestamps. Timestamps are synthesized as line_index * frame_period and the
// trajectory is flagged index-based. Rotation blocks within 1e-3 of
// orthonormal are projected to the nearest rotation; worse ones raise
// "invalid rotation at line N".
Trajectory ReadTrajectoryKitti(const std::string& path, double frame_period);
Trajectory ParseTrajectoryKitti(std::istream& in, double frame_period,
                                const std::string& name);

// Writes TUM format with shortest round-trip number formatting, so
// write-then-read reproduces the trajectory exactly.
void WriteTrajectoryTum(const Trajectory& trajectory, const std::string& path);
std::string FormatTrajectoryTum(const Trajectory& trajectory);

enum class TrajectoryFormat { kAuto, kTum, kKitti };

// kAuto resolves by counting fields on the first data line (8 -> TUM,
// 12 -> KITTI).
Trajectory ReadTrajectory(const std::string& path, TrajectoryFormat format,
                          double kitti_frame_period);

}  // namespace saves

#endif  // SAVES_TRAJECTORY_IO_HPP_
