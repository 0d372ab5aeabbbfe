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

#include "saves/trajectory_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "saves/error.hpp"
#include "saves/text_format.hpp"

namespace saves {

namespace {

std::vector<std::string> Tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() &&
           std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i >= line.size() || line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

double ParseReal(const std::string& token, const std::string& name, int line) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc() || result.ptr != end ||
      !std::isfinite(value)) {
    ThrowParse(name + ": malformed number '" + token + "' at line " +
               std::to_string(line));
  }
  return value;
}

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    ThrowIo("not found: " + path);
  }
  return in;
}

}  // namespace

Trajectory ParseTrajectoryTum(std::istream& in, const std::string& name) {
  Trajectory trajectory(name);
  std::string line;
  int line_number = 0;
  double last_timestamp = 0.0;
  bool have_last = false;
  while (std::getline(in, line)) {
    ++line_number;
    const std::vector<std::string> tokens = Tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 8) {
      ThrowParse(name + ": expected 8 fields, got " +
                 std::to_string(tokens.size()) + " at line " +
                 std::to_string(line_number));
    }
    double fields[8];
    for (int i = 0; i < 8; ++i) {
      fields[i] = ParseReal(tokens[i], name, line_number);
    }
    if (have_last && fields[0] <= last_timestamp) {
      ThrowParse(name + ": timestamps not increasing at line " +
                 std::to_string(line_number));
    }
    const Eigen::Quaterniond q(fields[7], fields[4], fields[5], fields[6]);
    const Eigen::Vector3d t(fields[1], fields[2], fields[3]);
    try {
      trajectory.Append(fields[0], RigidTransform(q, t));
    } catch (const Error& e) {
      ThrowParse(name + ": " + e.what() + " at line " +
                 std::to_string(line_number));
    }
    last_timestamp = fields[0];
    have_last = true;
  }
  return trajectory;
}

Trajectory ReadTrajectoryTum(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  return ParseTrajectoryTum(in, path);
}

Trajectory ParseTrajectoryKitti(std::istream& in, double frame_period,
                                const std::string& name) {
  if (!(frame_period > 0.0) || !std::isfinite(frame_period)) {
    ThrowInvalidArgument("frame period must be positive");
  }
  Trajectory trajectory(name);
  trajectory.set_index_based(true);
  std::string line;
  int line_number = 0;
  std::size_t index = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::vector<std::string> tokens = Tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 12) {
      ThrowParse(name + ": expected 12 fields, got " +
                 std::to_string(tokens.size()) + " at line " +
                 std::to_string(line_number));
    }
    double fields[12];
    for (int i = 0; i < 12; ++i) {
      fields[i] = ParseReal(tokens[i], name, line_number);
    }
    Eigen::Matrix3d rotation;
    rotation << fields[0], fields[1], fields[2],
                fields[4], fields[5], fields[6],
                fields[8], fields[9], fields[10];
    const Eigen::Vector3d translation(fields[3], fields[7], fields[11]);
    RigidTransform pose;
    try {
      pose = RigidTransform::FromMatrix(rotation, translation);
    } catch (const Error&) {
      ThrowParse(name + ": invalid rotation at line " +
                 std::to_string(line_number));
    }
    trajectory.Append(static_cast<double>(index) * frame_period, pose);
    ++index;
  }
  return trajectory;
}

Trajectory ReadTrajectoryKitti(const std::string& path, double frame_period) {
  std::ifstream in = OpenOrThrow(path);
  return ParseTrajectoryKitti(in, frame_period, path);
}

std::string FormatTrajectoryTum(const Trajectory& trajectory) {
  std::string out = "# timestamp tx ty tz qx qy qz qw\n";
  for (const TrajectoryEntry& entry : trajectory.entries()) {
    const Eigen::Vector3d& t = entry.pose.translation();
    const Eigen::Quaterniond& q = entry.pose.rotation();
    out += FormatDouble(entry.timestamp);
    for (const double v : {t.x(), t.y(), t.z(), q.x(), q.y(), q.z(), q.w()}) {
      out += ' ';
      out += FormatDouble(v);
    }
    out += '\n';
  }
  return out;
}

void WriteTrajectoryTum(const Trajectory& trajectory,
                        const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    ThrowIo("cannot open for writing: " + path);
  }
  out << FormatTrajectoryTum(trajectory);
  if (!out) {
    ThrowIo("write failed: " + path);
  }
}

Trajectory ReadTrajectory(const std::string& path, TrajectoryFormat format,
                          double kitti_frame_period) {
  if (format == TrajectoryFormat::kTum) return ReadTrajectoryTum(path);
  if (format == TrajectoryFormat::kKitti) {
    return ReadTrajectoryKitti(path, kitti_frame_period);
  }
  std::ifstream probe = OpenOrThrow(path);
  std::string line;
  std::size_t fields = 0;
  while (std::getline(probe, line)) {
    const auto tokens = Tokenize(line);
    if (!tokens.empty()) {
      fields = tokens.size();
      break;
    }
  }
  if (fields == 8) return ReadTrajectoryTum(path);
  if (fields == 12) return ReadTrajectoryKitti(path, kitti_frame_period);
  ThrowParse(path + ": cannot detect trajectory format (first data line has " +
             std::to_string(fields) + " fields, expected 8 or 12)");
}

}  // namespace saves
