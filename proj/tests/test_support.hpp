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

#ifndef SAVES_TESTS_TEST_SUPPORT_HPP_
#define SAVES_TESTS_TEST_SUPPORT_HPP_

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "saves/depth_map.hpp"
#include "saves/geometry.hpp"
#include "saves/trajectory.hpp"

namespace saves::testing {

// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<unsigned> counter{0};
    const auto base = std::filesystem::temp_directory_path();
    path_ = base / ("saves_test_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

inline void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

inline RigidTransform RandomTransform(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(-10.0, 10.0);
  Eigen::Quaterniond q(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
  while (q.coeffs().norm() < 1e-6) {
    q = Eigen::Quaterniond(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
  }
  return RigidTransform(
      q, Eigen::Vector3d(uniform(rng), uniform(rng), uniform(rng)));
}

// Random map with depths in [min_depth, max_depth) and the given validity
// ratio; depths are quantized to 1/256 when quantize is set so the map
// round-trips the PNG encoding exactly.
inline DepthMap RandomDepthMap(std::mt19937_64& rng, int width, int height,
                               double min_depth, double max_depth,
                               double valid_ratio, bool quantize = false) {
  std::uniform_real_distribution<double> depth_dist(min_depth, max_depth);
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  DepthMap map(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (keep(rng) >= valid_ratio) continue;
      double depth = depth_dist(rng);
      if (quantize) {
        const double stored = std::round(depth * 256.0);
        if (stored < 1.0) continue;
        depth = stored / 256.0;
      }
      map.Set(x, y, depth);
    }
  }
  return map;
}

}  // namespace saves::testing

#endif  // SAVES_TESTS_TEST_SUPPORT_HPP_
