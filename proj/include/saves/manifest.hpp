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

#ifndef SAVES_MANIFEST_HPP_
#define SAVES_MANIFEST_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "saves/geometry.hpp"

namespace saves {

// One sensor frame. Paths are stored as written in the manifest file and
// resolved against the manifest's directory, so a manifest can be moved
// together with its data.
struct ManifestFrame {
  std::string frame_id;
  double timestamp = 0.0;
  std::optional<std::string> rgb_path;
  std::optional<std::string> pred_depth_path;
  std::optional<std::string> gt_depth_path;
  std::optional<std::string> cloud_path;
  // Overrides the manifest-wide label, so one manifest can mix datasets.
  std::optional<std::string> dataset_label;
};

// Dataset-agnostic frame index: the intermediate format every evaluator
// consumes. Serialized as a UTF-8 JSON document with a versioned schema;
// unknown keys are ignored for forward compatibility.
struct Manifest {
  static constexpr int kSchemaVersion = 1;

  std::string dataset_label = "unnamed";
  bool has_intrinsics = false;
  CameraIntrinsics intrinsics;
  RigidTransform cam_from_lidar;  // identity unless stated
  std::optional<std::string> ref_trajectory_path;
  std::vector<ManifestFrame> frames;

  // Directory the manifest was loaded from (or will be saved to); not
  // serialized.
  std::filesystem::path base_dir;

  std::filesystem::path Resolve(const std::string& relative_or_absolute) const;
  const std::string& EffectiveLabel(const ManifestFrame& frame) const;

  // Structural checks: unique frame ids, nondecreasing timestamps,
  // intrinsics present when any frame exists. Throws kData.
  void Validate() const;
};

// Loads, validates, and checks that every referenced path exists (dangling
// paths throw kIo naming the path).
Manifest LoadManifest(const std::string& path);

// Parses and validates without touching the filesystem. `base_dir` seeds
// path resolution for later existence checks.
Manifest ParseManifest(const std::string& json_text,
                       const std::filesystem::path& base_dir,
                       const std::string& name);

void SaveManifest(const Manifest& manifest, const std::string& path);
std::string SerializeManifest(const Manifest& manifest);

}  // namespace saves

#endif  // SAVES_MANIFEST_HPP_
