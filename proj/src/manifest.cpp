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

#include "saves/manifest.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "saves/error.hpp"

namespace saves {

namespace {

using nlohmann::json;

double RequireFiniteNumber(const json& node, const std::string& context) {
  if (!node.is_number()) {
    ThrowParse(context + " must be a number");
  }
  const double value = node.get<double>();
  if (!std::isfinite(value)) {
    ThrowParse(context + " must be finite");
  }
  return value;
}

std::optional<std::string> OptionalString(const json& object,
                                          const char* key) {
  const auto it = object.find(key);
  if (it == object.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    ThrowParse(std::string("manifest field '") + key + "' must be a string");
  }
  return it->get<std::string>();
}

CameraIntrinsics ParseIntrinsics(const json& node) {
  if (!node.is_object()) {
    ThrowParse("manifest intrinsics must be an object");
  }
  CameraIntrinsics k;
  k.fx = RequireFiniteNumber(node.at("fx"), "intrinsics.fx");
  k.fy = RequireFiniteNumber(node.at("fy"), "intrinsics.fy");
  k.cx = RequireFiniteNumber(node.at("cx"), "intrinsics.cx");
  k.cy = RequireFiniteNumber(node.at("cy"), "intrinsics.cy");
  k.width = static_cast<int>(
      RequireFiniteNumber(node.at("width"), "intrinsics.width"));
  k.height = static_cast<int>(
      RequireFiniteNumber(node.at("height"), "intrinsics.height"));
  k.Validate();
  return k;
}

RigidTransform ParseExtrinsic(const json& node) {
  if (!node.is_object()) {
    ThrowParse("manifest cam_from_lidar must be an object");
  }
  const auto& q = node.at("rotation_wxyz");
  const auto& t = node.at("translation_xyz");
  if (!q.is_array() || q.size() != 4 || !t.is_array() || t.size() != 3) {
    ThrowParse("cam_from_lidar expects rotation_wxyz[4] and "
               "translation_xyz[3]");
  }
  const Eigen::Quaterniond rotation(
      RequireFiniteNumber(q[0], "rotation_wxyz[0]"),
      RequireFiniteNumber(q[1], "rotation_wxyz[1]"),
      RequireFiniteNumber(q[2], "rotation_wxyz[2]"),
      RequireFiniteNumber(q[3], "rotation_wxyz[3]"));
  const Eigen::Vector3d translation(
      RequireFiniteNumber(t[0], "translation_xyz[0]"),
      RequireFiniteNumber(t[1], "translation_xyz[1]"),
      RequireFiniteNumber(t[2], "translation_xyz[2]"));
  try {
    return RigidTransform(rotation, translation);
  } catch (const Error& e) {
    ThrowParse(std::string("cam_from_lidar: ") + e.what());
  }
}

}  // namespace

std::filesystem::path Manifest::Resolve(
    const std::string& relative_or_absolute) const {
  const std::filesystem::path p(relative_or_absolute);
  if (p.is_absolute()) return p;
  return base_dir / p;
}

const std::string& Manifest::EffectiveLabel(const ManifestFrame& frame) const {
  return frame.dataset_label ? *frame.dataset_label : dataset_label;
}

void Manifest::Validate() const {
  std::set<std::string> seen;
  double last_timestamp = 0.0;
  bool have_last = false;
  for (const ManifestFrame& frame : frames) {
    if (frame.frame_id.empty()) {
      ThrowData("manifest frame with empty frame_id");
    }
    if (!seen.insert(frame.frame_id).second) {
      ThrowData("duplicate frame_id \"" + frame.frame_id + "\"");
    }
    if (!std::isfinite(frame.timestamp)) {
      ThrowData("non-finite timestamp in frame \"" + frame.frame_id + "\"");
    }
    if (have_last && frame.timestamp < last_timestamp) {
      ThrowData("timestamps decrease at frame \"" + frame.frame_id + "\"");
    }
    last_timestamp = frame.timestamp;
    have_last = true;
  }
  if (!frames.empty() && !has_intrinsics) {
    ThrowData("missing intrinsics");
  }
  if (has_intrinsics) {
    intrinsics.Validate();
  }
}

Manifest ParseManifest(const std::string& json_text,
                       const std::filesystem::path& base_dir,
                       const std::string& name) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    ThrowParse(name + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object()) {
    ThrowParse(name + ": manifest root must be an object");
  }

  try {
    Manifest manifest;
    manifest.base_dir = base_dir;
    if (const auto it = doc.find("schema_version"); it != doc.end()) {
      if (!it->is_number_integer() || it->get<int>() < 1) {
        ThrowParse("schema_version must be a positive integer");
      }
    }
    if (const auto label = OptionalString(doc, "dataset_label")) {
      manifest.dataset_label = *label;
    }
    if (const auto it = doc.find("intrinsics");
        it != doc.end() && !it->is_null()) {
      manifest.intrinsics = ParseIntrinsics(*it);
      manifest.has_intrinsics = true;
    }
    if (const auto it = doc.find("cam_from_lidar");
        it != doc.end() && !it->is_null()) {
      manifest.cam_from_lidar = ParseExtrinsic(*it);
    }
    manifest.ref_trajectory_path = OptionalString(doc, "ref_trajectory_path");

    if (const auto it = doc.find("frames"); it != doc.end()) {
      if (!it->is_array()) {
        ThrowParse("manifest frames must be an array");
      }
      for (const json& node : *it) {
        if (!node.is_object()) {
          ThrowParse("manifest frame entries must be objects");
        }
        ManifestFrame frame;
        const auto id = OptionalString(node, "frame_id");
        if (!id) {
          ThrowParse("manifest frame missing frame_id");
        }
        frame.frame_id = *id;
        frame.timestamp = RequireFiniteNumber(
            node.at("timestamp"), "frame \"" + frame.frame_id + "\" timestamp");
        frame.rgb_path = OptionalString(node, "rgb_path");
        frame.pred_depth_path = OptionalString(node, "pred_depth_path");
        frame.gt_depth_path = OptionalString(node, "gt_depth_path");
        frame.cloud_path = OptionalString(node, "cloud_path");
        frame.dataset_label = OptionalString(node, "dataset_label");
        manifest.frames.push_back(std::move(frame));
      }
    }
    manifest.Validate();
    return manifest;
  } catch (const json::exception& e) {
    ThrowParse(name + ": " + e.what());
  }
}

Manifest LoadManifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    ThrowIo("not found: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::filesystem::path manifest_path(path);
  Manifest manifest = ParseManifest(
      buffer.str(), manifest_path.has_parent_path()
                        ? manifest_path.parent_path()
                        : std::filesystem::path("."),
      path);

  auto check_exists = [&](const std::optional<std::string>& p) {
    if (!p) return;
    const std::filesystem::path resolved = manifest.Resolve(*p);
    if (!std::filesystem::exists(resolved)) {
      ThrowIo("dangling path: " + resolved.string());
    }
  };
  for (const ManifestFrame& frame : manifest.frames) {
    check_exists(frame.rgb_path);
    check_exists(frame.pred_depth_path);
    check_exists(frame.gt_depth_path);
    check_exists(frame.cloud_path);
  }
  check_exists(manifest.ref_trajectory_path);
  return manifest;
}

std::string SerializeManifest(const Manifest& manifest) {
  json doc;
  doc["schema_version"] = Manifest::kSchemaVersion;
  doc["dataset_label"] = manifest.dataset_label;
  if (manifest.has_intrinsics) {
    doc["intrinsics"] = {{"fx", manifest.intrinsics.fx},
                         {"fy", manifest.intrinsics.fy},
                         {"cx", manifest.intrinsics.cx},
                         {"cy", manifest.intrinsics.cy},
                         {"width", manifest.intrinsics.width},
                         {"height", manifest.intrinsics.height}};
  }
  const Eigen::Quaterniond& q = manifest.cam_from_lidar.rotation();
  const Eigen::Vector3d& t = manifest.cam_from_lidar.translation();
  if (!manifest.cam_from_lidar.IsApprox(RigidTransform::Identity(), 0.0)) {
    doc["cam_from_lidar"] = {
        {"rotation_wxyz", {q.w(), q.x(), q.y(), q.z()}},
        {"translation_xyz", {t.x(), t.y(), t.z()}}};
  }
  if (manifest.ref_trajectory_path) {
    doc["ref_trajectory_path"] = *manifest.ref_trajectory_path;
  }
  doc["frames"] = json::array();
  for (const ManifestFrame& frame : manifest.frames) {
    json node;
    node["frame_id"] = frame.frame_id;
    node["timestamp"] = frame.timestamp;
    if (frame.rgb_path) node["rgb_path"] = *frame.rgb_path;
    if (frame.pred_depth_path) node["pred_depth_path"] = *frame.pred_depth_path;
    if (frame.gt_depth_path) node["gt_depth_path"] = *frame.gt_depth_path;
    if (frame.cloud_path) node["cloud_path"] = *frame.cloud_path;
    if (frame.dataset_label) node["dataset_label"] = *frame.dataset_label;
    doc["frames"].push_back(std::move(node));
  }
  return doc.dump(2) + "\n";
}

void SaveManifest(const Manifest& manifest, const std::string& path) {
  manifest.Validate();
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    ThrowIo("cannot open for writing: " + path);
  }
  out << SerializeManifest(manifest);
  if (!out) {
    ThrowIo("write failed: " + path);
  }
}

}  // namespace saves
