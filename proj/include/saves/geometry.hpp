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

#ifndef SAVES_GEOMETRY_HPP_
#define SAVES_GEOMETRY_HPP_

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace saves {

// Rigid body transform in SE(3), stored as unit quaternion + translation.
// Matrices appear only at I/O boundaries; the quaternion is renormalized on
// construction so long composition chains do not drift.
class RigidTransform {
 public:
  RigidTransform()
      : rotation_(Eigen::Quaterniond::Identity()),
        translation_(Eigen::Vector3d::Zero()) {}

  // Throws kInvalidArgument on a near-zero or non-finite quaternion.
  RigidTransform(const Eigen::Quaterniond& rotation,
                 const Eigen::Vector3d& translation);

  static RigidTransform Identity() { return RigidTransform(); }

  // Builds from a 3x3 rotation block and translation. If the block deviates
  // from orthonormality by less than `tolerance` (max-norm of R^T R - I and
  // |det - 1|) it is projected to the nearest rotation; beyond that the call
  // throws kParse.
  static RigidTransform FromMatrix(const Eigen::Matrix3d& rotation,
                                   const Eigen::Vector3d& translation,
                                   double tolerance = 1e-3);

  Eigen::Matrix4d ToMatrix() const;

  const Eigen::Quaterniond& rotation() const { return rotation_; }
  const Eigen::Vector3d& translation() const { return translation_; }

  // Composition: (a * b) applies b first, then a.
  RigidTransform operator*(const RigidTransform& other) const;

  RigidTransform Inverse() const;

  Eigen::Vector3d Apply(const Eigen::Vector3d& point) const {
    return rotation_ * point + translation_;
  }

  bool IsApprox(const RigidTransform& other, double tolerance = 1e-9) const;

 private:
  Eigen::Quaterniond rotation_;
  Eigen::Vector3d translation_;
};

RigidTransform Compose(const RigidTransform& a, const RigidTransform& b);

// Pinhole camera model. Simulator cameras are distortion free, so no lens
// coefficients are carried.
struct CameraIntrinsics {
  double fx = 0.0;
  double fy = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  int width = 0;
  int height = 0;

  // Throws kInvalidArgument unless fx, fy > 0 and width, height > 0.
  void Validate() const;
};

}  // namespace saves

#endif  // SAVES_GEOMETRY_HPP_
