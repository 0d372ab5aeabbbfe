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

#include "saves/geometry.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "saves/error.hpp"

namespace saves {

namespace {

Eigen::Quaterniond Normalized(const Eigen::Quaterniond& q) {
  const double squared_norm = q.coeffs().squaredNorm();
  if (!std::isfinite(squared_norm) || squared_norm < 1e-24) {
    ThrowInvalidArgument("quaternion norm too small to normalize");
  }
  // Skip the division when already unit so that value round-trips through
  // text formats stay bit-stable.
  if (std::abs(squared_norm - 1.0) < 1e-12) {
    return q;
  }
  Eigen::Quaterniond out = q;
  out.coeffs() /= std::sqrt(squared_norm);
  return out;
}

}  // namespace

RigidTransform::RigidTransform(const Eigen::Quaterniond& rotation,
                               const Eigen::Vector3d& translation)
    : rotation_(Normalized(rotation)), translation_(translation) {
  if (!translation_.allFinite()) {
    ThrowInvalidArgument("translation is not finite");
  }
}

RigidTransform RigidTransform::FromMatrix(const Eigen::Matrix3d& rotation,
                                          const Eigen::Vector3d& translation,
                                          double tolerance) {
  const Eigen::Matrix3d gram = rotation.transpose() * rotation;
  const double ortho_error =
      (gram - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
  const double det_error = std::abs(rotation.determinant() - 1.0);
  if (!rotation.allFinite() || ortho_error >= tolerance ||
      det_error >= tolerance) {
    ThrowParse("matrix block is not a rotation");
  }
  // Nearest rotation under the Frobenius norm.
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(
      rotation, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d projected = svd.matrixU() * svd.matrixV().transpose();
  if (projected.determinant() < 0.0) {
    Eigen::Matrix3d flip = Eigen::Matrix3d::Identity();
    flip(2, 2) = -1.0;
    projected = svd.matrixU() * flip * svd.matrixV().transpose();
  }
  return RigidTransform(Eigen::Quaterniond(projected), translation);
}

Eigen::Matrix4d RigidTransform::ToMatrix() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.topLeftCorner<3, 3>() = rotation_.toRotationMatrix();
  m.topRightCorner<3, 1>() = translation_;
  return m;
}

RigidTransform RigidTransform::operator*(const RigidTransform& other) const {
  return RigidTransform(rotation_ * other.rotation_,
                        rotation_ * other.translation_ + translation_);
}

RigidTransform RigidTransform::Inverse() const {
  const Eigen::Quaterniond inverse_rotation = rotation_.conjugate();
  return RigidTransform(inverse_rotation, inverse_rotation * -translation_);
}

bool RigidTransform::IsApprox(const RigidTransform& other,
                              double tolerance) const {
  // q and -q encode the same rotation.
  const double rotation_distance =
      std::min((rotation_.coeffs() - other.rotation_.coeffs()).norm(),
               (rotation_.coeffs() + other.rotation_.coeffs()).norm());
  return rotation_distance <= tolerance &&
         (translation_ - other.translation_).norm() <= tolerance;
}

RigidTransform Compose(const RigidTransform& a, const RigidTransform& b) {
  return a * b;
}

void CameraIntrinsics::Validate() const {
  if (!(fx > 0.0) || !(fy > 0.0) || !std::isfinite(fx) || !std::isfinite(fy)) {
    ThrowInvalidArgument("focal lengths must be positive");
  }
  if (!std::isfinite(cx) || !std::isfinite(cy)) {
    ThrowInvalidArgument("principal point must be finite");
  }
  if (width <= 0 || height <= 0) {
    ThrowInvalidArgument("image size must be positive");
  }
}

}  // namespace saves
