#pragma once

#include <Eigen/Dense>

namespace objslam {

using ProjectionMatrix = Eigen::Matrix<double, 3, 4>;

/// Pinhole camera intrinsics. No distortion model.
struct CameraIntrinsics {
  double fx = 0.0;
  double fy = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  int width = 0;
  int height = 0;

  Eigen::Matrix3d matrix() const {
    Eigen::Matrix3d k = Eigen::Matrix3d::Identity();
    k(0, 0) = fx;
    k(1, 1) = fy;
    k(0, 2) = cx;
    k(1, 2) = cy;
    return k;
  }

  /// Unit-norm viewing ray in the camera frame through a pixel.
  Eigen::Vector3d bearing(const Eigen::Vector2d& pixel) const {
    Eigen::Vector3d d((pixel.x() - cx) / fx, (pixel.y() - cy) / fy, 1.0);
    return d.normalized();
  }

  Eigen::Vector2d project(const Eigen::Vector3d& p_cam) const {
    return {fx * p_cam.x() / p_cam.z() + cx, fy * p_cam.y() / p_cam.z() + cy};
  }

  bool contains(const Eigen::Vector2d& pixel, double margin = 0.0) const {
    return pixel.x() >= -margin && pixel.x() <= width + margin &&
           pixel.y() >= -margin && pixel.y() <= height + margin;
  }

  bool valid() const { return fx > 0 && fy > 0 && width > 0 && height > 0; }
};

/// Rigid world-to-camera transform: x_cam = R * x_world + t.
struct Pose {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  Eigen::Vector3d apply(const Eigen::Vector3d& x_world) const {
    return rotation * x_world + translation;
  }

  /// Camera center expressed in world coordinates.
  Eigen::Vector3d center() const { return -rotation.transpose() * translation; }

  Pose inverse() const {
    return {rotation.transpose(), -rotation.transpose() * translation};
  }

  Eigen::Matrix<double, 3, 4> matrix34() const {
    Eigen::Matrix<double, 3, 4> m;
    m.leftCols<3>() = rotation;
    m.col(3) = translation;
    return m;
  }

  /// Checks orthonormality and det(R)=1 within tol.
  bool valid(double tol = 1e-9) const {
    const Eigen::Matrix3d rtr = rotation.transpose() * rotation;
    return (rtr - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <= tol &&
           std::abs(rotation.determinant() - 1.0) <= tol;
  }
};

inline ProjectionMatrix projection_matrix(const CameraIntrinsics& intr, const Pose& pose) {
  return intr.matrix() * pose.matrix34();
}

/// Geodesic distance between two rotations, in radians.
inline double rotation_angle_between(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
  const double c = ((a.transpose() * b).trace() - 1.0) / 2.0;
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace objslam
