#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <cmath>
#include <limits>

namespace synthpose {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Quat = Eigen::Quaterniond;

inline constexpr double kPi = 3.14159265358979323846;

inline double deg_from_rad(double rad) { return rad * (180.0 / kPi); }
inline double rad_from_deg(double deg) { return deg * (kPi / 180.0); }

// Rigid transform mapping local coordinates into the parent frame:
// p_parent = R * p_local + t.
struct Pose {
  Quat rotation{1.0, 0.0, 0.0, 0.0};
  Vec3 translation{0.0, 0.0, 0.0};

  static Pose identity() { return Pose{}; }

  static Pose from_rotation(const Mat3& r, const Vec3& t = Vec3::Zero()) {
    return Pose{Quat(r).normalized(), t};
  }

  static Pose from_axis_angle(const Vec3& axis, double angle,
                              const Vec3& t = Vec3::Zero()) {
    return Pose{Quat(Eigen::AngleAxisd(angle, axis.normalized())), t};
  }

  static Pose from_translation(const Vec3& t) {
    return Pose{Quat(1.0, 0.0, 0.0, 0.0), t};
  }

  Mat3 rotation_matrix() const { return rotation.toRotationMatrix(); }

  Mat4 matrix() const {
    Mat4 m = Mat4::Identity();
    m.topLeftCorner<3, 3>() = rotation_matrix();
    m.topRightCorner<3, 1>() = translation;
    return m;
  }

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }

  // this ∘ other: apply `other` first, then this.
  Pose compose(const Pose& other) const {
    return Pose{(rotation * other.rotation).normalized(),
                rotation * other.translation + translation};
  }

  Pose inverse() const {
    Quat inv = rotation.conjugate();
    return Pose{inv, inv * (-translation)};
  }

  bool is_valid(double tol = 1e-9) const {
    return std::abs(rotation.norm() - 1.0) <= tol &&
           translation.allFinite();
  }

  bool approx_equal(const Pose& other, double tol = 1e-9) const {
    // Quaternions q and -q encode the same rotation.
    double qd = std::min((rotation.coeffs() - other.rotation.coeffs()).norm(),
                         (rotation.coeffs() + other.rotation.coeffs()).norm());
    return qd <= tol && (translation - other.translation).norm() <= tol;
  }
};

inline Pose operator*(const Pose& a, const Pose& b) { return a.compose(b); }

// Axis-aligned bounding box; starts empty (inverted corners).
struct Aabb {
  Vec3 min_corner = Vec3::Constant(std::numeric_limits<double>::infinity());
  Vec3 max_corner = Vec3::Constant(-std::numeric_limits<double>::infinity());

  bool empty() const { return (min_corner.array() > max_corner.array()).any(); }

  void expand(const Vec3& p) {
    min_corner = min_corner.cwiseMin(p);
    max_corner = max_corner.cwiseMax(p);
  }

  void merge(const Aabb& other) {
    min_corner = min_corner.cwiseMin(other.min_corner);
    max_corner = max_corner.cwiseMax(other.max_corner);
  }

  bool contains(const Vec3& p, double tol = 0.0) const {
    return (p.array() >= min_corner.array() - tol).all() &&
           (p.array() <= max_corner.array() + tol).all();
  }

  Vec3 center() const { return 0.5 * (min_corner + max_corner); }
  Vec3 extents() const { return max_corner - min_corner; }
  double diagonal() const { return extents().norm(); }
};

// Per-axis metric extents of an object (full widths, meters).
struct Scale3 {
  double sx = 0.0;
  double sy = 0.0;
  double sz = 0.0;

  Vec3 vec() const { return Vec3(sx, sy, sz); }
  double diameter() const { return vec().norm(); }

  static Scale3 from_vec(const Vec3& v) { return Scale3{v.x(), v.y(), v.z()}; }

  bool positive() const { return sx > 0.0 && sy > 0.0 && sz > 0.0; }
};

}  // namespace synthpose
