#pragma once

#include <cstdint>
#include <vector>

#include "synthpose/error.hpp"
#include "synthpose/geometry.hpp"
#include "synthpose/rng.hpp"

namespace synthpose {

// Camera convention: right-handed, +Z forward along the optical axis,
// +X right and +Y down in the image. Camera poses are camera-to-world.

// Deterministic golden-angle lattice:
//   z_i = 1 - 2(i + 0.5)/n,  r_i = sqrt(1 - z_i^2),  theta_i = i * pi * (3 - sqrt(5))
inline std::vector<Vec3> fibonacci_sphere(std::size_t n) {
  if (n == 0) {
    throw_error(ErrorKind::InvalidCount, "fibonacci_sphere needs n >= 1");
  }
  const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
  std::vector<Vec3> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double theta = static_cast<double>(i) * golden_angle;
    points.emplace_back(r * std::cos(theta), r * std::sin(theta), z);
  }
  return points;
}

// Orients the camera at `position` toward `target`. If the view direction is
// within 1e-6 of parallel to up_hint, falls back to (0,0,1) and then (1,0,0).
inline Pose look_at_pose(const Vec3& position, const Vec3& target,
                         const Vec3& up_hint = Vec3(0.0, 1.0, 0.0)) {
  const Vec3 delta = target - position;
  if (delta.norm() == 0.0) {
    throw_error(ErrorKind::InvalidConfig, "look_at: position equals target");
  }
  const Vec3 forward = delta.normalized();

  Vec3 up = up_hint.normalized();
  if (std::abs(forward.dot(up)) > 1.0 - 1e-6) up = Vec3(0.0, 0.0, 1.0);
  if (std::abs(forward.dot(up)) > 1.0 - 1e-6) up = Vec3(1.0, 0.0, 0.0);

  const Vec3 right = forward.cross(up).normalized();
  const Vec3 down = forward.cross(right);  // +Y is image-down

  Mat3 r;
  r.col(0) = right;
  r.col(1) = down;
  r.col(2) = forward;
  return Pose::from_rotation(r, position);
}

// Rotates the camera about its own optical axis; the viewpoint stays fixed.
inline Pose apply_inplane_roll(const Pose& pose, double angle) {
  Pose roll = Pose::from_axis_angle(Vec3(0.0, 0.0, 1.0), angle);
  return pose.compose(roll);
}

// Instance pose of an object sitting at the world origin, expressed in the
// camera frame: the inverse of the camera-to-world pose.
inline Pose instance_pose_from_camera(const Pose& camera_pose) {
  return camera_pose.inverse();
}

struct ViewSamplingConfig {
  std::size_t n_views = 30;
  double radius = 1.0;
  double roll_min = 0.0;
  double roll_max = 0.0;
  std::uint64_t rng_seed = 0;
  bool hemisphere_only = false;
};

inline void validate(const ViewSamplingConfig& config) {
  if (config.n_views < 1) {
    throw_error(ErrorKind::InvalidConfig, "n_views must be >= 1");
  }
  if (!(config.radius > 0.0)) {
    throw_error(ErrorKind::InvalidConfig, "radius must be positive");
  }
  if (config.roll_min > config.roll_max || config.roll_min < -kPi ||
      config.roll_max > kPi) {
    throw_error(ErrorKind::InvalidConfig, "roll range must satisfy -pi <= min <= max <= pi");
  }
}

struct ViewSample {
  Pose camera_pose;    // tau: camera-to-world
  Pose instance_pose;  // lambda = tau^-1
};

// Rolls are keyed on (seed, lattice index), so the hemisphere ablation is a
// strict subset of the full-sphere sample for the same config.
inline std::vector<ViewSample> sample_viewpoints(const ViewSamplingConfig& config) {
  validate(config);
  const std::vector<Vec3> directions = fibonacci_sphere(config.n_views);
  std::vector<ViewSample> views;
  views.reserve(directions.size());
  for (std::size_t i = 0; i < directions.size(); ++i) {
    if (config.hemisphere_only && directions[i].z() < 0.0) continue;
    const Vec3 position = config.radius * directions[i];
    Pose camera = look_at_pose(position, Vec3::Zero());
    const double roll =
        Rng::stream(config.rng_seed, {i}).uniform(config.roll_min, config.roll_max);
    camera = apply_inplane_roll(camera, roll);
    views.push_back({camera, instance_pose_from_camera(camera)});
  }
  return views;
}

}  // namespace synthpose
