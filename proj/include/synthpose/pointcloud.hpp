#pragma once

#include <vector>

#include "synthpose/geometry.hpp"

namespace synthpose {

enum class Frame { camera, object, canonical };

inline const char* to_string(Frame frame) {
  switch (frame) {
    case Frame::camera: return "camera";
    case Frame::object: return "object";
    case Frame::canonical: return "canonical";
  }
  return "unknown";
}

struct PointCloud {
  std::vector<Vec3> points;
  Frame frame = Frame::object;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }

  Vec3 centroid() const {
    Vec3 c = Vec3::Zero();
    for (const Vec3& p : points) c += p;
    return points.empty() ? c : Vec3(c / static_cast<double>(points.size()));
  }

  Aabb bounds() const {
    Aabb box;
    for (const Vec3& p : points) box.expand(p);
    return box;
  }

  PointCloud transformed(const Pose& pose, Frame new_frame) const {
    PointCloud out;
    out.frame = new_frame;
    out.points.reserve(points.size());
    for (const Vec3& p : points) out.points.push_back(pose.apply(p));
    return out;
  }
};

}  // namespace synthpose
