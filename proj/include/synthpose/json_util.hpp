#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "synthpose/error.hpp"
#include "synthpose/geometry.hpp"

namespace synthpose {

// Key order is preserved so serialized files are canonical byte-for-byte.
using Json = nlohmann::ordered_json;

// Rounds to 9 significant digits through the decimal representation, so a
// written value parses back to exactly the double that was serialized.
inline double quantize9(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return std::strtod(buf, nullptr);
}

inline Json json_from_vec3(const Vec3& v) {
  return Json::array({quantize9(v.x()), quantize9(v.y()), quantize9(v.z())});
}

inline Vec3 vec3_from_json(const Json& j, const std::string& context) {
  if (!j.is_array() || j.size() != 3) {
    throw_error(ErrorKind::SchemaMismatch, context + ": expected [x, y, z]");
  }
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

inline Json json_from_pose(const Pose& pose) {
  Json j;
  j["quat_wxyz"] = Json::array({quantize9(pose.rotation.w()), quantize9(pose.rotation.x()),
                                quantize9(pose.rotation.y()), quantize9(pose.rotation.z())});
  j["translation"] = json_from_vec3(pose.translation);
  return j;
}

// Accepts quaternions within `norm_tol` of unit length and renormalizes;
// anything further off is a schema violation, not drift.
inline Pose pose_from_json(const Json& j, const std::string& context,
                           double norm_tol = 1e-6) {
  if (!j.contains("quat_wxyz") || !j.contains("translation")) {
    throw_error(ErrorKind::SchemaMismatch,
                context + ": pose needs quat_wxyz and translation");
  }
  const Json& q = j["quat_wxyz"];
  if (!q.is_array() || q.size() != 4) {
    throw_error(ErrorKind::SchemaMismatch, context + ": quat_wxyz must be [w,x,y,z]");
  }
  Quat quat(q[0].get<double>(), q[1].get<double>(), q[2].get<double>(),
            q[3].get<double>());
  if (std::abs(quat.norm() - 1.0) > norm_tol) {
    throw_error(ErrorKind::SchemaMismatch,
                context + ": quaternion norm " + std::to_string(quat.norm()) +
                    " is not unit");
  }
  Pose pose;
  pose.rotation = quat.normalized();
  pose.translation = vec3_from_json(j["translation"], context);
  return pose;
}

inline Json parse_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw_error(ErrorKind::MissingFile, path.string());
  }
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) {
    throw_error(ErrorKind::CorruptPayload, path.string() + ": invalid JSON");
  }
  return j;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw_error(ErrorKind::IoError, "cannot write " + path.string());
  }
  out << text;
  if (!out) {
    throw_error(ErrorKind::IoError, "write failed for " + path.string());
  }
}

inline void write_json_file(const std::filesystem::path& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace synthpose
