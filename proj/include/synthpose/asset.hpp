#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "synthpose/error.hpp"
#include "synthpose/geometry.hpp"
#include "synthpose/json_util.hpp"
#include "synthpose/mesh.hpp"
#include "synthpose/mesh_io.hpp"

namespace synthpose {

struct PartAsset {
  TriangleMesh mesh;
  Pose local_transform;  // part frame -> model frame
};

struct ModelAsset {
  std::string category;
  std::string instance_id;
  std::vector<PartAsset> parts;
};

// Componentwise min/max over all part vertices after applying each part's
// local transform.
inline Aabb global_bbox(const ModelAsset& model) {
  Aabb box;
  for (const PartAsset& part : model.parts) {
    for (const Vec3& v : part.mesh.vertices) {
      box.expand(part.local_transform.apply(v));
    }
  }
  return box;
}

inline Scale3 model_scale(const Aabb& bbox) {
  const Vec3 extents = bbox.extents();
  if (!(extents.x() > 0.0 && extents.y() > 0.0 && extents.z() > 0.0)) {
    throw_error(ErrorKind::DegenerateExtent,
                "bbox extents (" + std::to_string(extents.x()) + ", " +
                    std::to_string(extents.y()) + ", " + std::to_string(extents.z()) +
                    ") must all be positive");
  }
  return Scale3::from_vec(extents);
}

// All parts baked into a single mesh in the model frame.
inline TriangleMesh merged_model_mesh(const ModelAsset& model) {
  TriangleMesh merged;
  for (const PartAsset& part : model.parts) {
    merged.append(part.mesh.transformed(part.local_transform));
  }
  return merged;
}

// Model manifest schema:
//   {
//     "category": "...", "instance_id": "...",
//     "unit_scale": 1.0,                      // optional, meters per unit
//     "parts": [{"mesh_path": "...",          // relative to the manifest
//                "transform": {"quat_wxyz": [w,x,y,z], "translation": [x,y,z]}}]
//   }
inline ModelAsset load_model(const std::filesystem::path& manifest_path) {
  if (!std::filesystem::exists(manifest_path)) {
    throw_error(ErrorKind::FileNotFound, manifest_path.string());
  }
  Json j;
  try {
    j = parse_json_file(manifest_path);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CorruptPayload) {
      throw_error(ErrorKind::MalformedFile, e.what());
    }
    throw;
  }
  const std::string context = manifest_path.string();
  if (!j.contains("category") || !j.contains("instance_id") || !j.contains("parts")) {
    throw_error(ErrorKind::MalformedFile,
                context + ": manifest needs category, instance_id, parts");
  }
  ModelAsset model;
  model.category = j["category"].get<std::string>();
  model.instance_id = j["instance_id"].get<std::string>();
  if (model.category.empty() || model.instance_id.empty()) {
    throw_error(ErrorKind::MalformedFile, context + ": empty category or instance_id");
  }
  const double unit_scale = j.value("unit_scale", 1.0);
  if (!(unit_scale > 0.0)) {
    throw_error(ErrorKind::MalformedFile, context + ": unit_scale must be positive");
  }

  const std::filesystem::path base = manifest_path.parent_path();
  for (const Json& part_json : j["parts"]) {
    PartAsset part;
    std::filesystem::path mesh_path = part_json.at("mesh_path").get<std::string>();
    if (mesh_path.is_relative()) mesh_path = base / mesh_path;
    part.mesh = load_mesh(mesh_path);
    if (unit_scale != 1.0) part.mesh = part.mesh.scaled(unit_scale);
    if (part_json.contains("transform")) {
      try {
        part.local_transform = pose_from_json(part_json["transform"], context);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::SchemaMismatch) {
          throw_error(ErrorKind::MalformedFile, e.what());
        }
        throw;
      }
      if (unit_scale != 1.0) part.local_transform.translation *= unit_scale;
    }
    model.parts.push_back(std::move(part));
  }
  if (model.parts.empty()) {
    throw_error(ErrorKind::MalformedFile, context + ": model has no parts");
  }
  return model;
}

inline void save_model_manifest(const std::filesystem::path& manifest_path,
                                const std::string& category,
                                const std::string& instance_id,
                                const std::vector<std::pair<std::string, Pose>>& parts) {
  Json j;
  j["category"] = category;
  j["instance_id"] = instance_id;
  j["parts"] = Json::array();
  for (const auto& [mesh_path, transform] : parts) {
    Json p;
    p["mesh_path"] = mesh_path;
    p["transform"] = json_from_pose(transform);
    j["parts"].push_back(p);
  }
  write_json_file(manifest_path, j);
}

}  // namespace synthpose
