#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "synthpose/error.hpp"
#include "synthpose/geometry.hpp"

namespace synthpose {

struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::uint32_t, 3>> faces;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t face_count() const { return faces.size(); }

  Vec3 face_vertex(std::size_t face, int corner) const {
    return vertices[faces[face][corner]];
  }

  double face_area(std::size_t face) const {
    const Vec3& a = vertices[faces[face][0]];
    const Vec3& b = vertices[faces[face][1]];
    const Vec3& c = vertices[faces[face][2]];
    return 0.5 * (b - a).cross(c - a).norm();
  }

  // Unnormalized geometric normal (zero for degenerate faces).
  Vec3 face_normal(std::size_t face) const {
    const Vec3& a = vertices[faces[face][0]];
    const Vec3& b = vertices[faces[face][1]];
    const Vec3& c = vertices[faces[face][2]];
    return (b - a).cross(c - a);
  }

  double surface_area() const {
    double area = 0.0;
    for (std::size_t f = 0; f < faces.size(); ++f) area += face_area(f);
    return area;
  }

  Aabb bounds() const {
    Aabb box;
    for (const Vec3& v : vertices) box.expand(v);
    return box;
  }

  TriangleMesh transformed(const Pose& pose) const {
    TriangleMesh out = *this;
    for (Vec3& v : out.vertices) v = pose.apply(v);
    return out;
  }

  TriangleMesh scaled(double factor) const {
    TriangleMesh out = *this;
    for (Vec3& v : out.vertices) v *= factor;
    return out;
  }

  void append(const TriangleMesh& other) {
    const std::uint32_t base = static_cast<std::uint32_t>(vertices.size());
    vertices.insert(vertices.end(), other.vertices.begin(), other.vertices.end());
    faces.reserve(faces.size() + other.faces.size());
    for (const auto& f : other.faces) {
      faces.push_back({f[0] + base, f[1] + base, f[2] + base});
    }
  }
};

// Enforces the mesh invariants: in-range indices, finite coordinates, and at
// least one face with positive area. Throws on violation.
inline void validate_mesh(const TriangleMesh& mesh, const std::string& context) {
  if (mesh.faces.empty()) {
    throw_error(ErrorKind::EmptyMesh, context + ": mesh has no faces");
  }
  for (const Vec3& v : mesh.vertices) {
    if (!v.allFinite()) {
      throw_error(ErrorKind::MalformedFile, context + ": non-finite vertex");
    }
  }
  const std::uint32_t n = static_cast<std::uint32_t>(mesh.vertices.size());
  for (const auto& f : mesh.faces) {
    if (f[0] >= n || f[1] >= n || f[2] >= n) {
      throw_error(ErrorKind::MalformedFile,
                  context + ": face index out of range (vertex count " +
                      std::to_string(n) + ")");
    }
  }
  bool has_area = false;
  for (std::size_t f = 0; f < mesh.faces.size() && !has_area; ++f) {
    has_area = mesh.face_area(f) > 0.0;
  }
  if (!has_area) {
    throw_error(ErrorKind::EmptyMesh, context + ": all faces degenerate");
  }
}

}  // namespace synthpose
