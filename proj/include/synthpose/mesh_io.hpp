#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "synthpose/error.hpp"
#include "synthpose/mesh.hpp"
#include "synthpose/ply_io.hpp"

namespace synthpose {

namespace detail {

// OBJ face fields look like "7", "7/1", "7//3", "7/1/3"; only the vertex
// index matters here. Indices are 1-based; negative values count from the end.
inline std::uint32_t resolve_obj_index(const std::string& field,
                                       std::size_t vertex_count,
                                       const std::string& path, int line_no) {
  std::string token = field.substr(0, field.find('/'));
  long idx = 0;
  auto result = std::from_chars(token.data(), token.data() + token.size(), idx);
  if (result.ec != std::errc() || result.ptr != token.data() + token.size() || idx == 0) {
    throw_error(ErrorKind::MalformedFile,
                path + ":" + std::to_string(line_no) + ": bad face index '" + field + "'");
  }
  long resolved = idx > 0 ? idx - 1 : static_cast<long>(vertex_count) + idx;
  if (resolved < 0 || resolved >= static_cast<long>(vertex_count)) {
    throw_error(ErrorKind::MalformedFile,
                path + ":" + std::to_string(line_no) + ": face index " +
                    std::to_string(idx) + " out of range for " +
                    std::to_string(vertex_count) + " vertices");
  }
  return static_cast<std::uint32_t>(resolved);
}

}  // namespace detail

inline TriangleMesh load_obj(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw_error(ErrorKind::FileNotFound, "cannot open " + path.string());
  }
  TriangleMesh mesh;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      double x, y, z;
      if (!(ls >> x >> y >> z)) {
        throw_error(ErrorKind::MalformedFile,
                    path.string() + ":" + std::to_string(line_no) + ": bad vertex line");
      }
      mesh.vertices.emplace_back(x, y, z);
    } else if (tag == "f") {
      std::vector<std::uint32_t> idx;
      std::string field;
      while (ls >> field) {
        idx.push_back(detail::resolve_obj_index(field, mesh.vertices.size(),
                                                path.string(), line_no));
      }
      if (idx.size() < 3) {
        throw_error(ErrorKind::MalformedFile,
                    path.string() + ":" + std::to_string(line_no) + ": face with < 3 vertices");
      }
      for (std::size_t k = 2; k < idx.size(); ++k) {
        mesh.faces.push_back({idx[0], idx[k - 1], idx[k]});
      }
    }
    // vn / vt / usemtl / o / g / s lines are ignored.
  }
  validate_mesh(mesh, path.string());
  return mesh;
}

inline TriangleMesh load_ply_mesh(const std::filesystem::path& path) {
  ply::MeshAndCloud data = [&] {
    try {
      return ply::read_ply(path);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::CorruptPayload) {
        throw_error(ErrorKind::MalformedFile, e.what());
      }
      throw;
    }
  }();
  TriangleMesh mesh;
  mesh.vertices = std::move(data.points);
  mesh.faces = std::move(data.faces);
  validate_mesh(mesh, path.string());
  return mesh;
}

// Loads a triangle mesh from OBJ or binary little-endian PLY, picked by
// file extension. Vertex order is preserved from the file.
inline TriangleMesh load_mesh(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw_error(ErrorKind::FileNotFound, path.string());
  }
  std::string ext = path.extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (ext == ".obj") return load_obj(path);
  if (ext == ".ply") return load_ply_mesh(path);
  throw_error(ErrorKind::MalformedFile, path.string() + ": unsupported mesh format '" + ext + "'");
}

inline void save_obj(const std::filesystem::path& path, const TriangleMesh& mesh) {
  std::ofstream out(path);
  if (!out) {
    throw_error(ErrorKind::IoError, "cannot write " + path.string());
  }
  out.precision(9);
  for (const Vec3& v : mesh.vertices) {
    out << "v " << v.x() << " " << v.y() << " " << v.z() << "\n";
  }
  for (const auto& f : mesh.faces) {
    out << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
  }
  if (!out) {
    throw_error(ErrorKind::IoError, "write failed for " + path.string());
  }
}

}  // namespace synthpose
