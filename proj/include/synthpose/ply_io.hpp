#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "synthpose/error.hpp"
#include "synthpose/mesh.hpp"
#include "synthpose/pointcloud.hpp"

namespace synthpose {
namespace ply {

enum class ScalarType { i8, u8, i16, u16, i32, u32, f32, f64 };

inline std::size_t scalar_size(ScalarType t) {
  switch (t) {
    case ScalarType::i8:
    case ScalarType::u8: return 1;
    case ScalarType::i16:
    case ScalarType::u16: return 2;
    case ScalarType::i32:
    case ScalarType::u32:
    case ScalarType::f32: return 4;
    case ScalarType::f64: return 8;
  }
  return 0;
}

inline ScalarType parse_scalar_type(const std::string& token, const std::string& path) {
  if (token == "char" || token == "int8") return ScalarType::i8;
  if (token == "uchar" || token == "uint8") return ScalarType::u8;
  if (token == "short" || token == "int16") return ScalarType::i16;
  if (token == "ushort" || token == "uint16") return ScalarType::u16;
  if (token == "int" || token == "int32") return ScalarType::i32;
  if (token == "uint" || token == "uint32") return ScalarType::u32;
  if (token == "float" || token == "float32") return ScalarType::f32;
  if (token == "double" || token == "float64") return ScalarType::f64;
  throw_error(ErrorKind::MalformedFile, path + ": unknown PLY type '" + token + "'");
}

struct Property {
  std::string name;
  bool is_list = false;
  ScalarType count_type = ScalarType::u8;
  ScalarType value_type = ScalarType::f32;
};

struct Element {
  std::string name;
  std::size_t count = 0;
  std::vector<Property> properties;
};

struct Header {
  std::vector<Element> elements;
  std::size_t body_offset = 0;
};

class BodyReader {
 public:
  BodyReader(const std::string& data, std::size_t offset, std::string path)
      : data_(data), pos_(offset), path_(std::move(path)) {}

  double read_scalar(ScalarType t) {
    const std::size_t n = scalar_size(t);
    if (pos_ + n > data_.size()) {
      throw_error(ErrorKind::CorruptPayload, path_ + ": truncated PLY body");
    }
    const char* p = data_.data() + pos_;
    pos_ += n;
    switch (t) {
      case ScalarType::i8: { std::int8_t v; std::memcpy(&v, p, 1); return v; }
      case ScalarType::u8: { std::uint8_t v; std::memcpy(&v, p, 1); return v; }
      case ScalarType::i16: { std::int16_t v; std::memcpy(&v, p, 2); return v; }
      case ScalarType::u16: { std::uint16_t v; std::memcpy(&v, p, 2); return v; }
      case ScalarType::i32: { std::int32_t v; std::memcpy(&v, p, 4); return v; }
      case ScalarType::u32: { std::uint32_t v; std::memcpy(&v, p, 4); return v; }
      case ScalarType::f32: { float v; std::memcpy(&v, p, 4); return v; }
      case ScalarType::f64: { double v; std::memcpy(&v, p, 8); return v; }
    }
    return 0.0;
  }

 private:
  const std::string& data_;
  std::size_t pos_;
  std::string path_;
};

inline std::string read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw_error(ErrorKind::FileNotFound, "cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Header parse_header(const std::string& data, const std::string& path) {
  const std::string magic = "end_header\n";
  std::size_t end = data.find(magic);
  if (data.rfind("ply", 0) != 0 || end == std::string::npos) {
    throw_error(ErrorKind::MalformedFile, path + ": not a PLY file");
  }
  Header header;
  header.body_offset = end + magic.size();

  std::istringstream lines(data.substr(0, end));
  std::string line;
  bool format_ok = false;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "format") {
      std::string fmt;
      ls >> fmt;
      if (fmt != "binary_little_endian") {
        throw_error(ErrorKind::MalformedFile,
                    path + ": unsupported PLY format '" + fmt + "'");
      }
      format_ok = true;
    } else if (tok == "element") {
      Element e;
      ls >> e.name >> e.count;
      header.elements.push_back(e);
    } else if (tok == "property") {
      if (header.elements.empty()) {
        throw_error(ErrorKind::MalformedFile, path + ": property before element");
      }
      std::string t1;
      ls >> t1;
      Property p;
      if (t1 == "list") {
        std::string ct, vt;
        ls >> ct >> vt >> p.name;
        p.is_list = true;
        p.count_type = parse_scalar_type(ct, path);
        p.value_type = parse_scalar_type(vt, path);
      } else {
        p.value_type = parse_scalar_type(t1, path);
        ls >> p.name;
      }
      header.elements.back().properties.push_back(p);
    }
  }
  if (!format_ok) {
    throw_error(ErrorKind::MalformedFile, path + ": missing PLY format line");
  }
  return header;
}

struct MeshAndCloud {
  std::vector<Vec3> points;
  std::vector<std::array<std::uint32_t, 3>> faces;
};

// Reads vertex positions and (optionally) triangulated faces from a binary
// little-endian PLY. Faces with more than 3 vertices are fan-triangulated.
inline MeshAndCloud read_ply(const std::filesystem::path& path) {
  const std::string data = read_file_bytes(path);
  const std::string name = path.string();
  Header header = parse_header(data, name);
  BodyReader body(data, header.body_offset, name);

  MeshAndCloud out;
  for (const Element& e : header.elements) {
    if (e.name == "vertex") {
      int ix = -1, iy = -1, iz = -1;
      for (std::size_t i = 0; i < e.properties.size(); ++i) {
        if (e.properties[i].name == "x") ix = static_cast<int>(i);
        if (e.properties[i].name == "y") iy = static_cast<int>(i);
        if (e.properties[i].name == "z") iz = static_cast<int>(i);
      }
      if (ix < 0 || iy < 0 || iz < 0) {
        throw_error(ErrorKind::MalformedFile, name + ": vertex element lacks x/y/z");
      }
      out.points.reserve(e.count);
      for (std::size_t v = 0; v < e.count; ++v) {
        Vec3 p = Vec3::Zero();
        for (std::size_t i = 0; i < e.properties.size(); ++i) {
          const Property& prop = e.properties[i];
          if (prop.is_list) {
            std::size_t cnt = static_cast<std::size_t>(body.read_scalar(prop.count_type));
            for (std::size_t k = 0; k < cnt; ++k) body.read_scalar(prop.value_type);
            continue;
          }
          double value = body.read_scalar(prop.value_type);
          if (static_cast<int>(i) == ix) p.x() = value;
          if (static_cast<int>(i) == iy) p.y() = value;
          if (static_cast<int>(i) == iz) p.z() = value;
        }
        out.points.push_back(p);
      }
    } else {
      const bool is_face = e.name == "face";
      for (std::size_t f = 0; f < e.count; ++f) {
        for (const Property& prop : e.properties) {
          if (!prop.is_list) {
            body.read_scalar(prop.value_type);
            continue;
          }
          std::size_t cnt = static_cast<std::size_t>(body.read_scalar(prop.count_type));
          std::vector<std::uint32_t> idx(cnt);
          for (std::size_t k = 0; k < cnt; ++k) {
            idx[k] = static_cast<std::uint32_t>(body.read_scalar(prop.value_type));
          }
          if (is_face &&
              (prop.name == "vertex_indices" || prop.name == "vertex_index")) {
            if (cnt < 3) {
              throw_error(ErrorKind::MalformedFile, name + ": face with < 3 vertices");
            }
            for (std::size_t k = 2; k < cnt; ++k) {
              out.faces.push_back({idx[0], idx[k - 1], idx[k]});
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace ply

inline void write_ply_cloud(const std::filesystem::path& path,
                            const std::vector<Vec3>& points) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw_error(ErrorKind::IoError, "cannot write " + path.string());
  }
  out << "ply\n"
      << "format binary_little_endian 1.0\n"
      << "element vertex " << points.size() << "\n"
      << "property float x\nproperty float y\nproperty float z\n"
      << "end_header\n";
  for (const Vec3& p : points) {
    const float xyz[3] = {static_cast<float>(p.x()), static_cast<float>(p.y()),
                          static_cast<float>(p.z())};
    out.write(reinterpret_cast<const char*>(xyz), sizeof(xyz));
  }
  if (!out) {
    throw_error(ErrorKind::IoError, "write failed for " + path.string());
  }
}

inline PointCloud read_ply_cloud(const std::filesystem::path& path, Frame frame) {
  if (!std::filesystem::exists(path)) {
    throw_error(ErrorKind::MissingFile, path.string());
  }
  ply::MeshAndCloud data = ply::read_ply(path);
  PointCloud cloud;
  cloud.frame = frame;
  cloud.points = std::move(data.points);
  return cloud;
}

}  // namespace synthpose
