#pragma once

#include <cstdint>
#include <vector>

#include "synthpose/geometry.hpp"
#include "synthpose/mesh.hpp"

namespace synthpose {

// Procedural fixture meshes. Every primitive is modeled with its axis-aligned
// bounding box centered at the origin.

inline TriangleMesh make_box(double ex, double ey, double ez) {
  TriangleMesh m;
  const double x = ex * 0.5, y = ey * 0.5, z = ez * 0.5;
  m.vertices = {{-x, -y, -z}, {x, -y, -z}, {x, y, -z}, {-x, y, -z},
                {-x, -y, z},  {x, -y, z},  {x, y, z},  {-x, y, z}};
  m.faces = {{0, 2, 1}, {0, 3, 2},   // -z
             {4, 5, 6}, {4, 6, 7},   // +z
             {0, 1, 5}, {0, 5, 4},   // -y
             {2, 3, 7}, {2, 7, 6},   // +y
             {1, 2, 6}, {1, 6, 5},   // +x
             {3, 0, 4}, {3, 4, 7}};  // -x
  return m;
}

// Right-triangular prism with legs ex, ey extruded along z: a scalene choice
// of (ex, ey, ez) has no proper rotational symmetry.
inline TriangleMesh make_wedge(double ex, double ey, double ez) {
  TriangleMesh m;
  const double z = ez * 0.5;
  const Vec3 shift(ex * 0.5, ey * 0.5, 0.0);
  std::vector<Vec3> base = {{0.0, 0.0, 0.0}, {ex, 0.0, 0.0}, {0.0, ey, 0.0}};
  for (const Vec3& b : base) m.vertices.emplace_back(b - shift + Vec3(0, 0, -z));
  for (const Vec3& b : base) m.vertices.emplace_back(b - shift + Vec3(0, 0, z));
  m.faces = {{0, 2, 1},             // bottom cap
             {3, 4, 5},             // top cap
             {0, 1, 4}, {0, 4, 3},  // y = 0 wall
             {2, 0, 3}, {2, 3, 5},  // x = 0 wall
             {1, 2, 5}, {1, 5, 4}}; // hypotenuse wall
  return m;
}

// L-shaped prism: outer extents (ex, ey, ez), leg thicknesses (tx, ty).
inline TriangleMesh make_lblock(double ex, double ey, double ez, double tx, double ty) {
  TriangleMesh m;
  const double z = ez * 0.5;
  const Vec3 shift(ex * 0.5, ey * 0.5, 0.0);
  // Counter-clockwise outline; index 3 is the inner corner, from which the
  // polygon is star-shaped.
  std::vector<Vec3> outline = {{0.0, 0.0, 0.0}, {ex, 0.0, 0.0}, {ex, ty, 0.0},
                               {tx, ty, 0.0},   {tx, ey, 0.0},  {0.0, ey, 0.0}};
  for (const Vec3& p : outline) m.vertices.emplace_back(p - shift + Vec3(0, 0, -z));
  for (const Vec3& p : outline) m.vertices.emplace_back(p - shift + Vec3(0, 0, z));
  const std::uint32_t n = 6;
  const std::uint32_t fan[4][2] = {{4, 5}, {5, 0}, {0, 1}, {1, 2}};
  for (const auto& e : fan) {
    m.faces.push_back({3, e[1], e[0]});  // bottom cap (faces -z)
    m.faces.push_back({3 + n, e[0] + n, e[1] + n});
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t j = (i + 1) % n;
    m.faces.push_back({i, j, j + n});
    m.faces.push_back({i, j + n, i + n});
  }
  return m;
}

// Staircase of `steps` boxes; asymmetric along x and z.
inline TriangleMesh make_stairs(int steps, double ex, double ey, double ez) {
  TriangleMesh m;
  const double run = ex / steps;
  const double rise = ez / steps;
  for (int s = 0; s < steps; ++s) {
    TriangleMesh step = make_box(ex - s * run, ey, rise);
    const Vec3 offset(-0.5 * s * run, 0.0, rise * (s + 0.5) - ez * 0.5);
    m.append(step.transformed(Pose::from_translation(offset)));
  }
  return m;
}

inline TriangleMesh make_uv_sphere(double radius, int slices = 48, int stacks = 24) {
  TriangleMesh m;
  for (int st = 0; st <= stacks; ++st) {
    const double phi = kPi * st / stacks;
    for (int sl = 0; sl < slices; ++sl) {
      const double theta = 2.0 * kPi * sl / slices;
      m.vertices.emplace_back(radius * std::sin(phi) * std::cos(theta),
                              radius * std::sin(phi) * std::sin(theta),
                              radius * std::cos(phi));
    }
  }
  auto idx = [slices](int st, int sl) {
    return static_cast<std::uint32_t>(st * slices + (sl % slices));
  };
  for (int st = 0; st < stacks; ++st) {
    for (int sl = 0; sl < slices; ++sl) {
      const auto a = idx(st, sl), b = idx(st, sl + 1);
      const auto c = idx(st + 1, sl), d = idx(st + 1, sl + 1);
      if (st > 0) m.faces.push_back({a, b, d});
      if (st + 1 < stacks) m.faces.push_back({a, d, c});
    }
  }
  return m;
}

inline TriangleMesh make_cylinder(double radius, double height, int segments = 48) {
  TriangleMesh m;
  const double z = height * 0.5;
  for (int i = 0; i < segments; ++i) {
    const double theta = 2.0 * kPi * i / segments;
    const double x = radius * std::cos(theta), y = radius * std::sin(theta);
    m.vertices.emplace_back(x, y, -z);
    m.vertices.emplace_back(x, y, z);
  }
  const std::uint32_t bottom_center = static_cast<std::uint32_t>(m.vertices.size());
  m.vertices.emplace_back(0.0, 0.0, -z);
  const std::uint32_t top_center = bottom_center + 1;
  m.vertices.emplace_back(0.0, 0.0, z);
  for (int i = 0; i < segments; ++i) {
    const std::uint32_t a = 2 * i;
    const std::uint32_t b = 2 * ((i + 1) % segments);
    m.faces.push_back({a, b, b + 1});
    m.faces.push_back({a, b + 1, a + 1});
    m.faces.push_back({bottom_center, b, a});
    m.faces.push_back({top_center, a + 1, b + 1});
  }
  return m;
}

// Cylindrical body with a narrower neck; rotationally symmetric about z.
inline TriangleMesh make_bottle(double body_radius, double body_height,
                                double neck_radius, double neck_height,
                                int segments = 48) {
  const double total = body_height + neck_height;
  TriangleMesh body = make_cylinder(body_radius, body_height, segments);
  TriangleMesh neck = make_cylinder(neck_radius, neck_height, segments);
  TriangleMesh m;
  m.append(body.transformed(
      Pose::from_translation(Vec3(0, 0, body_height * 0.5 - total * 0.5))));
  m.append(neck.transformed(
      Pose::from_translation(Vec3(0, 0, body_height + neck_height * 0.5 - total * 0.5))));
  return m;
}

}  // namespace synthpose
