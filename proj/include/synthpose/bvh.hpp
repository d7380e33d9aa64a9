#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "synthpose/geometry.hpp"
#include "synthpose/mesh.hpp"

namespace synthpose {

struct Ray {
  Vec3 origin;
  Vec3 dir;  // need not be unit length; hit.t is in units of |dir|
};

struct RayHit {
  double t = std::numeric_limits<double>::infinity();
  std::uint32_t triangle = std::numeric_limits<std::uint32_t>::max();
  double bary_u = 0.0;
  double bary_v = 0.0;

  bool valid() const { return triangle != std::numeric_limits<std::uint32_t>::max(); }

  // Strict ordering so brute force and accelerated traversal agree exactly:
  // smaller t wins, ties broken by triangle index.
  bool improves(double other_t, std::uint32_t other_tri) const {
    return other_t < t || (other_t == t && other_tri < triangle);
  }
};

// Möller–Trumbore, double precision, both faces intersected.
inline bool intersect_triangle(const Ray& ray, const Vec3& a, const Vec3& b,
                               const Vec3& c, double& t, double& u, double& v) {
  const Vec3 e1 = b - a;
  const Vec3 e2 = c - a;
  const Vec3 pvec = ray.dir.cross(e2);
  const double det = e1.dot(pvec);
  if (std::abs(det) < 1e-16) return false;
  const double inv_det = 1.0 / det;
  const Vec3 tvec = ray.origin - a;
  u = tvec.dot(pvec) * inv_det;
  if (u < 0.0 || u > 1.0) return false;
  const Vec3 qvec = tvec.cross(e1);
  v = ray.dir.dot(qvec) * inv_det;
  if (v < 0.0 || u + v > 1.0) return false;
  t = e2.dot(qvec) * inv_det;
  return true;
}

inline RayHit brute_force_hit(const TriangleMesh& mesh, const Ray& ray,
                              double tmin, double tmax) {
  RayHit best;
  for (std::uint32_t f = 0; f < mesh.faces.size(); ++f) {
    double t, u, v;
    if (intersect_triangle(ray, mesh.face_vertex(f, 0), mesh.face_vertex(f, 1),
                           mesh.face_vertex(f, 2), t, u, v) &&
        t >= tmin && t <= tmax && best.improves(t, f)) {
      best = RayHit{t, f, u, v};
    }
  }
  return best;
}

// Closest point on a triangle (Ericson, Real-Time Collision Detection 5.1.5).
inline Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b,
                                      const Vec3& c) {
  const Vec3 ab = b - a, ac = c - a, ap = p - a;
  const double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) return a;

  const Vec3 bp = p - b;
  const double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) return b;

  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) return a + ab * (d1 / (d1 - d3));

  const Vec3 cp = p - c;
  const double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) return c;

  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) return a + ac * (d2 / (d2 - d6));

  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    return b + (c - b) * ((d4 - d3) / ((d4 - d3) + (d5 - d6)));
  }

  const double denom = 1.0 / (va + vb + vc);
  return a + ab * (vb * denom) + ac * (vc * denom);
}

inline Vec3 brute_force_closest_point(const TriangleMesh& mesh, const Vec3& p) {
  Vec3 best = Vec3::Zero();
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::uint32_t f = 0; f < mesh.faces.size(); ++f) {
    const Vec3 q = closest_point_on_triangle(p, mesh.face_vertex(f, 0),
                                             mesh.face_vertex(f, 1),
                                             mesh.face_vertex(f, 2));
    const double d2 = (p - q).squaredNorm();
    if (d2 < best_d2) {
      best_d2 = d2;
      best = q;
    }
  }
  return best;
}

// Binary BVH: median split over the longest centroid axis, leaves hold at most
// `leaf_size` triangles. Build and traversal are fully deterministic.
class Bvh {
 public:
  static constexpr std::uint32_t kLeafSize = 4;

  Bvh() = default;

  explicit Bvh(const TriangleMesh& mesh) : mesh_(&mesh) {
    const std::size_t n = mesh.faces.size();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0u);
    centroids_.reserve(n);
    for (std::size_t f = 0; f < n; ++f) {
      centroids_.push_back((mesh.face_vertex(f, 0) + mesh.face_vertex(f, 1) +
                            mesh.face_vertex(f, 2)) / 3.0);
    }
    nodes_.reserve(2 * n);
    if (n > 0) build_node(0, n);
    centroids_.clear();
    centroids_.shrink_to_fit();
  }

  const TriangleMesh& mesh() const { return *mesh_; }

  RayHit hit(const Ray& ray, double tmin, double tmax) const {
    RayHit best;
    if (nodes_.empty()) return best;
    const Vec3 inv_dir = ray.dir.cwiseInverse();
    std::uint32_t stack[64];
    int top = 0;
    stack[top++] = 0;
    while (top > 0) {
      const Node& node = nodes_[stack[--top]];
      const double t_upper = std::min(tmax, best.t);
      if (!slab_hit(node, ray.origin, inv_dir, tmin, t_upper)) continue;
      if (node.count > 0) {
        for (std::uint32_t i = 0; i < node.count; ++i) {
          const std::uint32_t f = order_[node.first + i];
          double t, u, v;
          if (intersect_triangle(ray, mesh_->face_vertex(f, 0),
                                 mesh_->face_vertex(f, 1), mesh_->face_vertex(f, 2),
                                 t, u, v) &&
              t >= tmin && t <= tmax && best.improves(t, f)) {
            best = RayHit{t, f, u, v};
          }
        }
      } else {
        stack[top++] = node.right;
        stack[top++] = node.first;  // near child unordered; correctness from best.t pruning
      }
    }
    return best;
  }

  Vec3 closest_point(const Vec3& p) const {
    Vec3 best = Vec3::Zero();
    double best_d2 = std::numeric_limits<double>::infinity();
    if (!nodes_.empty()) closest_point_rec(0, p, best, best_d2);
    return best;
  }

  double distance(const Vec3& p) const { return (p - closest_point(p)).norm(); }

 private:
  struct Node {
    Vec3 lo, hi;
    std::uint32_t first = 0;  // leaf: first index in order_; inner: left child
    std::uint32_t right = 0;
    std::uint32_t count = 0;  // 0 for inner nodes
  };

  static bool slab_hit(const Node& node, const Vec3& origin, const Vec3& inv_dir,
                       double tmin, double tmax) {
    for (int axis = 0; axis < 3; ++axis) {
      double t0 = (node.lo[axis] - origin[axis]) * inv_dir[axis];
      double t1 = (node.hi[axis] - origin[axis]) * inv_dir[axis];
      if (t0 > t1) std::swap(t0, t1);
      // NaN from 0 * inf (ray parallel, origin on slab boundary) must not
      // shrink the interval.
      if (t0 == t0) tmin = std::max(tmin, t0);
      if (t1 == t1) tmax = std::min(tmax, t1);
      if (tmin > tmax) return false;
    }
    return true;
  }

  double box_distance2(const Node& node, const Vec3& p) const {
    double d2 = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
      const double d = std::max({node.lo[axis] - p[axis], 0.0, p[axis] - node.hi[axis]});
      d2 += d * d;
    }
    return d2;
  }

  void closest_point_rec(std::uint32_t node_idx, const Vec3& p, Vec3& best,
                         double& best_d2) const {
    const Node& node = nodes_[node_idx];
    if (box_distance2(node, p) >= best_d2) return;
    if (node.count > 0) {
      for (std::uint32_t i = 0; i < node.count; ++i) {
        const std::uint32_t f = order_[node.first + i];
        const Vec3 q = closest_point_on_triangle(p, mesh_->face_vertex(f, 0),
                                                 mesh_->face_vertex(f, 1),
                                                 mesh_->face_vertex(f, 2));
        const double d2 = (p - q).squaredNorm();
        if (d2 < best_d2) {
          best_d2 = d2;
          best = q;
        }
      }
      return;
    }
    const double dl = box_distance2(nodes_[node.first], p);
    const double dr = box_distance2(nodes_[node.right], p);
    if (dl <= dr) {
      closest_point_rec(node.first, p, best, best_d2);
      closest_point_rec(node.right, p, best, best_d2);
    } else {
      closest_point_rec(node.right, p, best, best_d2);
      closest_point_rec(node.first, p, best, best_d2);
    }
  }

  std::uint32_t build_node(std::size_t begin, std::size_t end) {
    const std::uint32_t node_idx = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back({});
    Aabb bounds;
    Aabb centroid_bounds;
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint32_t f = order_[i];
      bounds.expand(mesh_->face_vertex(f, 0));
      bounds.expand(mesh_->face_vertex(f, 1));
      bounds.expand(mesh_->face_vertex(f, 2));
      centroid_bounds.expand(centroids_[f]);
    }
    nodes_[node_idx].lo = bounds.min_corner;
    nodes_[node_idx].hi = bounds.max_corner;

    const std::size_t count = end - begin;
    const Vec3 spread = centroid_bounds.extents();
    if (count <= kLeafSize || spread.maxCoeff() <= 0.0) {
      nodes_[node_idx].first = static_cast<std::uint32_t>(begin);
      nodes_[node_idx].count = static_cast<std::uint32_t>(count);
      return node_idx;
    }

    int axis = 0;
    spread.maxCoeff(&axis);
    const std::size_t mid = begin + count / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid,
                     order_.begin() + end,
                     [&](std::uint32_t a, std::uint32_t b) {
                       const double ca = centroids_[a][axis];
                       const double cb = centroids_[b][axis];
                       return ca < cb || (ca == cb && a < b);
                     });

    const std::uint32_t left = build_node(begin, mid);
    const std::uint32_t right = build_node(mid, end);
    nodes_[node_idx].first = left;
    nodes_[node_idx].right = right;
    nodes_[node_idx].count = 0;
    return node_idx;
  }

  const TriangleMesh* mesh_ = nullptr;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> order_;
  std::vector<Vec3> centroids_;
};

}  // namespace synthpose
