#pragma once

#include <cstdint>
#include <initializer_list>

#include "synthpose/geometry.hpp"

namespace synthpose {

// Counter-based generator (splitmix64). Output sequences depend only on the
// seeding key, never on platform or standard-library internals, so streams
// keyed on (seed, index...) reproduce bitwise everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Derives an independent stream from a seed and a list of stream ids
  // (e.g. view index, instance index).
  static Rng stream(std::uint64_t seed, std::initializer_list<std::uint64_t> ids) {
    std::uint64_t s = mix(seed ^ 0x6a09e667f3bcc909ULL);
    for (std::uint64_t id : ids) s = mix(s ^ mix(id + 0x9e3779b97f4a7c15ULL));
    return Rng(s);
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  Vec3 uniform_in_box(const Vec3& lo, const Vec3& hi) {
    return Vec3(uniform(lo.x(), hi.x()), uniform(lo.y(), hi.y()),
                uniform(lo.z(), hi.z()));
  }

  // Shoemake's method: uniform over SO(3).
  Quat uniform_rotation() {
    double u1 = uniform(), u2 = uniform(), u3 = uniform();
    double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
    return Quat(a * std::sin(2.0 * kPi * u2), a * std::cos(2.0 * kPi * u2),
                b * std::sin(2.0 * kPi * u3), b * std::cos(2.0 * kPi * u3))
        .normalized();
  }

  Vec3 uniform_unit_vector() {
    double z = uniform(-1.0, 1.0);
    double phi = uniform(0.0, 2.0 * kPi);
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return Vec3(r * std::cos(phi), r * std::sin(phi), z);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

}  // namespace synthpose
