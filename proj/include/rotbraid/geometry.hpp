#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

namespace rotbraid {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const { return *this / norm(); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

using Mat3 = std::array<std::array<double, 3>, 3>;

/// Angle between two nonzero vectors, in [0, pi].
inline double angle_between(const Vec3& a, const Vec3& b) {
  double c = a.dot(b) / (a.norm() * b.norm());
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return std::acos(c);
}

/// Unit quaternion (w, x, y, z); q and -q represent the same rotation.
struct Quat {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  static Quat identity() { return {}; }

  static Quat from_axis_angle(const Vec3& unit_axis, double angle) {
    double h = 0.5 * angle;
    double s = std::sin(h);
    return {std::cos(h), s * unit_axis.x, s * unit_axis.y, s * unit_axis.z};
  }

  Quat operator*(const Quat& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }

  Quat conj() const { return {w, -x, -y, -z}; }

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

  Quat normalized() const {
    double n = norm();
    return {w / n, x / n, y / n, z / n};
  }

  Vec3 rotate(const Vec3& v) const {
    Vec3 u{x, y, z};
    Vec3 t = u.cross(v) * 2.0;
    return v + t * w + u.cross(t);
  }

  Mat3 to_matrix() const {
    Mat3 m;
    m[0] = {1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)};
    m[1] = {2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)};
    m[2] = {2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)};
    return m;
  }

  /// Rotation angle in [0, pi] for the representative with w >= 0.
  double rotation_angle() const {
    double vn = std::sqrt(x * x + y * y + z * z);
    return 2.0 * std::atan2(vn, std::fabs(w));
  }
};

/// Shepperd-style matrix-to-quaternion conversion; assumes m is a rotation.
Quat quat_from_matrix(const Mat3& m);

/// Max absolute entrywise difference from the identity matrix.
inline double matrix_identity_error(const Mat3& m) {
  double e = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double d = std::fabs(m[i][j] - (i == j ? 1.0 : 0.0));
      if (d > e) e = d;
    }
  return e;
}

/// Deterministic PRNG. mt19937_64 is bit-stable across platforms; the
/// double/normal derivations are done by hand so results do not depend on
/// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Standard normal via Box-Muller.
  double normal();

  /// Uniform direction on the unit sphere.
  Vec3 unit_vector();

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace rotbraid
