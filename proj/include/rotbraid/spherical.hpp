#pragma once

#include <array>
#include <vector>

#include "rotbraid/geometry.hpp"
#include "rotbraid/rotation.hpp"

namespace rotbraid {

/// The three marked points: an equilateral triangle on the equator, oriented
/// counterclockwise with normal +z.
std::array<Vec3, 3> base_points();

/// Sampled trace of three strands x_i(t) = (1 - t/2) omega(t)(x0_i) on
/// spheres shrinking from radius 1 to 1/2.
struct SphericalBraid {
  std::vector<double> times;                  // 0 = t_0 < ... < t_N = 1
  std::array<std::vector<Vec3>, 3> strands;   // strands[i][k] at times[k]

  std::size_t sample_count() const { return times.size(); }
};

/// Samples adaptively so consecutive orientation deltas stay below max_step
/// radians (default 0.05, about 126 samples per full turn). Requires a
/// closed path.
SphericalBraid trace(const RotationPath& p, double max_step = 0.05);

/// Orthonormal right-handed frame attached to a nondegenerate triangle:
/// e1 points from the centroid to the first vertex, e3 is the positively
/// oriented normal, e2 completes the frame. Equivariant under rotations.
struct TriangleFrame {
  Vec3 e1, e2, e3;

  Mat3 to_matrix() const {
    return {{{e1.x, e2.x, e3.x}, {e1.y, e2.y, e3.y}, {e1.z, e2.z, e3.z}}};
  }
};

TriangleFrame frame_of_triangle(const Vec3& p1, const Vec3& p2, const Vec3& p3);

/// Recovers a rotation path from a spherical braid anchored at the base
/// configuration, one axis-angle segment per consecutive sample pair. Exact
/// for rigid traces; well-defined for any braid with nondegenerate sample
/// triangles.
RotationPath reconstruct_path(const SphericalBraid& sb);

}  // namespace rotbraid
