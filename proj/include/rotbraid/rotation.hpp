#pragma once

#include <vector>

#include "rotbraid/geometry.hpp"
#include "rotbraid/homotopy.hpp"

namespace rotbraid {

/// One constant-axis piece of a rotation path: rotation by `angle` (signed,
/// radians) about the unit vector `axis`.
struct Segment {
  Vec3 axis;
  double angle = 0.0;
};

/// A piecewise-geodesic path omega(t) in SO(3), t in [0,1], starting at the
/// identity. Segments execute in order; each gets a parameter share
/// proportional to |angle| (zero-angle segments all get the same minimal
/// share). Rotations compose in the world frame: later segments act on the
/// result of earlier ones.
class RotationPath {
 public:
  RotationPath() = default;  // constant path at the identity
  explicit RotationPath(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }

  /// Orientation at parameter t in [0,1], as a unit quaternion.
  Quat rotation_quat_at(double t) const;
  Mat3 rotation_at(double t) const { return rotation_quat_at(t).to_matrix(); }

  /// Cumulative parameter shares; share_end(k) is where segment k finishes.
  double share_end(std::size_t k) const { return cumulative_[k]; }

  /// Total rotation amount, sum of |angle|.
  double total_angle() const { return total_angle_; }

 private:
  std::vector<Segment> segments_;
  std::vector<double> cumulative_;   // normalized cumulative shares
  std::vector<Quat> prefix_;         // rotation completed before segment k
  Quat final_;                       // orientation at t = 1
  double total_angle_ = 0.0;
};

/// Validates axes (ZeroAxis for a near-zero axis with nonzero angle) and
/// normalizes them. Closure is not required here; see is_closed.
RotationPath path_from_segments(const std::vector<Segment>& segments);

/// True iff omega(1) differs from the identity by less than tol in the
/// maximum absolute matrix entry.
bool is_closed(const RotationPath& p, double tol = 1e-9);

/// Homotopy class via the quaternion double cover: the ordered product of
/// per-segment half-angle quaternions lands on +1 (trivial) or -1
/// (nontrivial) for a closed path. This route never looks at braids, which
/// is what makes it an independent oracle for the classifier.
HomotopyClass lift_class(const RotationPath& p);

/// Builds a path from sampled orientations via per-step axis-angle deltas.
/// Consecutive deltas must stay below pi/2 so the lift sign is unambiguous.
RotationPath ingest_samples(const std::vector<Quat>& samples);
RotationPath ingest_samples(const std::vector<Mat3>& samples);

/// Concatenation (p1 then p2) and exact reversal; both exact on segments.
RotationPath concat_paths(const RotationPath& p1, const RotationPath& p2);
RotationPath reverse_path(const RotationPath& p);

}  // namespace rotbraid
