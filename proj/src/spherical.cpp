#include "rotbraid/spherical.hpp"

#include <algorithm>
#include <cmath>

#include "rotbraid/errors.hpp"

namespace rotbraid {

namespace {

constexpr double kSqrt3Half = 0.86602540378443864676;

}  // namespace

std::array<Vec3, 3> base_points() {
  return {Vec3{1.0, 0.0, 0.0}, Vec3{-0.5, kSqrt3Half, 0.0}, Vec3{-0.5, -kSqrt3Half, 0.0}};
}

SphericalBraid trace(const RotationPath& p, double max_step) {
  if (max_step <= 0.0) throw_error(errc::out_of_range, "max_step must be positive");
  if (!is_closed(p, 1e-9)) throw_error(errc::not_closed, "trace needs a closed path");

  std::vector<double> times = {0.0, 1.0};
  for (std::size_t k = 0; k < p.segments().size(); ++k) {
    double start = k == 0 ? 0.0 : p.share_end(k - 1);
    double share = p.share_end(k) - start;
    double angle = std::fabs(p.segments()[k].angle);
    int steps = std::max(1, static_cast<int>(std::ceil(angle / max_step)));
    for (int s = 0; s <= steps; ++s) times.push_back(start + share * s / steps);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end(),
                          [](double a, double b) { return std::fabs(a - b) < 1e-15; }),
              times.end());
  if (times.back() > 1.0) times.back() = 1.0;

  SphericalBraid sb;
  sb.times = times;
  auto base = base_points();
  for (double t : times) {
    Quat q = p.rotation_quat_at(t);
    double rho = 1.0 - t / 2.0;
    for (int i = 0; i < 3; ++i) sb.strands[i].push_back(q.rotate(base[i]) * rho);
  }
  return sb;
}

TriangleFrame frame_of_triangle(const Vec3& p1, const Vec3& p2, const Vec3& p3) {
  // collinearity check on the directions normalized to the unit sphere
  Vec3 d1 = p1.normalized(), d2 = p2.normalized(), d3 = p3.normalized();
  double area = 0.5 * (d2 - d1).cross(d3 - d1).norm();
  if (area < 1e-9) throw_error(errc::degenerate_triangle, "triangle is collinear");

  Vec3 centroid = (p1 + p2 + p3) / 3.0;
  Vec3 l = p1 - centroid;
  if (l.norm() < 1e-12) throw_error(errc::degenerate_triangle, "vertex at centroid");
  Vec3 e1 = l.normalized();
  Vec3 e3 = (p2 - p1).cross(p3 - p1).normalized();
  e3 = (e3 - e1 * e3.dot(e1)).normalized();  // guard against fp drift
  Vec3 e2 = e3.cross(e1);
  return {e1, e2, e3};
}

RotationPath reconstruct_path(const SphericalBraid& sb) {
  const std::size_t N = sb.times.size();
  if (N < 2) throw_error(errc::not_anchored, "need at least two samples");

  auto base = base_points();
  for (int i = 0; i < 3; ++i) {
    if ((sb.strands[i].front() - base[i]).norm() > 1e-6)
      throw_error(errc::not_anchored, "first sample is not the base configuration");
    if ((sb.strands[i].back() - base[i] * 0.5).norm() > 1e-6)
      throw_error(errc::not_anchored, "last sample is not the half-radius base configuration");
  }

  std::vector<Quat> frames;
  frames.reserve(N);
  for (std::size_t k = 0; k < N; ++k) {
    TriangleFrame f =
        frame_of_triangle(sb.strands[0][k], sb.strands[1][k], sb.strands[2][k]);
    frames.push_back(quat_from_matrix(f.to_matrix()));
  }
  if (frames.back().rotation_angle() > 1e-6)
    throw_error(errc::not_closed, "reconstructed path does not close");

  std::vector<Segment> segments;
  segments.reserve(N - 1);
  for (std::size_t k = 0; k + 1 < N; ++k) {
    Quat d = (frames[k + 1] * frames[k].conj()).normalized();
    if (d.w < 0.0) d = {-d.w, -d.x, -d.y, -d.z};
    double vn = std::sqrt(d.x * d.x + d.y * d.y + d.z * d.z);
    double angle = 2.0 * std::atan2(vn, d.w);
    if (angle < 1e-12 || vn == 0.0)
      segments.push_back({Vec3{0.0, 0.0, 1.0}, 0.0});
    else
      segments.push_back({Vec3{d.x / vn, d.y / vn, d.z / vn}, angle});
  }
  return RotationPath(std::move(segments));
}

}  // namespace rotbraid
