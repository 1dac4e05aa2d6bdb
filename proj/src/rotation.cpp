#include "rotbraid/rotation.hpp"

#include <algorithm>
#include <cmath>

#include "rotbraid/errors.hpp"

namespace rotbraid {

namespace {

constexpr double kPi = 3.14159265358979323846;

Quat segment_quat(const Segment& s, double fraction = 1.0) {
  return Quat::from_axis_angle(s.axis, s.angle * fraction);
}

}  // namespace

RotationPath::RotationPath(std::vector<Segment> segments)
    : segments_(std::move(segments)) {
  for (const Segment& s : segments_) total_angle_ += std::fabs(s.angle);

  // parameter shares proportional to |angle|; zero-angle segments share a
  // common minimal weight so they still occupy parameter range
  double floor_weight =
      total_angle_ > 0.0 ? total_angle_ * 1e-6 : 1.0;
  std::vector<double> weights;
  weights.reserve(segments_.size());
  double total_weight = 0.0;
  for (const Segment& s : segments_) {
    double w = std::fabs(s.angle) > 0.0 ? std::fabs(s.angle) : floor_weight;
    weights.push_back(w);
    total_weight += w;
  }

  cumulative_.reserve(segments_.size());
  prefix_.reserve(segments_.size());
  double acc = 0.0;
  Quat q = Quat::identity();
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    prefix_.push_back(q);
    acc += weights[k] / total_weight;
    cumulative_.push_back(acc);
    q = (segment_quat(segments_[k]) * q).normalized();
  }
  if (!cumulative_.empty()) cumulative_.back() = 1.0;
  final_ = q;
}

Quat RotationPath::rotation_quat_at(double t) const {
  if (t < 0.0 || t > 1.0)
    throw_error(errc::out_of_range, "path parameter t = " + std::to_string(t));
  if (segments_.empty()) return Quat::identity();
  if (t >= 1.0) return final_;
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), t);
  std::size_t k = static_cast<std::size_t>(it - cumulative_.begin());
  if (k >= segments_.size()) k = segments_.size() - 1;
  double start = k == 0 ? 0.0 : cumulative_[k - 1];
  double share = cumulative_[k] - start;
  double f = share > 0.0 ? (t - start) / share : 1.0;
  return (segment_quat(segments_[k], f) * prefix_[k]).normalized();
}

RotationPath path_from_segments(const std::vector<Segment>& segments) {
  std::vector<Segment> normalized;
  normalized.reserve(segments.size());
  for (const Segment& s : segments) {
    double norm = s.axis.norm();
    if (norm <= 1e-9) {
      if (s.angle != 0.0)
        throw_error(errc::zero_axis, "segment with near-zero axis and nonzero angle");
      normalized.push_back({{0.0, 0.0, 1.0}, 0.0});
    } else {
      normalized.push_back({s.axis / norm, s.angle});
    }
  }
  return RotationPath(std::move(normalized));
}

bool is_closed(const RotationPath& p, double tol) {
  return matrix_identity_error(p.rotation_at(1.0)) < tol;
}

HomotopyClass lift_class(const RotationPath& p) {
  if (!is_closed(p, 1e-9))
    throw_error(errc::not_closed, "lift class needs a closed path");
  Quat q = Quat::identity();
  for (const Segment& s : p.segments()) q = segment_quat(s) * q;
  double vec_norm = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  if (std::fabs(q.w - 1.0) < 1e-6 && vec_norm < 1e-6) return HomotopyClass::trivial;
  if (std::fabs(q.w + 1.0) < 1e-6 && vec_norm < 1e-6) return HomotopyClass::nontrivial;
  throw_error(errc::numerical_ambiguity,
              "lift endpoint near neither pole (w = " + std::to_string(q.w) + ")");
}

namespace {

RotationPath path_from_orientation_samples(const std::vector<Quat>& samples) {
  if (samples.size() < 2)
    throw_error(errc::sparse_sampling, "need at least 2 orientation samples");
  std::vector<Quat> qs;
  qs.reserve(samples.size());
  for (const Quat& q : samples) {
    if (q.norm() < 1e-6)
      throw_error(errc::not_normalizable, "orientation quaternion has near-zero norm");
    qs.push_back(q.normalized());
  }

  std::vector<Segment> segments;
  segments.reserve(qs.size() - 1);
  for (std::size_t k = 0; k + 1 < qs.size(); ++k) {
    Quat d = (qs[k + 1] * qs[k].conj()).normalized();
    if (d.w < 0.0) d = {-d.w, -d.x, -d.y, -d.z};  // shortest representative
    double vn = std::sqrt(d.x * d.x + d.y * d.y + d.z * d.z);
    double angle = 2.0 * std::atan2(vn, d.w);
    if (angle > kPi / 2.0)
      throw_error(errc::sparse_sampling,
                  "consecutive delta " + std::to_string(angle) + " rad exceeds pi/2");
    if (angle < 1e-12) continue;
    segments.push_back({Vec3{d.x / vn, d.y / vn, d.z / vn}, angle});
  }
  return RotationPath(std::move(segments));
}

}  // namespace

RotationPath ingest_samples(const std::vector<Quat>& samples) {
  return path_from_orientation_samples(samples);
}

RotationPath ingest_samples(const std::vector<Mat3>& samples) {
  std::vector<Quat> qs;
  qs.reserve(samples.size());
  for (const Mat3& m : samples) {
    // orthonormality and orientation check
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double dot = 0.0;
        for (int k = 0; k < 3; ++k) dot += m[k][i] * m[k][j];
        if (std::fabs(dot - (i == j ? 1.0 : 0.0)) > 1e-6)
          throw_error(errc::not_normalizable, "sample matrix is not orthonormal");
      }
    double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                 m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (det < 0.0)
      throw_error(errc::not_normalizable, "sample matrix has negative determinant");
    qs.push_back(quat_from_matrix(m));
  }
  return path_from_orientation_samples(qs);
}

RotationPath concat_paths(const RotationPath& p1, const RotationPath& p2) {
  std::vector<Segment> segments = p1.segments();
  segments.insert(segments.end(), p2.segments().begin(), p2.segments().end());
  return RotationPath(std::move(segments));
}

RotationPath reverse_path(const RotationPath& p) {
  std::vector<Segment> segments(p.segments().rbegin(), p.segments().rend());
  for (Segment& s : segments) s.angle = -s.angle;
  return RotationPath(std::move(segments));
}

}  // namespace rotbraid
