#include "rotbraid/extract.hpp"

#include <algorithm>
#include <cmath>

namespace rotbraid {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<Vec3> fibonacci_directions(int count) {
  // north pole first, then a quasi-uniform spiral
  std::vector<Vec3> dirs = {Vec3{0.0, 0.0, 1.0}};
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  for (int i = 0; i < count - 1; ++i) {
    double z = count > 2 ? 1.0 - 2.0 * (i + 0.5) / (count - 1) : 0.0;
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    double theta = 2.0 * kPi * i / golden;
    dirs.push_back(Vec3{r * std::cos(theta), r * std::sin(theta), z});
  }
  return dirs;
}

double clearance_of(const SphericalBraid& sb, const Vec3& pole) {
  double best = kPi;
  for (const auto& strand : sb.strands)
    for (const Vec3& x : strand) best = std::min(best, angle_between(x, pole));
  return best;
}

}  // namespace

Vec3 choose_pole(const SphericalBraid& sb, int candidates) {
  if (candidates < 1) throw_error(errc::out_of_range, "need at least one candidate");
  Vec3 best_pole{0.0, 0.0, 1.0};
  double best_clear = -1.0;
  for (const Vec3& p : fibonacci_directions(candidates)) {
    double c = clearance_of(sb, p);
    if (c > best_clear) {
      best_clear = c;
      best_pole = p;
    }
  }
  if (best_clear < 1e-4)
    throw_error(errc::no_clear_pole,
                "best clearance " + std::to_string(best_clear) + " rad");
  return best_pole;
}

PlanarStrands project(const SphericalBraid& sb, const Vec3& pole, double frame_spin) {
  Vec3 p = pole.normalized();

  Vec3 seed{1.0, 0.0, 0.0};
  if (std::fabs(seed.dot(p)) > 0.99) seed = Vec3{0.0, 1.0, 0.0};
  Vec3 u_axis = (seed - p * seed.dot(p)).normalized();
  Vec3 v_axis = p.cross(u_axis);
  if (frame_spin != 0.0) {
    double c = std::cos(frame_spin), s = std::sin(frame_spin);
    Vec3 nu = u_axis * c + v_axis * s;
    v_axis = u_axis * (-s) + v_axis * c;
    u_axis = nu;
  }

  PlanarStrands ps;
  ps.times = sb.times;
  ps.pole = p;
  ps.depth.reserve(sb.times.size());
  for (double t : sb.times) ps.depth.push_back(-(1.0 - t / 2.0));
  for (int i = 0; i < 3; ++i) {
    ps.u[i].reserve(sb.times.size());
    ps.v[i].reserve(sb.times.size());
    for (const Vec3& x : sb.strands[i]) {
      Vec3 d = x.normalized();
      if (angle_between(d, p) < 1e-6)
        throw_error(errc::pole_collision, "strand sample within 1e-6 rad of the pole");
      double denom = 1.0 - d.dot(p);
      ps.u[i].push_back(d.dot(u_axis) / denom);
      ps.v[i].push_back(d.dot(v_axis) / denom);
    }
  }
  return ps;
}

namespace {

struct Sweep {
  const PlanarStrands& ps;

  double u_at(int i, std::size_t k, double f) const {
    return ps.u[i][k] + f * (ps.u[i][k + 1] - ps.u[i][k]);
  }
  double v_at(int i, std::size_t k, double f) const {
    return ps.v[i][k] + f * (ps.v[i][k + 1] - ps.v[i][k]);
  }

  // lexicographic (u, v, index): the order induced by an infinitesimal
  // positive frame spin
  bool before(int a, int b, std::size_t k, double f) const {
    double ua = u_at(a, k, f), ub = u_at(b, k, f);
    if (ua != ub) return ua < ub;
    double va = v_at(a, k, f), vb = v_at(b, k, f);
    if (va != vb) return va < vb;
    return a < b;
  }

  std::array<int, 3> order_at(std::size_t k, double f) const {
    std::array<int, 3> ord{0, 1, 2};
    std::sort(ord.begin(), ord.end(),
              [&](int a, int b) { return before(a, b, k, f); });
    return ord;
  }
};

}  // namespace

BraidWord extract_word(const PlanarStrands& ps) {
  const std::size_t N = ps.times.size();
  if (N < 2) return BraidWord(3);
  Sweep sw{ps};

  // A u-tie between distinct strands at the ends means the frame is not
  // generic for this braid's endpoint configuration.
  for (std::size_t k : {std::size_t{0}, N - 1}) {
    std::array<double, 3> us{ps.u[0][k], ps.u[1][k], ps.u[2][k]};
    std::sort(us.begin(), us.end());
    if (us[1] - us[0] < 1e-9 || us[2] - us[1] < 1e-9)
      throw_error(errc::degenerate_crossing, "u-tie at a boundary sample");
  }

  std::array<int, 3> order = sw.order_at(0, 0.0);
  std::vector<int> letters;

  for (std::size_t k = 0; k + 1 < N; ++k) {
    double f_done = 0.0;
    int guard = 0;
    while (order != sw.order_at(k, 1.0)) {
      if (++guard > 8)
        throw_error(errc::degenerate_crossing, "sweep failed to settle in an interval");

      // earliest adjacent-pair order flip after f_done
      double best_f = 2.0;
      int best_pos = -1;
      for (int pos = 0; pos < 2; ++pos) {
        int a = order[pos], b = order[pos + 1];
        if (sw.before(a, b, k, 1.0)) continue;  // does not flip by interval end
        double lo = f_done, hi = 1.0;
        for (int it = 0; it < 60; ++it) {
          double mid = 0.5 * (lo + hi);
          if (sw.before(a, b, k, mid))
            lo = mid;
          else
            hi = mid;
        }
        if (hi < best_f) {
          best_f = hi;
          best_pos = pos;
        }
      }
      if (best_pos < 0)
        throw_error(errc::degenerate_crossing,
                    "order changed without an adjacent flip");

      int a = order[best_pos], b = order[best_pos + 1];
      double va = sw.v_at(a, k, best_f), vb = sw.v_at(b, k, best_f);
      if (std::fabs(va - vb) < 1e-9)
        throw_error(errc::degenerate_crossing, "strands v-equal at a crossing");
      int third = 3 - a - b;
      if (std::fabs(sw.u_at(third, k, best_f) - sw.u_at(a, k, best_f)) < 1e-9)
        throw_error(errc::triple_crossing, "three strands share u at a crossing");

      // left strand passing behind (smaller v) gives the positive generator
      letters.push_back(va < vb ? best_pos + 1 : -(best_pos + 1));
      std::swap(order[best_pos], order[best_pos + 1]);
      f_done = best_f;
    }
  }
  return BraidWord(3, std::move(letters));
}

ExtractionResult braid_of_path_detailed(const RotationPath& p,
                                        const ExtractOptions& opts) {
  SphericalBraid sb = trace(p, opts.max_step);
  Vec3 pole = choose_pole(sb, opts.pole_candidates);

  Rng rng(opts.seed);
  double spin = 0.0;
  for (int attempt = 0;; ++attempt) {
    try {
      BraidWord word = extract_word(project(sb, pole, spin));
      if (!is_pure(word))
        throw_error(errc::not_pure_result,
                    "closed path produced a non-pure word: " + format_word_text(word));
      return {word, pole, static_cast<int>(sb.sample_count()), attempt};
    } catch (const Error& e) {
      if (e.code() != errc::degenerate_crossing && e.code() != errc::triple_crossing)
        throw;
      if (attempt >= opts.max_retries) throw;
      spin = rng.uniform(0.01, 0.12);
    }
  }
}

BraidWord braid_of_path(const RotationPath& p, const ExtractOptions& opts) {
  return braid_of_path_detailed(p, opts).word;
}

}  // namespace rotbraid
