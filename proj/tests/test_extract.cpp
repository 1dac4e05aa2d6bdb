#include <doctest.h>

#include <cmath>
#include <set>

#include "rotbraid/classify.hpp"
#include "rotbraid/extract.hpp"
#include "support/testutil.hpp"

using namespace rotbraid;

namespace {
constexpr double kPi = 3.14159265358979323846;
const Vec3 kZ{0.0, 0.0, 1.0};

double clearance(const SphericalBraid& sb, const Vec3& pole) {
  double best = kPi;
  for (const auto& strand : sb.strands)
    for (const Vec3& x : strand) best = std::min(best, angle_between(x, pole));
  return best;
}

std::pair<std::vector<int>, int> class_key(const BraidWord& w) {
  SphereBraidClass c = sphere_class(w);
  return {c.perm.images(), c.esum_mod4};
}

BraidWord extract_with_retries(const SphericalBraid& sb, const Vec3& pole,
                               std::uint64_t seed) {
  Rng rng(seed);
  double spin = 0.0;
  for (int attempt = 0;; ++attempt) {
    try {
      return extract_word(project(sb, pole, spin));
    } catch (const Error& e) {
      if ((e.code() != errc::degenerate_crossing && e.code() != errc::triple_crossing) ||
          attempt >= 8)
        throw;
      spin = rng.uniform(0.01, 0.12);
    }
  }
}
}  // namespace

TEST_CASE("choose_pole prefers the north pole for equatorial braids") {
  SphericalBraid sb = trace(RotationPath());
  Vec3 pole = choose_pole(sb);
  CHECK((pole - kZ).norm() < 1e-12);
  CHECK(clearance(sb, pole) == doctest::Approx(kPi / 2).epsilon(1e-9));

  // a z-rotation keeps all strands on the equator
  SphericalBraid sb2 = trace(path_from_segments({{kZ, 2 * kPi}}));
  CHECK((choose_pole(sb2) - kZ).norm() < 1e-12);
}

TEST_CASE("choose_pole avoids a strand passing through the north pole") {
  // a full turn about x sweeps two marked points through +-z
  RotationPath p = path_from_segments({{Vec3{1, 0, 0}, 2 * kPi}});
  SphericalBraid sb = trace(p);
  Vec3 pole = choose_pole(sb);
  CHECK(angle_between(pole, kZ) > 1e-3);
  CHECK(clearance(sb, pole) > 1e-4);
  CHECK_THROWS_AS(choose_pole(sb, 0), Error);
}

TEST_CASE("projection geometry") {
  SphericalBraid sb = trace(RotationPath());
  PlanarStrands ps = project(sb, kZ);
  // base points are equidistant from the origin, 120 degrees apart
  double r0 = std::hypot(ps.u[0][0], ps.v[0][0]);
  double r1 = std::hypot(ps.u[1][0], ps.v[1][0]);
  double r2 = std::hypot(ps.u[2][0], ps.v[2][0]);
  CHECK(r0 == doctest::Approx(r1).epsilon(1e-12));
  CHECK(r1 == doctest::Approx(r2).epsilon(1e-12));
  double a01 = std::atan2(ps.v[1][0], ps.u[1][0]) - std::atan2(ps.v[0][0], ps.u[0][0]);
  CHECK(std::fabs(std::remainder(a01, 2 * kPi / 3)) < 1e-9);
  // depth is the negated radius
  for (std::size_t k = 0; k < ps.times.size(); ++k)
    CHECK(ps.depth[k] == doctest::Approx(-(1.0 - ps.times[k] / 2)));

  // the point opposite the pole projects to the plane origin
  SphericalBraid tiny;
  tiny.times = {0.0, 1.0};
  for (int i = 0; i < 3; ++i) {
    tiny.strands[i].push_back(base_points()[i]);
    tiny.strands[i].push_back(base_points()[i] * 0.5);
  }
  tiny.strands[0][0] = Vec3{0, 0, -1};
  PlanarStrands tp = project(tiny, kZ);
  CHECK(std::fabs(tp.u[0][0]) < 1e-12);
  CHECK(std::fabs(tp.v[0][0]) < 1e-12);

  // a sample at the pole is rejected
  tiny.strands[0][0] = kZ;
  CHECK_THROWS_AS(project(tiny, kZ), Error);
}

TEST_CASE("the pinned frame is degenerate at the braid boundary") {
  // the base points share a u-coordinate under (u, v) = (x, y), so the
  // unspun frame must report a degenerate crossing rather than guess
  SphericalBraid sb = trace(path_from_segments({{kZ, 2 * kPi}}));
  CHECK_THROWS_AS(extract_word(project(sb, kZ, 0.0)), Error);
  try {
    extract_word(project(sb, kZ, 0.0));
  } catch (const Error& e) {
    CHECK(e.code() == errc::degenerate_crossing);
  }
  // a spun frame resolves it
  BraidWord w = extract_word(project(sb, kZ, 0.05));
  CHECK(is_pure(w));
  CHECK(sphere_class(w).esum_mod4 == 2);
}

TEST_CASE("extraction of the constant path is empty") {
  CHECK(braid_of_path(RotationPath()).empty());
}

TEST_CASE("rotation about the third marked point gives the first twist class") {
  RotationPath p = path_from_segments({{base_points()[2], 2 * kPi}});
  BraidWord w = braid_of_path(p);
  CHECK(is_pure(w));
  SphereBraidClass c = sphere_class(w);
  CHECK(c.perm.is_identity());
  CHECK(c.esum_mod4 == 2);
}

TEST_CASE("a double turn about any axis is in the trivial class") {
  Rng rng(81);
  for (int trial = 0; trial < 5; ++trial) {
    RotationPath p = path_from_segments({{rng.unit_vector(), 4 * kPi}});
    BraidWord w = braid_of_path(p);
    CHECK(is_pure(w));
    CHECK(sphere_class(w).esum_mod4 == 0);
  }
}

TEST_CASE("full turns about coordinate axes") {
  CHECK(sphere_class(braid_of_path(path_from_segments({{kZ, 2 * kPi}}))).esum_mod4 == 2);
  CHECK(sphere_class(braid_of_path(path_from_segments({{Vec3{1, 0, 0}, 2 * kPi}})))
            .esum_mod4 == 2);
  CHECK(sphere_class(braid_of_path(path_from_segments({{Vec3{0, 1, 0}, 2 * kPi}})))
            .esum_mod4 == 2);
  // composition of two full turns
  RotationPath two = path_from_segments({{kZ, 2 * kPi}, {Vec3{1, 0, 0}, 2 * kPi}});
  CHECK(sphere_class(braid_of_path(two)).esum_mod4 == 0);
}

TEST_CASE("pole independence of the class") {
  Rng rng(82);
  for (int trial = 0; trial < 5; ++trial) {
    RotationPath p = random_closed_path(900 + trial, trial % 4, trial % 2 == 1);
    SphericalBraid sb = trace(p);
    std::set<std::pair<std::vector<int>, int>> classes;
    int poles_tried = 0;
    std::uint64_t pole_seed = 0;
    while (poles_tried < 3) {
      Vec3 pole = Rng(6000 + 17 * trial + pole_seed++).unit_vector();
      if (clearance(sb, pole) < 0.05) continue;
      ++poles_tried;
      classes.insert(class_key(extract_with_retries(sb, pole, 7)));
    }
    CHECK(classes.size() == 1);
  }
}

TEST_CASE("halving the sampling step never changes the class") {
  for (int trial = 0; trial < 4; ++trial) {
    RotationPath p = random_closed_path(950 + trial, 1 + trial % 3, trial % 2 == 0);
    ExtractOptions coarse, fine;
    coarse.max_step = 0.05;
    fine.max_step = 0.025;
    CHECK(class_key(braid_of_path(p, coarse)) == class_key(braid_of_path(p, fine)));
  }
}

TEST_CASE("extraction needs a closed path") {
  CHECK_THROWS_AS(braid_of_path(path_from_segments({{kZ, kPi}})), Error);
}
