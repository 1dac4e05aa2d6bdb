#include <doctest.h>

#include <cmath>

#include "rotbraid/classify.hpp"
#include "rotbraid/rotation.hpp"
#include "support/testutil.hpp"

using namespace rotbraid;

namespace {
constexpr double kPi = 3.14159265358979323846;
const Vec3 kZ{0.0, 0.0, 1.0};
const Vec3 kX{1.0, 0.0, 0.0};
}  // namespace

TEST_CASE("path_from_segments") {
  RotationPath full = path_from_segments({{kZ, 2 * kPi}});
  CHECK(full.segments().size() == 1);

  RotationPath constant = path_from_segments({});
  CHECK(constant.segments().empty());
  CHECK(matrix_identity_error(constant.rotation_at(0.7)) == 0.0);

  CHECK_THROWS_AS(path_from_segments({{Vec3{0, 0, 0}, 1.0}}), Error);
  // zero axis with zero angle is a legal padding segment
  CHECK_NOTHROW(path_from_segments({{Vec3{0, 0, 0}, 0.0}}));
  // non-unit axes are normalized
  RotationPath p = path_from_segments({{Vec3{0, 0, 2.5}, kPi}});
  CHECK(p.segments()[0].axis.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rotation_at") {
  RotationPath p = path_from_segments({{kZ, 2 * kPi}});
  // quarter of the way through a full turn about z: x maps to y
  Vec3 v = p.rotation_quat_at(0.25).rotate(kX);
  CHECK(v.x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(v.y == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v.z == doctest::Approx(0.0).epsilon(1e-12));

  CHECK(matrix_identity_error(p.rotation_at(0.0)) == 0.0);
  CHECK(matrix_identity_error(p.rotation_at(1.0)) < 1e-9);
  CHECK_THROWS_AS(p.rotation_at(1.5), Error);
  CHECK_THROWS_AS(p.rotation_at(-0.1), Error);
}

TEST_CASE("is_closed") {
  CHECK(is_closed(path_from_segments({{kZ, 2 * kPi}}), 1e-9));
  CHECK_FALSE(is_closed(path_from_segments({{kZ, kPi}}), 1e-9));
  CHECK(is_closed(path_from_segments({{kX, 2 * kPi}, {Vec3{0, 1, 0}, 2 * kPi}}), 1e-9));
}

TEST_CASE("lift_class examples") {
  CHECK(lift_class(path_from_segments({{kZ, 2 * kPi}})) == HomotopyClass::nontrivial);
  CHECK(lift_class(path_from_segments({{kZ, 4 * kPi}})) == HomotopyClass::trivial);
  CHECK(lift_class(path_from_segments({{kZ, 2 * kPi}, {kX, 2 * kPi}})) ==
        HomotopyClass::trivial);
  CHECK(lift_class(RotationPath()) == HomotopyClass::trivial);
  CHECK_THROWS_AS(lift_class(path_from_segments({{kZ, kPi}})), Error);
}

TEST_CASE("ingest_samples") {
  std::vector<Quat> constant(5, Quat::identity());
  RotationPath p = ingest_samples(constant);
  CHECK(lift_class(p) == HomotopyClass::trivial);

  // uniform full turn about z in 100 steps
  std::vector<Quat> turn;
  for (int k = 0; k <= 100; ++k)
    turn.push_back(Quat::from_axis_angle(kZ, 2 * kPi * k / 100.0));
  CHECK(lift_class(ingest_samples(turn)) == HomotopyClass::nontrivial);

  // a pi jump between consecutive samples is too sparse
  std::vector<Quat> sparse{Quat::identity(), Quat::from_axis_angle(kZ, kPi)};
  CHECK_THROWS_AS(ingest_samples(sparse), Error);
  try {
    ingest_samples(sparse);
  } catch (const Error& e) {
    CHECK(e.code() == errc::sparse_sampling);
  }

  CHECK_THROWS_AS(ingest_samples(std::vector<Quat>{Quat::identity()}), Error);
  CHECK_THROWS_AS(ingest_samples(std::vector<Quat>{Quat::identity(), Quat{0, 0, 0, 0}}),
                  Error);

  // matrix overload rejects non-orthonormal input
  Mat3 bad{{{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}};
  CHECK_THROWS_AS(ingest_samples(std::vector<Mat3>{bad, bad}), Error);
  Mat3 id{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  CHECK(lift_class(ingest_samples(std::vector<Mat3>{id, id})) == HomotopyClass::trivial);
}

TEST_CASE("ingest agrees with the sign-continued endpoint") {
  Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    RotationPath p = random_closed_path(1000 + trial, trial % 4, trial % 2 == 0);
    std::vector<Quat> samples;
    int steps = 60 * std::max(1, trial % 4) + 40;
    for (int k = 0; k <= steps; ++k)
      samples.push_back(p.rotation_quat_at(static_cast<double>(k) / steps));
    CHECK(lift_class(ingest_samples(samples)) == lift_class(p));
  }
}

TEST_CASE("lift class is a homomorphism under concatenation") {
  Rng rng(62);
  for (int trial = 0; trial < 40; ++trial) {
    RotationPath a = random_closed_path(200 + trial, trial % 5, false);
    RotationPath b = random_closed_path(300 + trial, (trial + 2) % 5, true);
    CHECK(lift_class(concat_paths(a, b)) == compose(lift_class(a), lift_class(b)));
  }
}

TEST_CASE("lift class is invariant under segment subdivision") {
  Rng rng(63);
  for (int trial = 0; trial < 30; ++trial) {
    RotationPath p = random_closed_path(400 + trial, 1 + trial % 4, trial % 2 == 1);
    std::vector<Segment> halves;
    for (const Segment& s : p.segments()) {
      halves.push_back({s.axis, s.angle / 2});
      halves.push_back({s.axis, s.angle / 2});
    }
    CHECK(lift_class(RotationPath(halves)) == lift_class(p));
  }
}

TEST_CASE("lift class of the reversal is unchanged") {
  for (int trial = 0; trial < 20; ++trial) {
    RotationPath p = random_closed_path(500 + trial, trial % 5, trial % 2 == 0);
    CHECK(lift_class(reverse_path(p)) == lift_class(p));
  }
}

TEST_CASE("k consecutive full turns have class k mod 2") {
  for (int k = 0; k <= 6; ++k) {
    RotationPath p = random_closed_path(600 + k, k, false);
    HomotopyClass expect = k % 2 == 0 ? HomotopyClass::trivial : HomotopyClass::nontrivial;
    CHECK(lift_class(p) == expect);
  }
}
