#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rotbraid/braid.hpp"
#include "rotbraid/spherical.hpp"

namespace rotbraid {

/// Stereographic image of a spherical braid: per-sample (u, v) plane
/// coordinates for each strand plus the shared depth z = -rho(t).
struct PlanarStrands {
  std::vector<double> times;
  std::array<std::vector<double>, 3> u;
  std::array<std::vector<double>, 3> v;
  std::vector<double> depth;
  Vec3 pole;
};

/// Picks, among the north pole and (candidates - 1) quasi-uniform directions,
/// the ray maximizing the minimum angular distance to all strand samples.
/// Throws NoClearPole when even the best clearance is below 1e-4 rad.
Vec3 choose_pole(const SphericalBraid& sb, int candidates = 64);

/// Stereographic projection from `pole` onto its tangent-plane coordinates.
/// The (u, v) basis is fixed deterministically from the pole (pole z: u along
/// x, v along y) and may be rotated in-plane by `frame_spin` radians; retries
/// after degenerate crossings use seeded spins.
PlanarStrands project(const SphericalBraid& sb, const Vec3& pole,
                      double frame_spin = 0.0);

/// Sweeps the planar strands in time, maintaining left-to-right order, and
/// emits one letter per adjacent transposition. Crossing times are refined by
/// bisection; the sign convention is: the strand arriving from the left
/// passing behind (strictly smaller v) gives the positive generator.
///
/// Ties at sample points are broken by v then strand index, which matches the
/// order induced by an infinitesimal positive frame spin. A u-tie between
/// distinct strands at the first or last sample leaves half a crossing outside
/// the braid, so it is reported as DegenerateCrossing like any other
/// non-generic frame, and the caller retries with a spun frame.
BraidWord extract_word(const PlanarStrands& ps);

struct ExtractOptions {
  double max_step = 0.05;
  int pole_candidates = 64;
  std::uint64_t seed = 0;
  int max_retries = 8;
};

struct ExtractionResult {
  BraidWord word;
  Vec3 pole;
  int samples = 0;
  int retries = 0;
};

/// Full pipeline: trace, choose a pole, project, extract; retries with seeded
/// frame spins on degenerate or triple crossings. The result must be pure for
/// a closed path; anything else reports NotPureResult (an internal bug, never
/// silently retried).
ExtractionResult braid_of_path_detailed(const RotationPath& p,
                                        const ExtractOptions& opts = {});
BraidWord braid_of_path(const RotationPath& p, const ExtractOptions& opts = {});

}  // namespace rotbraid
