#pragma once

#include <cstdint>

#include "rotbraid/extract.hpp"
#include "rotbraid/quotient.hpp"
#include "rotbraid/rotation.hpp"

namespace rotbraid {

/// Classification by the braid route alone: z2_class(braid_of_path(p)).
HomotopyClass classify_via_braid(const RotationPath& p,
                                 const ExtractOptions& opts = {});

struct ClassificationReport {
  HomotopyClass result;        // the agreed class
  BraidWord braid_word;
  SphereBraidClass cls;
  HomotopyClass braid_route;
  HomotopyClass lift_route;
  bool agreement = false;
  Vec3 pole;
  int samples = 0;

  ClassificationReport() : braid_word(3), cls{Permutation::identity(3), 0} {}
};

/// Runs both routes (braid invariant and quaternion lift) and checks they
/// agree. Disagreement always indicates a defect in one of the two
/// implementations, so it raises errc::disagreement with diagnostics rather
/// than picking a side.
ClassificationReport classify(const RotationPath& p,
                              const ExtractOptions& opts = {});

/// Test-path generator: k_turns full 2*pi rotations about seeded-random axes;
/// with wiggle, closed null excursions (a segment followed by its exact
/// reverse) are interleaved. The class is k_turns mod 2 by construction.
RotationPath random_closed_path(std::uint64_t seed, int k_turns, bool wiggle);

}  // namespace rotbraid
