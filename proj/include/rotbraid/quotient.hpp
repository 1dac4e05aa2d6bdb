#pragma once

#include <string>
#include <vector>

#include "rotbraid/braid.hpp"
#include "rotbraid/homotopy.hpp"

namespace rotbraid {

/// The flip of strand i in B_n: the braid of passing strand i over and
/// around the ball. For n = 3 these are
///   r_1 = s1 s2 s2 s1,  r_2 = s1 s1 s2 s2,  r_3 = s2 s1 s1 s2.
/// Every flip is pure with exponent sum 2n-2.
BraidWord flip(int i, int strand_count);

/// The full twist d = (sigma_{n-1} ... sigma_1)^n; pure, exponent sum n(n-1).
BraidWord full_twist(int strand_count);

/// Complete invariant of B_3 modulo the subgroup R generated by the flips:
/// the permutation together with the exponent sum mod 4. The exponent sum
/// descends to Z_4 because each flip has exponent sum 4 and the braid
/// relation is balanced; completeness on top of that is checked empirically
/// by the exhaustive short-word certificate sweep in the test suite.
struct SphereBraidClass {
  Permutation perm;
  int esum_mod4 = 0;  // in {0,1,2,3}

  bool operator==(const SphereBraidClass& o) const {
    return perm == o.perm && esum_mod4 == o.esum_mod4;
  }

  /// Permutation parity must match the exponent sum mod 2.
  bool parity_consistent() const;
};

/// Invariant of w in B_3/R. Requires strand_count == 3.
SphereBraidClass sphere_class(const BraidWord& w);

/// Z_2 class of a pure 3-strand word: trivial iff exponent sum == 0 mod 4.
HomotopyClass z2_class(const BraidWord& w);

/// A shortest word with the given invariant (first in a fixed enumeration
/// order, so deterministic). Pure classes yield the empty word or s1^2.
BraidWord canonical_rep(const SphereBraidClass& c);

/// One verified identity in a verification report.
struct IdentityCheck {
  std::string name;
  bool verified = false;
};

struct VerificationReport {
  std::string title;
  std::vector<IdentityCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.verified) return false;
    return !checks.empty();
  }
};

/// The ten conjugation identities expressing closure of R under conjugation
/// in B_3, each checked exactly with the Artin oracle. Entries stating two
/// right-hand forms verify both.
VerificationReport verify_lemma1();

/// The five general-n conjugation families, instantiated over all stated
/// index ranges for the given strand count (3 <= n <= 7).
VerificationReport verify_lemma1_general(int strand_count);

}  // namespace rotbraid
