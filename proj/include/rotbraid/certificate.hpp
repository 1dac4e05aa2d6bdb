#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rotbraid/braid.hpp"

namespace rotbraid {

/// Elementary rewriting moves. A certificate is a replayable sequence of
/// these; replay verifies each move against the evolving word, so a stored
/// certificate is a machine-checkable witness of equality modulo R.
enum class MoveKind {
  free_insert,    // insert sigma_i^s sigma_i^-s at pos
  free_cancel,    // remove the inverse pair at pos, pos+1
  artin_replace,  // swap a same-sign triple (i,j,i) <-> (j,i,j), |i-j| = 1
  flip_insert,    // insert the word flip(i)^s at pos
  flip_delete,    // remove a contiguous occurrence of flip(i)^s at pos
};

struct Move {
  MoveKind kind;
  int pos = 0;
  int index = 0;      // generator index (free_insert) or flip index i
  int sign = 1;       // +1 or -1
  bool left_to_right = true;  // artin_replace: triple starts with the smaller index
};

struct Certificate {
  int strand_count = 3;
  BraidWord start{3};
  BraidWord end{3};
  std::vector<Move> moves;
};

/// Applies one move to a word, validating its pattern exactly.
/// Throws errc::bad_certificate on any mismatch.
std::vector<int> apply_move(const std::vector<int>& letters, const Move& m,
                            int strand_count);

/// Replays all moves from cert.start and checks the result equals cert.end
/// letter for letter.
bool replay_certificate(const Certificate& cert);

struct SearchBudget {
  std::uint64_t max_states = 2'000'000;  // explored (popped) states
  int max_extra_length = 8;              // word length cap = |start| + this
};

enum class CertifyStatus {
  found,
  budget_exhausted,
  /// The invariant check already rules the words inequivalent (n = 3:
  /// complete invariant; n = 4: necessary condition only). No certificate
  /// can exist, so no search is attempted.
  invariant_mismatch,
};

struct CertifyResult {
  CertifyStatus status;
  std::optional<Certificate> certificate;
  std::uint64_t states_explored = 0;

  bool found() const { return status == CertifyStatus::found; }
};

/// Searches for a certificate rewriting w1 into w2 using only the elementary
/// moves above. Iterative deepening on the word-length cap with a best-first
/// inner order that prefers shorter words, tie-broken lexicographically, so
/// results are reproducible for a fixed budget. A non-found result means the
/// budget ran out (or the invariant already differs), never disproof by
/// itself. Supported strand counts: 3 (mandatory) and 4 (best effort).
CertifyResult certify_equal_mod_R(const BraidWord& w1, const BraidWord& w2,
                                  const SearchBudget& budget = {});

/// Membership of w in R: certify_equal_mod_R(w, empty word).
CertifyResult certify_in_R(const BraidWord& w, const SearchBudget& budget = {});

}  // namespace rotbraid
