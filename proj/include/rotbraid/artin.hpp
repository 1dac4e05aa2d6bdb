#pragma once

#include <vector>

#include "rotbraid/braid.hpp"

namespace rotbraid {

/// Freely reduced word in the free group on x_1 .. x_n (letter k = x_k,
/// -k = x_k^-1). Stored reduced at all times.
class FreeWord {
 public:
  FreeWord() = default;
  static FreeWord generator(int k) { return FreeWord({k}); }
  explicit FreeWord(std::vector<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }

  FreeWord operator*(const FreeWord& o) const;
  FreeWord inverse() const;

 private:
  std::vector<int> letters_;  // invariant: freely reduced
};

/// Automorphism of the rank-n free group, given by generator images.
///
/// The braid group embeds here via sigma_i: x_i -> x_i x_{i+1} x_i^-1,
/// x_{i+1} -> x_i, all other generators fixed. Faithfulness of this action
/// makes image comparison an exact word-problem oracle for B_n. Image
/// lengths can grow exponentially in word length; intended for words up to
/// length ~64, far beyond anything the identity tables need.
class FreeAutomorphism {
 public:
  static FreeAutomorphism identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<FreeWord>& images() const { return images_; }
  const FreeWord& image_of(int k) const { return images_[k - 1]; }

  /// Substitute this map's images for the letters of w.
  FreeWord apply(const FreeWord& w) const;

  /// this followed by o (word order = application order).
  FreeAutomorphism then(const FreeAutomorphism& o) const;

  bool operator==(const FreeAutomorphism& o) const { return images_ == o.images_; }

  static FreeAutomorphism from_images(std::vector<FreeWord> images);

 private:
  std::vector<FreeWord> images_;
};

/// The Artin action of a braid word, letter by letter in word order.
FreeAutomorphism artin_action(const BraidWord& w);

/// Exact equality in B_n via faithfulness of the Artin action.
bool equal_in_group(const BraidWord& a, const BraidWord& b);

}  // namespace rotbraid
