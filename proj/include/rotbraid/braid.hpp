#pragma once

#include <string>
#include <vector>

#include "rotbraid/errors.hpp"

namespace rotbraid {

/// A word in the braid group B_n over generators sigma_1 .. sigma_{n-1}.
///
/// Letters use the signed-integer convention: k stands for sigma_k and -k for
/// its inverse. Words are stored exactly as given; no normalization happens
/// implicitly, so rewriting certificates can account for every elementary
/// move. All values are immutable after construction.
class BraidWord {
 public:
  /// Empty word (identity) on n strands.
  explicit BraidWord(int strand_count);

  BraidWord(int strand_count, std::vector<int> letters);

  int strand_count() const { return strand_count_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const BraidWord& o) const {
    return strand_count_ == o.strand_count_ && letters_ == o.letters_;
  }

 private:
  int strand_count_;
  std::vector<int> letters_;
};

/// A permutation of {1..n}; images[i-1] is the image of position i.
/// Composition is left-to-right: word order equals application order.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  /// +1 for even, -1 for odd.
  int parity() const;

  /// this followed by o.
  Permutation then(const Permutation& o) const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }

 private:
  std::vector<int> images_;
};

BraidWord make_word(int strand_count, const std::vector<int>& letters);

/// Concatenation; requires equal strand counts.
BraidWord compose(const BraidWord& a, const BraidWord& b);

/// Letters reversed with signs flipped.
BraidWord inverse(const BraidWord& w);

/// Cancels adjacent inverse pairs until none remain. The Artin relation is
/// never applied here.
BraidWord free_reduce(const BraidWord& w);

/// Sum of letter signs (abelianization to the integers).
int exponent_sum(const BraidWord& w);

/// Image under the homomorphism to S_n; each letter swaps positions i, i+1.
Permutation permutation_of(const BraidWord& w);

/// True iff the word lies in the pure braid group (trivial permutation).
bool is_pure(const BraidWord& w);

/// Band generator a_ij = (sigma_{j-1} .. sigma_{i+1}) sigma_i^2
/// (sigma_{i+1}^-1 .. sigma_{j-1}^-1); requires 1 <= i < j <= n.
BraidWord pure_generator(int i, int j, int strand_count);

/// Text form: whitespace-separated signed integers ("1 2 2 1").
std::string format_word_text(const BraidWord& w);
BraidWord parse_word_text(const std::string& text, int strand_count);

}  // namespace rotbraid
