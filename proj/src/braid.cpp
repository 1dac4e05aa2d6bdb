#include "rotbraid/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rotbraid {

namespace {

void validate_letters(int strand_count, const std::vector<int>& letters) {
  if (strand_count < 2)
    throw_error(errc::index_out_of_range,
                "strand count must be at least 2, got " + std::to_string(strand_count));
  for (int l : letters) {
    int idx = std::abs(l);
    if (idx < 1 || idx > strand_count - 1)
      throw_error(errc::index_out_of_range,
                  "letter " + std::to_string(l) + " invalid for " +
                      std::to_string(strand_count) + " strands");
  }
}

}  // namespace

BraidWord::BraidWord(int strand_count) : strand_count_(strand_count) {
  validate_letters(strand_count, {});
}

BraidWord::BraidWord(int strand_count, std::vector<int> letters)
    : strand_count_(strand_count), letters_(std::move(letters)) {
  validate_letters(strand_count_, letters_);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  int n = static_cast<int>(images_.size());
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1])
      throw_error(errc::invalid_class, "not a bijection on 1.." + std::to_string(n));
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

int Permutation::parity() const {
  // count inversions
  int inv = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

Permutation Permutation::then(const Permutation& o) const {
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[i] = images_[o.images()[i] - 1];
  return Permutation(std::move(im));
}

BraidWord make_word(int strand_count, const std::vector<int>& letters) {
  return BraidWord(strand_count, letters);
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strand_count() != b.strand_count())
    throw_error(errc::strand_count_mismatch,
                std::to_string(a.strand_count()) + " vs " + std::to_string(b.strand_count()));
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strand_count(), std::move(letters));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& l : letters) l = -l;
  return BraidWord(w.strand_count(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int l : w.letters()) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return BraidWord(w.strand_count(), std::move(out));
}

int exponent_sum(const BraidWord& w) {
  int e = 0;
  for (int l : w.letters()) e += l > 0 ? 1 : -1;
  return e;
}

Permutation permutation_of(const BraidWord& w) {
  std::vector<int> t(w.strand_count());
  std::iota(t.begin(), t.end(), 1);
  for (int l : w.letters()) {
    int i = std::abs(l) - 1;
    std::swap(t[i], t[i + 1]);
  }
  return Permutation(std::move(t));
}

bool is_pure(const BraidWord& w) { return permutation_of(w).is_identity(); }

BraidWord pure_generator(int i, int j, int strand_count) {
  if (!(1 <= i && i < j && j <= strand_count))
    throw_error(errc::invalid_pair,
                "need 1 <= i < j <= n, got (" + std::to_string(i) + ", " +
                    std::to_string(j) + ", " + std::to_string(strand_count) + ")");
  std::vector<int> letters;
  for (int k = j - 1; k > i; --k) letters.push_back(k);
  letters.push_back(i);
  letters.push_back(i);
  for (int k = i + 1; k <= j - 1; ++k) letters.push_back(-k);
  return BraidWord(strand_count, std::move(letters));
}

std::string format_word_text(const BraidWord& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << ' ';
    os << w.letters()[k];
  }
  return os.str();
}

BraidWord parse_word_text(const std::string& text, int strand_count) {
  std::istringstream is(text);
  std::vector<int> letters;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v == 0)
        throw_error(errc::parse_error, "bad letter '" + tok + "'");
      letters.push_back(v);
    } catch (const std::invalid_argument&) {
      throw_error(errc::parse_error, "bad letter '" + tok + "'");
    } catch (const std::out_of_range&) {
      throw_error(errc::parse_error, "letter out of range '" + tok + "'");
    }
  }
  return BraidWord(strand_count, std::move(letters));
}

}  // namespace rotbraid
