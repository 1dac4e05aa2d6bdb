#include "rotbraid/artin.hpp"

namespace rotbraid {

namespace {

void reduce_into(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

}  // namespace

FreeWord::FreeWord(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int l : letters) reduce_into(letters_, l);
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  std::vector<int> out = letters_;
  out.reserve(out.size() + o.letters_.size());
  for (int l : o.letters_) reduce_into(out, l);
  FreeWord w;
  w.letters_ = std::move(out);
  return w;
}

FreeWord FreeWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  FreeWord w;
  w.letters_ = std::move(out);  // reversal of a reduced word stays reduced
  return w;
}

FreeAutomorphism FreeAutomorphism::identity(int rank) {
  std::vector<FreeWord> images;
  images.reserve(rank);
  for (int k = 1; k <= rank; ++k) images.push_back(FreeWord::generator(k));
  return from_images(std::move(images));
}

FreeAutomorphism FreeAutomorphism::from_images(std::vector<FreeWord> images) {
  FreeAutomorphism a;
  a.images_ = std::move(images);
  return a;
}

FreeWord FreeAutomorphism::apply(const FreeWord& w) const {
  std::vector<int> out;
  for (int l : w.letters()) {
    const FreeWord& im = images_[std::abs(l) - 1];
    if (l > 0) {
      for (int x : im.letters()) reduce_into(out, x);
    } else {
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it)
        reduce_into(out, -*it);
    }
  }
  return FreeWord(std::move(out));
}

FreeAutomorphism FreeAutomorphism::then(const FreeAutomorphism& o) const {
  std::vector<FreeWord> images;
  images.reserve(images_.size());
  for (const FreeWord& im : images_) images.push_back(o.apply(im));
  return from_images(std::move(images));
}

namespace {

FreeAutomorphism letter_action(int letter, int rank) {
  std::vector<FreeWord> images;
  images.reserve(rank);
  int i = std::abs(letter);
  for (int k = 1; k <= rank; ++k) {
    if (letter > 0) {
      if (k == i)
        images.push_back(FreeWord({i, i + 1, -i}));
      else if (k == i + 1)
        images.push_back(FreeWord::generator(i));
      else
        images.push_back(FreeWord::generator(k));
    } else {
      if (k == i)
        images.push_back(FreeWord::generator(i + 1));
      else if (k == i + 1)
        images.push_back(FreeWord({-(i + 1), i, i + 1}));
      else
        images.push_back(FreeWord::generator(k));
    }
  }
  return FreeAutomorphism::from_images(std::move(images));
}

}  // namespace

FreeAutomorphism artin_action(const BraidWord& w) {
  FreeAutomorphism a = FreeAutomorphism::identity(w.strand_count());
  for (int letter : w.letters()) a = a.then(letter_action(letter, w.strand_count()));
  return a;
}

bool equal_in_group(const BraidWord& a, const BraidWord& b) {
  if (a.strand_count() != b.strand_count())
    throw_error(errc::strand_count_mismatch,
                std::to_string(a.strand_count()) + " vs " + std::to_string(b.strand_count()));
  return artin_action(a) == artin_action(b);
}

}  // namespace rotbraid
