#include "rotbraid/quotient.hpp"

#include <algorithm>

#include "rotbraid/artin.hpp"

namespace rotbraid {

BraidWord flip(int i, int strand_count) {
  int n = strand_count;
  if (n < 3) throw_error(errc::invalid_index, "flips need at least 3 strands");
  if (i < 1 || i > n)
    throw_error(errc::invalid_index,
                "flip index " + std::to_string(i) + " out of 1.." + std::to_string(n));
  std::vector<int> w;
  if (i == 1) {
    for (int k = 1; k <= n - 2; ++k) w.push_back(k);
    w.push_back(n - 1);
    w.push_back(n - 1);
    for (int k = n - 2; k >= 1; --k) w.push_back(k);
  } else if (i == n) {
    for (int k = n - 1; k >= 2; --k) w.push_back(k);
    w.push_back(1);
    w.push_back(1);
    for (int k = 2; k <= n - 1; ++k) w.push_back(k);
  } else {
    for (int k = i - 1; k >= 2; --k) w.push_back(k);
    w.push_back(1);
    w.push_back(1);
    for (int k = 2; k <= n - 2; ++k) w.push_back(k);
    w.push_back(n - 1);
    w.push_back(n - 1);
    for (int k = n - 2; k >= i; --k) w.push_back(k);
  }
  return BraidWord(n, std::move(w));
}

BraidWord full_twist(int strand_count) {
  int n = strand_count;
  if (n < 2) throw_error(errc::index_out_of_range, "full twist needs n >= 2");
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int rep = 0; rep < n; ++rep)
    for (int k = n - 1; k >= 1; --k) w.push_back(k);
  return BraidWord(n, std::move(w));
}

bool SphereBraidClass::parity_consistent() const {
  int perm_parity = perm.parity() == 1 ? 0 : 1;
  return perm_parity == esum_mod4 % 2;
}

SphereBraidClass sphere_class(const BraidWord& w) {
  if (w.strand_count() != 3)
    throw_error(errc::unsupported_strand_count,
                "sphere class is defined for 3 strands, got " +
                    std::to_string(w.strand_count()));
  int e = exponent_sum(w) % 4;
  if (e < 0) e += 4;
  return SphereBraidClass{permutation_of(w), e};
}

HomotopyClass z2_class(const BraidWord& w) {
  SphereBraidClass c = sphere_class(w);
  if (!c.perm.is_identity())
    throw_error(errc::not_pure, "word permutes the strands: " + format_word_text(w));
  return c.esum_mod4 == 0 ? HomotopyClass::trivial : HomotopyClass::nontrivial;
}

BraidWord canonical_rep(const SphereBraidClass& c) {
  if (!c.parity_consistent())
    throw_error(errc::invalid_class, "permutation parity does not match exponent sum mod 2");
  // Shortest-first enumeration in a fixed letter order; 12 classes, all hit
  // by length 3.
  static const int kLetters[4] = {1, -1, 2, -2};
  std::vector<std::vector<int>> level = {{}};
  for (int len = 0; len <= 4; ++len) {
    for (const auto& letters : level) {
      BraidWord w(3, letters);
      if (sphere_class(w) == c) return w;
    }
    std::vector<std::vector<int>> next;
    next.reserve(level.size() * 4);
    for (const auto& letters : level)
      for (int l : kLetters) {
        auto ext = letters;
        ext.push_back(l);
        next.push_back(std::move(ext));
      }
    level = std::move(next);
  }
  throw_error(errc::invalid_class, "no representative found");  // unreachable
}

namespace {

BraidWord conj(const BraidWord& g, const BraidWord& w) {
  return compose(compose(g, w), inverse(g));
}

std::string sigma(int i, int sign) {
  return "s" + std::to_string(i) + (sign < 0 ? "^-1" : "");
}

}  // namespace

VerificationReport verify_lemma1() {
  const BraidWord s1(3, {1}), s2(3, {2});
  const BraidWord r1 = flip(1, 3), r2 = flip(2, 3), r3 = flip(3, 3);
  auto prod = [](const BraidWord& a, const BraidWord& b, const BraidWord& c) {
    return compose(compose(a, b), c);
  };

  VerificationReport rep;
  rep.title = "conjugation table for the flip subgroup at n = 3";
  auto entry = [&](const std::string& name,
                   const std::vector<std::pair<BraidWord, BraidWord>>& eqs) {
    bool ok = true;
    for (const auto& [lhs, rhs] : eqs) ok = ok && equal_in_group(lhs, rhs);
    rep.checks.push_back({name, ok});
  };

  entry("s1 r1 s1^-1 = r2", {{conj(s1, r1), r2}});
  entry("s2 r1 s2^-1 = s2^-1 r1 s2 = r1",
        {{conj(s2, r1), r1}, {conj(inverse(s2), r1), r1}});
  entry("s1 r2 s1^-1 = r2 r1 r2^-1", {{conj(s1, r2), prod(r2, r1, inverse(r2))}});
  entry("s2 r2 s2^-1 = r3", {{conj(s2, r2), r3}});
  entry("s1 r3 s1^-1 = s1^-1 r3 s1 = r3",
        {{conj(s1, r3), r3}, {conj(inverse(s1), r3), r3}});
  entry("s2 r3 s2^-1 = r1^-1 r2 r1 = r3 r2 r3^-1",
        {{conj(s2, r3), prod(inverse(r1), r2, r1)},
         {conj(s2, r3), prod(r3, r2, inverse(r3))}});
  entry("s1^-1 r1 s1 = r1^-1 r2 r1",
        {{conj(inverse(s1), r1), prod(inverse(r1), r2, r1)}});
  entry("s1^-1 r2 s1 = r1", {{conj(inverse(s1), r2), r1}});
  entry("s2^-1 r2 s2 = r1 r3 r1^-1 = r2^-1 r3 r2",
        {{conj(inverse(s2), r2), prod(r1, r3, inverse(r1))},
         {conj(inverse(s2), r2), prod(inverse(r2), r3, r2)}});
  entry("s2^-1 r3 s2 = r2", {{conj(inverse(s2), r3), r2}});
  return rep;
}

VerificationReport verify_lemma1_general(int n) {
  if (n < 3 || n > 7)
    throw_error(errc::index_out_of_range, "supported strand counts are 3..7");

  std::vector<BraidWord> r;
  r.reserve(n + 1);
  r.emplace_back(n);  // unused slot 0
  for (int i = 1; i <= n; ++i) r.push_back(flip(i, n));
  auto prod = [](const BraidWord& a, const BraidWord& b, const BraidWord& c) {
    return compose(compose(a, b), c);
  };

  VerificationReport rep;
  rep.title = "conjugation families for the flip subgroup at n = " + std::to_string(n);
  auto entry = [&](const std::string& name, const BraidWord& lhs, const BraidWord& rhs) {
    rep.checks.push_back({name, equal_in_group(lhs, rhs)});
  };

  // commuting pairs: i - j > 1 or j - i > 0
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      if (!(i - j > 1 || j - i > 0)) continue;
      BraidWord sj(n, {j});
      entry(sigma(j, +1) + " r" + std::to_string(i) + " " + sigma(j, -1) + " = r" +
                std::to_string(i),
            conj(sj, r[i]), r[i]);
      entry(sigma(j, -1) + " r" + std::to_string(i) + " " + sigma(j, +1) + " = r" +
                std::to_string(i),
            conj(inverse(sj), r[i]), r[i]);
    }
  // j = i - 1
  for (int i = 2; i <= n; ++i) {
    BraidWord s(n, {i - 1});
    entry(sigma(i - 1, +1) + " r" + std::to_string(i) + " " + sigma(i - 1, -1) +
              " = r" + std::to_string(i) + " r" + std::to_string(i - 1) + " r" +
              std::to_string(i) + "^-1",
          conj(s, r[i]), prod(r[i], r[i - 1], inverse(r[i])));
    entry(sigma(i - 1, -1) + " r" + std::to_string(i) + " " + sigma(i - 1, +1) +
              " = r" + std::to_string(i - 1),
          conj(inverse(s), r[i]), r[i - 1]);
  }
  // j = i, stated for i < n - 1
  for (int i = 1; i < n - 1; ++i) {
    BraidWord s(n, {i});
    entry(sigma(i, +1) + " r" + std::to_string(i) + " " + sigma(i, -1) + " = r" +
              std::to_string(i + 1),
          conj(s, r[i]), r[i + 1]);
    entry(sigma(i, -1) + " r" + std::to_string(i) + " " + sigma(i, +1) + " = r" +
              std::to_string(i) + "^-1 r" + std::to_string(i + 1) + " r" +
              std::to_string(i),
          conj(inverse(s), r[i]), prod(inverse(r[i]), r[i + 1], r[i]));
  }
  return rep;
}

}  // namespace rotbraid
