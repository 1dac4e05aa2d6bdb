#include <doctest.h>

#include "rotbraid/braid.hpp"
#include "rotbraid/quotient.hpp"
#include "support/testutil.hpp"

using namespace rotbraid;

TEST_CASE("make_word basics") {
  BraidWord a12 = make_word(3, {1, 1});
  CHECK(a12.strand_count() == 3);
  CHECK(a12.letters() == std::vector<int>{1, 1});

  BraidWord empty = make_word(3, {});
  CHECK(empty.empty());

  CHECK_THROWS_AS(make_word(3, {3}), Error);
  CHECK_THROWS_AS(make_word(3, {-3}), Error);
  try {
    make_word(3, {3});
  } catch (const Error& e) {
    CHECK(e.code() == errc::index_out_of_range);
  }
  CHECK_THROWS_AS(make_word(1, {}), Error);
}

TEST_CASE("compose") {
  BraidWord s1(3, {1}), s2(3, {2});
  CHECK(compose(s1, s1).letters() == std::vector<int>{1, 1});
  CHECK(compose(s1, BraidWord(3)) == s1);
  // s1 s2^2 s1 is the first flip
  BraidWord r1 = compose(compose(s1, make_word(3, {2, 2})), s1);
  CHECK(r1 == flip(1, 3));
  CHECK_THROWS_AS(compose(s1, BraidWord(4)), Error);
}

TEST_CASE("inverse") {
  CHECK(inverse(make_word(3, {1, 2})).letters() == std::vector<int>{-2, -1});
  CHECK(inverse(BraidWord(3)).empty());
  CHECK(inverse(make_word(3, {1, 1})).letters() == std::vector<int>{-1, -1});

  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    BraidWord w = testutil::random_word(rng, 3 + trial % 3, 12);
    CHECK(free_reduce(compose(w, inverse(w))).empty());
  }
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(make_word(3, {1, -1})).empty());
  CHECK(free_reduce(make_word(3, {1, 2, -2, 1})).letters() == std::vector<int>{1, 1});
  // the Artin relation is not free cancellation
  CHECK(free_reduce(make_word(3, {1, 2, 1})).letters() == std::vector<int>{1, 2, 1});
}

TEST_CASE("exponent_sum") {
  CHECK(exponent_sum(flip(2, 3)) == 4);
  CHECK(exponent_sum(BraidWord(3)) == 0);
  CHECK(exponent_sum(full_twist(3)) == 6);
}

TEST_CASE("permutation_of") {
  CHECK(permutation_of(make_word(3, {1})).images() == std::vector<int>{2, 1, 3});
  CHECK(permutation_of(make_word(3, {2})).images() == std::vector<int>{1, 3, 2});
  CHECK(permutation_of(make_word(3, {1, 2})).images() == std::vector<int>{2, 3, 1});
  // sign is ignored
  CHECK(permutation_of(make_word(3, {-1})).images() == std::vector<int>{2, 1, 3});
}

TEST_CASE("is_pure") {
  CHECK(is_pure(make_word(3, {1, 1})));
  CHECK_FALSE(is_pure(make_word(3, {1})));
  CHECK(is_pure(flip(3, 3)));
}

TEST_CASE("pure_generator matches the three twists at n = 3") {
  CHECK(pure_generator(1, 3, 3).letters() == std::vector<int>{2, 1, 1, -2});
  CHECK(pure_generator(2, 3, 3).letters() == std::vector<int>{2, 2});
  CHECK(pure_generator(1, 2, 3).letters() == std::vector<int>{1, 1});
  CHECK_THROWS_AS(pure_generator(2, 2, 3), Error);
  CHECK_THROWS_AS(pure_generator(0, 2, 3), Error);
  CHECK_THROWS_AS(pure_generator(1, 4, 3), Error);
}

TEST_CASE("pure generators are pure up to n = 7") {
  for (int n = 3; n <= 7; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) CHECK(is_pure(pure_generator(i, j, n)));
}

TEST_CASE("free reduction preserves permutation and exponent sum") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    BraidWord w = testutil::random_word(rng, 3, 16);
    BraidWord r = free_reduce(w);
    CHECK(permutation_of(r) == permutation_of(w));
    CHECK(exponent_sum(r) == exponent_sum(w));
  }
}

TEST_CASE("exponent sum is a homomorphism") {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    BraidWord a = testutil::random_word(rng, 4, 10);
    BraidWord b = testutil::random_word(rng, 4, 10);
    CHECK(exponent_sum(compose(a, b)) == exponent_sum(a) + exponent_sum(b));
    CHECK(exponent_sum(inverse(a)) == -exponent_sum(a));
  }
}

TEST_CASE("permutation_of is a homomorphism and kills the braid relation") {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    BraidWord a = testutil::random_word(rng, 4, 10);
    BraidWord b = testutil::random_word(rng, 4, 10);
    CHECK(permutation_of(compose(a, b)) == permutation_of(a).then(permutation_of(b)));
  }
  CHECK(permutation_of(make_word(3, {1, 2, 1})) == permutation_of(make_word(3, {2, 1, 2})));
}

TEST_CASE("permutation parity equals exponent sum mod 2") {
  Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    BraidWord w = testutil::random_word(rng, 5, 14);
    int parity_bit = permutation_of(w).parity() == 1 ? 0 : 1;
    CHECK(parity_bit == ((exponent_sum(w) % 2) + 2) % 2);
  }
}

TEST_CASE("text format round trip") {
  BraidWord r1 = parse_word_text("1 2 2 1", 3);
  CHECK(r1 == flip(1, 3));
  CHECK(format_word_text(r1) == "1 2 2 1");
  CHECK(parse_word_text("", 3).empty());
  CHECK(format_word_text(BraidWord(3)).empty());
  CHECK_THROWS_AS(parse_word_text("1 x", 3), Error);
  CHECK_THROWS_AS(parse_word_text("0", 3), Error);
  CHECK_THROWS_AS(parse_word_text("3", 3), Error);

  Rng rng(25);
  for (int trial = 0; trial < 50; ++trial) {
    BraidWord w = testutil::random_word(rng, 4, 12);
    CHECK(parse_word_text(format_word_text(w), 4) == w);
  }
}
