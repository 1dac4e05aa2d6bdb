#include <doctest.h>

#include "rotbraid/artin.hpp"
#include "rotbraid/quotient.hpp"
#include "support/testutil.hpp"

using namespace rotbraid;

TEST_CASE("empty word acts as the identity") {
  FreeAutomorphism a = artin_action(BraidWord(3));
  CHECK(a == FreeAutomorphism::identity(3));
  for (int k = 1; k <= 3; ++k)
    CHECK(a.image_of(k) == FreeWord::generator(k));
}

TEST_CASE("generator action") {
  FreeAutomorphism a = artin_action(make_word(3, {1}));
  CHECK(a.image_of(1) == FreeWord({1, 2, -1}));
  CHECK(a.image_of(2) == FreeWord({1}));
  CHECK(a.image_of(3) == FreeWord({3}));
}

TEST_CASE("inverse pair acts as the identity") {
  CHECK(artin_action(make_word(3, {1, -1})) == FreeAutomorphism::identity(3));
  CHECK(artin_action(make_word(3, {-2, 2})) == FreeAutomorphism::identity(3));
}

TEST_CASE("equal_in_group on the defining identities") {
  CHECK(equal_in_group(make_word(3, {1, 2, 1}), make_word(3, {2, 1, 2})));
  // the two expressions for the middle twist generator
  CHECK(equal_in_group(make_word(3, {2, 1, 1, -2}), make_word(3, {-1, 2, 2, 1})));
  CHECK_FALSE(equal_in_group(make_word(3, {1}), make_word(3, {2})));
  CHECK_THROWS_AS(equal_in_group(BraidWord(3), BraidWord(4)), Error);
}

TEST_CASE("action is a homomorphism") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng.below(3));
    BraidWord a = testutil::random_word(rng, n, 8);
    BraidWord b = testutil::random_word(rng, n, 8);
    CHECK(artin_action(compose(a, b)) == artin_action(a).then(artin_action(b)));
  }
}

TEST_CASE("the product x1...xn is preserved") {
  Rng rng(32);
  for (int n = 3; n <= 5; ++n) {
    std::vector<int> full;
    for (int k = 1; k <= n; ++k) full.push_back(k);
    FreeWord product(full);
    for (int i = 1; i < n; ++i)
      for (int sign : {1, -1})
        CHECK(artin_action(make_word(n, {sign * i})).apply(product) == product);
    for (int trial = 0; trial < 34; ++trial) {
      BraidWord w = testutil::random_word(rng, n, 14);
      CHECK(artin_action(w).apply(product) == product);
    }
  }
}

TEST_CASE("equality is consistent with composition") {
  Rng rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    BraidWord a = testutil::random_word(rng, 3, 8);
    BraidWord b = testutil::random_word(rng, 3, 8);
    // a' differs from a by a cancelling pair, b' by a braid-relation flip
    std::vector<int> ap = a.letters();
    int pos = static_cast<int>(rng.below(ap.size() + 1));
    int idx = 1 + static_cast<int>(rng.below(2));
    ap.insert(ap.begin() + pos, {idx, -idx});
    BraidWord a2(3, ap);
    BraidWord b2 = compose(compose(b, make_word(3, {1, 2, 1})),
                           inverse(make_word(3, {2, 1, 2})));
    REQUIRE(equal_in_group(a, a2));
    REQUIRE(equal_in_group(b, b2));
    CHECK(equal_in_group(compose(a, b), compose(a2, b2)));
  }
}

TEST_CASE("free reduction never changes the group element") {
  Rng rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    BraidWord w = testutil::random_word(rng, 4, 14);
    CHECK(equal_in_group(w, free_reduce(w)));
  }
}
