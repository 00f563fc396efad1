#include <doctest.h>

#include <random>

#include "braidforge/braid.hpp"

using namespace braidforge;

namespace {

BraidWord w(int n, std::vector<int> letters) { return BraidWord(n, std::move(letters)); }

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> index(1, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> letters;
  for (int i = 0; i < len; ++i) letters.push_back(coin(rng) ? index(rng) : -index(rng));
  return BraidWord(n, std::move(letters));
}

}  // namespace

TEST_CASE("words validate their letters") {
  CHECK_THROWS_AS(BraidWord(3, {3}), InvalidLetter);
  CHECK_THROWS_AS(BraidWord(1, {1}), InvalidLetter);
  CHECK_THROWS_AS(BraidWord(0, {}), InvalidStrandCount);
  CHECK(BraidWord::identity(1).empty());
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(w(3, {1, -1})) == w(3, {}));
  CHECK(free_reduce(w(3, {1, 2, -2, -1, 1})) == w(3, {1}));
  CHECK(free_reduce(w(4, {1, 3})) == w(4, {1, 3}));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord u = random_word(rng, 5, 30);
    const BraidWord once = free_reduce(u);
    CHECK(free_reduce(once) == once);
    CHECK(once.length() <= u.length());
    CHECK(permutation_of(once) == permutation_of(u));
    CHECK(exponent_sum(once) == exponent_sum(u));
  }
}

TEST_CASE("permutation images") {
  CHECK(permutation_of(w(3, {1})) == Permutation::transposition(3, 1));
  CHECK(permutation_of(w(3, {1, 2})) == Permutation::from_images({2, 3, 1}));
  CHECK(permutation_of(w(3, {1, 1})).is_identity());

  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const BraidWord u = random_word(rng, n, 12);
    const BraidWord v = random_word(rng, n, 12);
    CHECK(permutation_of(concat(u, v)) ==
          compose(permutation_of(u), permutation_of(v)));
  }
}

TEST_CASE("pure generator expansion") {
  CHECK(expand_pure_generator(PureGenerator(1, 2, 3)) == w(3, {1, 1}));
  CHECK(expand_pure_generator(PureGenerator(1, 3, 3)) == w(3, {2, 1, 1, -2}));
  CHECK(expand_pure_generator(PureGenerator(2, 3, 3)) == w(3, {2, 2}));

  for (int n = 2; n <= 8; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const BraidWord word = expand_pure_generator(PureGenerator(i, j, n));
        CHECK(word.length() == 2 * (j - i));
        CHECK(permutation_of(word).is_identity());
        CHECK(exponent_sum(word) == 2);
      }
}

TEST_CASE("half-twist words") {
  CHECK(delta_word(3, DeltaVariant::kAscendingStacks) == w(3, {1, 2, 1}));
  CHECK(delta_word(3, DeltaVariant::kTailStacks) == w(3, {2, 1, 2}));
  for (DeltaVariant v :
       {DeltaVariant::kAscendingStacks, DeltaVariant::kDescendingStacks,
        DeltaVariant::kReverseStacks, DeltaVariant::kTailStacks}) {
    CHECK(delta_word(2, v) == w(2, {1}));
    for (int n = 2; n <= 8; ++n) {
      const BraidWord word = delta_word(n, v);
      CHECK(word.length() == n * (n - 1) / 2);
      for (int e : word.letters()) CHECK(e > 0);
      CHECK(permutation_of(word) == Permutation::longest(n));
    }
  }
  CHECK_THROWS_AS(delta_word(1, DeltaVariant::kAscendingStacks), InvalidStrandCount);
}

TEST_CASE("full-twist words") {
  CHECK(full_twist_word(2, FullTwistVariant::kA) == w(2, {1, 1}));
  CHECK(full_twist_word(3, FullTwistVariant::kD) == w(3, {1, 2, 1, 2, 1, 2}));
  CHECK(full_twist_word(3, FullTwistVariant::kF) == w(3, {1, 1, 2, 1, 1, -2, 2, 2}));
  for (FullTwistVariant v :
       {FullTwistVariant::kA, FullTwistVariant::kB, FullTwistVariant::kC,
        FullTwistVariant::kD, FullTwistVariant::kDprime, FullTwistVariant::kE,
        FullTwistVariant::kF}) {
    for (int n = 2; n <= 7; ++n) {
      const BraidWord word = full_twist_word(n, v);
      CHECK(permutation_of(word).is_identity());
      CHECK(exponent_sum(word) == n * (n - 1));
    }
  }
  CHECK_THROWS_AS(full_twist_word(1, FullTwistVariant::kA), InvalidStrandCount);
}

TEST_CASE("shift") {
  CHECK(shift(w(4, {1, 2, -1})) == w(4, {2, 3, -2}));
  // The index pattern 1 2 4 3 -> 2 3 5 4 needs at least six strands to stay
  // inside the group.
  CHECK(shift(w(6, {1, 2, 4, 3})) == w(6, {2, 3, 5, 4}));
  CHECK_THROWS_AS(shift(w(3, {2})), ShiftOutOfRange);
  CHECK_THROWS_AS(shift(w(5, {1, 2, 4, 3})), ShiftOutOfRange);
}

TEST_CASE("conjugation by the half twist") {
  CHECK(conjugate_by_delta(w(4, {1})) == w(4, {3}));
  CHECK(conjugate_by_delta(w(3, {1, 2})) == w(3, {2, 1}));
  CHECK(conjugate_by_delta(w(2, {1, 1})) == w(2, {1, 1}));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const BraidWord u = random_word(rng, 2 + trial % 6, 15);
    CHECK(conjugate_by_delta(conjugate_by_delta(u)) == u);
  }
}

TEST_CASE("exponent sums") {
  CHECK(exponent_sum(delta_word(4, DeltaVariant::kAscendingStacks)) == 6);
  CHECK(exponent_sum(full_twist_word(4, FullTwistVariant::kD)) == 12);
  CHECK(exponent_sum(w(3, {1, -2})) == 0);
}
