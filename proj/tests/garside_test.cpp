#include <doctest.h>

#include <cstdlib>
#include <functional>
#include <random>

#include "braidforge/garside.hpp"

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

TEST_CASE("permutation braids") {
  CHECK_THROWS_AS(permutation_to_simple(Permutation::identity(3)), NotAProperSimple);

  const SimpleElement half = permutation_to_simple(Permutation::longest(3));
  CHECK(half.length() == 3);
  CHECK(braids_equal(half.word(), delta_word(3, DeltaVariant::kAscendingStacks)));

  CHECK(permutation_to_simple(Permutation::transposition(4, 1)).word() == w(4, {1}));
  CHECK(permutation_to_simple(Permutation::from_images({2, 3, 1})).word() == w(3, {1, 2}));

  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    Permutation p = permutation_of(random_word(rng, n, 20));
    if (p.is_identity()) continue;
    const SimpleElement s = permutation_to_simple(p);
    CHECK(s.word().length() == p.inversions());
    CHECK(permutation_of(s.word()) == p);
  }
}

TEST_CASE("normal forms of the classic words") {
  const NormalForm half = normal_form(delta_word(5, DeltaVariant::kReverseStacks));
  CHECK(half.delta_power == 1);
  CHECK(half.canonical_length() == 0);
  CHECK(half == normal_form(delta_word(5, DeltaVariant::kAscendingStacks)));

  const NormalForm twist = normal_form(full_twist_word(5, FullTwistVariant::kE));
  CHECK(twist.delta_power == 2);
  CHECK(twist.canonical_length() == 0);
  CHECK(twist == normal_form(full_twist_word(5, FullTwistVariant::kD)));

  const NormalForm inv = normal_form(w(3, {-1}));
  CHECK(inv.delta_power == -1);
  CHECK(inv.canonical_length() == 1);
  CHECK(inv.factors[0].permutation() == Permutation::from_images({2, 3, 1}));
  CHECK(braids_equal(inv.flatten(), w(3, {-1})));
}

TEST_CASE("round trip and congruence on random words") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 5;
    const BraidWord u = random_word(rng, n, 1 + trial % 40);
    const NormalForm nf = normal_form(u);
    CHECK(braids_equal(u, nf.flatten()));
    CHECK(normal_form(nf.flatten()) == nf);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    BraidWord u = random_word(rng, n, 12);
    BraidWord noise = random_word(rng, n, 6);
    BraidWord v = concat(concat(u, noise), noise.inverse());
    REQUIRE(braids_equal(u, v));
    const BraidWord probe = random_word(rng, n, 8);
    CHECK(braids_equal(concat(u, probe), concat(v, probe)));
    CHECK(braids_equal(concat(probe, u), concat(probe, v)));
  }
}

TEST_CASE("equality fast paths and errors") {
  CHECK(braids_equal(delta_word(4, DeltaVariant::kAscendingStacks),
                     delta_word(4, DeltaVariant::kDescendingStacks)));
  CHECK_FALSE(braids_equal(w(3, {1, 2}), w(3, {2, 1})));
  CHECK_THROWS_AS(braids_equal(w(3, {1}), w(4, {1})), IncompatibleWords);
}

TEST_CASE("last-strand pure factors collapse") {
  for (int n = 2; n <= 8; ++n) {
    BraidWord lhs = BraidWord::identity(n);
    for (int i = 1; i <= n - 1; ++i)
      lhs.append(expand_pure_generator(PureGenerator(i, n, n)));
    std::vector<int> down, up;
    for (int s = n - 1; s >= 1; --s) down.push_back(s);
    for (int s = 1; s <= n - 1; ++s) up.push_back(s);
    CHECK(braids_equal(lhs, concat(w(n, down), w(n, up))));
  }
}

TEST_CASE("purity") {
  CHECK(is_pure(full_twist_word(3, FullTwistVariant::kA)));
  CHECK_FALSE(is_pure(w(3, {1})));
  CHECK(is_pure(expand_pure_generator(PureGenerator(1, 3, 4))));
}

TEST_CASE("half twist conjugation against words") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;
    const BraidWord u = random_word(rng, n, 10);
    const BraidWord delta = delta_word(n, DeltaVariant::kAscendingStacks);
    CHECK(braids_equal(concat(delta, u), concat(conjugate_by_delta(u), delta)));
  }
}

TEST_CASE("positive words partition exactly as rewriting reachability") {
  // Independent oracle: two positive words of equal length are equal iff one
  // rewrites into the other using only the defining relations. Enumerate all
  // positive words of a fixed length and compare the reachability partition
  // with the normal-form partition.
  for (int n : {3, 4}) {
    const int len = 6;
    std::vector<std::vector<int>> words;
    std::vector<int> current(len, 1);
    for (;;) {
      words.push_back(current);
      int pos = len - 1;
      while (pos >= 0 && current[pos] == n - 1) current[pos--] = 1;
      if (pos < 0) break;
      ++current[pos];
    }

    auto index_of = [&](const std::vector<int>& w) {
      int idx = 0;
      for (int e : w) idx = idx * (n - 1) + (e - 1);
      return idx;
    };

    // Union-find over single rewriting moves.
    std::vector<int> parent(words.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < words.size(); ++i) {
      const std::vector<int>& w = words[i];
      for (int a = 0; a + 1 < len; ++a) {
        if (std::abs(w[a] - w[a + 1]) >= 2) {
          std::vector<int> m = w;
          std::swap(m[a], m[a + 1]);
          parent[find(static_cast<int>(i))] = find(index_of(m));
        }
        if (a + 2 < len && w[a] == w[a + 2] && std::abs(w[a] - w[a + 1]) == 1) {
          std::vector<int> m = w;  // i j i -> j i j
          m[a] = w[a + 1];
          m[a + 1] = w[a];
          m[a + 2] = w[a + 1];
          parent[find(static_cast<int>(i))] = find(index_of(m));
        }
      }
    }

    for (std::size_t i = 0; i < words.size(); i += 7) {
      for (std::size_t j = i + 1; j < words.size(); j += 5) {
        const bool reachable = find(static_cast<int>(i)) == find(static_cast<int>(j));
        const bool equal = braids_equal(BraidWord(n, words[i]), BraidWord(n, words[j]));
        REQUIRE(reachable == equal);
      }
    }
  }
}

TEST_CASE("normal form factors are proper and left weighted") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const NormalForm nf = normal_form(random_word(rng, n, 25));
    for (const SimpleElement& f : nf.factors) {
      CHECK_FALSE(f.permutation().is_identity());
      CHECK_FALSE(f.permutation() == Permutation::longest(n));
    }
  }
}
