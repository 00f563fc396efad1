#include "braidforge/garside.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace braidforge {

namespace {

// Arrangement semantics: perm.image(j) is the strand occupying position j at
// the bottom of the (positive) braid, strands named by their top position.

// sigma_i left-divides the simple A  <=>  the strands entering at positions
// i, i+1 cross  <=>  their end positions are inverted.
std::vector<bool> starting_set(const Permutation& a) {
  const Permutation pos = a.inverse();
  std::vector<bool> set(a.size(), false);
  for (int i = 1; i < a.size(); ++i) set[i] = pos.image(i) > pos.image(i + 1);
  return set;
}

// sigma_i right-divides A  <=>  the strands ending at positions i, i+1 cross.
std::vector<bool> finishing_set(const Permutation& a) {
  std::vector<bool> set(a.size(), false);
  for (int i = 1; i < a.size(); ++i) set[i] = a.image(i) > a.image(i + 1);
  return set;
}

// Delta A Delta^{-1} on arrangements: conjugate both position and strand
// labels by the longest permutation.
Permutation tau(const Permutation& a) {
  const int n = a.size();
  std::vector<int> images(n);
  for (int j = 1; j <= n; ++j) images[j - 1] = n + 1 - a.image(n + 1 - j);
  return Permutation::from_images(std::move(images));
}

// Delta sigma_i^{-1}: the simple complement used to push inverse letters into
// a Delta power and a positive factor.
Permutation delta_over_letter(int n, int i) {
  Permutation p = Permutation::transposition(n, i);
  std::vector<int> images(n);
  for (int j = 1; j <= n; ++j) images[j - 1] = n + 1 - p.image(j);
  return Permutation::from_images(std::move(images));
}

// Moves letters from the head of `right` into the tail of `left` until the
// pair is left-weighted. Returns true when anything moved.
bool rebalance(Permutation& left, Permutation& right) {
  bool moved = false;
  for (;;) {
    const std::vector<bool> need = starting_set(right);
    const std::vector<bool> have = finishing_set(left);
    int pick = 0;
    for (int i = 1; i < left.size(); ++i) {
      if (need[i] && !have[i]) {
        pick = i;
        break;
      }
    }
    if (pick == 0) return moved;
    left.apply_letter(pick);  // append sigma_pick
    // Prepend sigma_pick^{-1} to `right`: relabel incoming strands.
    std::vector<int> images = right.images();
    for (int& v : images) {
      if (v == pick)
        v = pick + 1;
      else if (v == pick + 1)
        v = pick;
    }
    right = Permutation::from_images(std::move(images));
    moved = true;
  }
}

bool is_longest(const Permutation& a) {
  const int n = a.size();
  for (int j = 1; j <= n; ++j)
    if (a.image(j) != n + 1 - j) return false;
  return true;
}

}  // namespace

SimpleElement::SimpleElement(Permutation perm) : perm_(std::move(perm)) {
  if (perm_.is_identity())
    throw NotAProperSimple("identity permutation is not a proper simple element");
}

BraidWord SimpleElement::word() const {
  // Straight insertion: fix positions left to right, bubbling each target
  // strand into place. Reduced, so the word is a permutation braid.
  const int n = perm_.size();
  std::vector<int> arr(n);
  for (int j = 0; j < n; ++j) arr[j] = j + 1;
  std::vector<int> letters;
  letters.reserve(perm_.inversions());
  for (int p = 0; p < n; ++p) {
    const int want = perm_.image(p + 1);
    int q = p;
    while (arr[q] != want) ++q;
    for (; q > p; --q) {
      std::swap(arr[q - 1], arr[q]);
      letters.push_back(q);
    }
  }
  return BraidWord(n, std::move(letters));
}

SimpleElement permutation_to_simple(const Permutation& p) { return SimpleElement(p); }

NormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  int power = 0;
  std::vector<Permutation> factors;
  factors.reserve(w.length());
  for (int e : w.letters()) {
    const int i = std::abs(e);
    if (e > 0) {
      factors.push_back(Permutation::transposition(n, i));
    } else {
      // sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1}); commuting the Delta
      // inverse to the front conjugates everything collected so far.
      --power;
      for (Permutation& f : factors) f = tau(f);
      factors.push_back(delta_over_letter(n, i));
    }
  }

  if (n >= 2) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t t = 0; t + 1 < factors.size(); ++t)
        if (rebalance(factors[t], factors[t + 1])) changed = true;
    }
  }

  // At the fixed point identity factors have drained to the back and Delta
  // factors have filled up at the front.
  while (!factors.empty() && factors.back().is_identity()) factors.pop_back();
  std::size_t lead = 0;
  while (lead < factors.size() && is_longest(factors[lead])) ++lead;
  power += static_cast<int>(lead);

  NormalForm nf{n, power, {}};
  nf.factors.reserve(factors.size() - lead);
  for (std::size_t t = lead; t < factors.size(); ++t)
    nf.factors.emplace_back(factors[t]);
  return nf;
}

BraidWord NormalForm::flatten() const {
  BraidWord word = BraidWord::identity(strands);
  if (delta_power != 0 && strands >= 2) {
    const BraidWord delta = permutation_to_simple(Permutation::longest(strands)).word();
    const BraidWord block = delta_power > 0 ? delta : delta.inverse();
    for (int rep = 0; rep < std::abs(delta_power); ++rep) word.append(block);
  }
  for (const SimpleElement& f : factors) word.append(f.word());
  return word;
}

bool braids_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw IncompatibleWords("comparing words with different strand counts");
  if (exponent_sum(u) != exponent_sum(v)) return false;
  if (!(permutation_of(u) == permutation_of(v))) return false;
  return normal_form(u) == normal_form(v);
}

bool is_pure(const BraidWord& w) { return permutation_of(w).is_identity(); }

}  // namespace braidforge
