#pragma once

#include <vector>

#include "braidforge/braid.hpp"

namespace braidforge {

/// Positive braid in which every pair of strands crosses at most once.
/// Determined by its (non-identity) permutation; the canonical positive word
/// is recovered by straight insertion and has length = inversion count.
class SimpleElement {
 public:
  explicit SimpleElement(Permutation perm);

  const Permutation& permutation() const { return perm_; }
  int strands() const { return perm_.size(); }
  int length() const { return perm_.inversions(); }
  BraidWord word() const;

  bool operator==(const SimpleElement& other) const = default;

 private:
  Permutation perm_;
};

/// Left-greedy form Delta^p A_1 ... A_l with every factor a proper simple
/// element (neither identity nor Delta) and each consecutive pair
/// left-weighted. Unique per braid, so structural equality decides the word
/// problem.
struct NormalForm {
  int strands;
  int delta_power;
  std::vector<SimpleElement> factors;

  int canonical_length() const { return static_cast<int>(factors.size()); }
  BraidWord flatten() const;

  bool operator==(const NormalForm& other) const = default;
};

/// Canonical positive word of the simple element with the given permutation.
/// Throws NotAProperSimple on the identity.
SimpleElement permutation_to_simple(const Permutation& p);

NormalForm normal_form(const BraidWord& w);

/// Word-problem decision; throws IncompatibleWords on strand mismatch.
bool braids_equal(const BraidWord& u, const BraidWord& v);

bool is_pure(const BraidWord& w);

}  // namespace braidforge
