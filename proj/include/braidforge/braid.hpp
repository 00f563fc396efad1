#pragma once

#include <cstdint>
#include <vector>

#include "braidforge/errors.hpp"

namespace braidforge {

/// Permutation of {1..n}, stored as the image list: image(j) is the strand
/// occupying position j after the braid, so that the permutation of a
/// concatenated word is compose(left, right) below.
class Permutation {
 public:
  explicit Permutation(int n);
  static Permutation identity(int n);
  static Permutation transposition(int n, int i);  // swaps i and i+1
  static Permutation longest(int n);               // j -> n+1-j
  static Permutation from_images(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int j) const { return images_[j - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  int inversions() const;

  /// Appends one Artin letter: swaps the entries at positions i, i+1.
  void apply_letter(int i);

  bool operator==(const Permutation& other) const = default;

 private:
  std::vector<int> images_;
};

/// Permutation of the word u.v given the permutations of u and v.
Permutation compose(const Permutation& left, const Permutation& right);

/// Word in the Artin generators of B_n. Letter e stands for
/// sigma_{|e|}^{sign(e)} with 1 <= |e| <= strands-1. The letter list is kept
/// exactly as given: free reduction is an explicit operation, never implicit.
class BraidWord {
 public:
  BraidWord(int strands, std::vector<int> letters);
  static BraidWord identity(int strands) { return BraidWord(strands, {}); }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  void append(const BraidWord& other);  // requires equal strand counts

  bool operator==(const BraidWord& other) const = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Concatenation; throws IncompatibleWords on strand mismatch.
BraidWord concat(const BraidWord& u, const BraidWord& v);

/// Pure braid generator alpha_{ij} on a fixed strand count, 1 <= i < j <= strands.
struct PureGenerator {
  int i;
  int j;
  int strands;

  PureGenerator(int i_, int j_, int strands_);
};

enum class DeltaVariant {
  kAscendingStacks = 1,   // s1 (s2 s1) ... (s_{n-1} ... s1)
  kDescendingStacks = 2,  // (s1 ... s_{n-1}) ... (s1 s2) s1
  kReverseStacks = 3,     // (s_{n-1} ... s1)(s_{n-1} ... s2) ... s_{n-1}
  kTailStacks = 4,        // s_{n-1} (s_{n-2} s_{n-1}) ... (s1 ... s_{n-1})
};

enum class FullTwistVariant {
  kA,       // s1^2 (s2 s1^2 s2) ... (s_{n-1} ... s2 s1^2 s2 ... s_{n-1})
  kB,       // the same blocks in reverse order
  kC,       // descending stacks, s1^2, ascending stacks
  kD,       // (s1 ... s_{n-1})^n
  kDprime,  // (s_{n-1} ... s1)^n
  kE,       // (a_{1n} ... a_{n-1,n}) ... (a_{13} a_{23}) a_{12}, expanded
  kF,       // a_{12} (a_{13} a_{23}) ... (a_{1n} ... a_{n-1,n}), expanded
};

/// Removes adjacent cancelling pairs until none remain. Idempotent.
BraidWord free_reduce(const BraidWord& w);

/// Image of the word in the symmetric group; letter e acts as the
/// transposition (|e|, |e|+1).
Permutation permutation_of(const BraidWord& w);

/// a_{ij} -> s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^{-1} ... s_{j-1}^{-1}
BraidWord expand_pure_generator(const PureGenerator& g);

/// One of the four positive words for the half twist on n strands, n >= 2.
BraidWord delta_word(int n, DeltaVariant variant);

/// One of the seven words for the full twist on n strands, n >= 2.
BraidWord full_twist_word(int n, FullTwistVariant variant);

/// Raises every index by one; requires max index <= strands-2.
BraidWord shift(const BraidWord& w);

/// Letterwise i -> n-i; represents Delta w Delta^{-1}.
BraidWord conjugate_by_delta(const BraidWord& w);

/// Sum of letter signs; constant on braid equivalence classes.
int exponent_sum(const BraidWord& w);

}  // namespace braidforge
