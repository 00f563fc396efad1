#include "braidforge/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace braidforge {

Permutation::Permutation(int n) {
  if (n < 1) throw InvalidStrandCount("permutation size must be >= 1");
  images_.resize(n);
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::identity(int n) { return Permutation(n); }

Permutation Permutation::transposition(int n, int i) {
  Permutation p(n);
  if (i < 1 || i + 1 > n) throw InvalidLetter("transposition index out of range");
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Permutation Permutation::longest(int n) {
  Permutation p(n);
  std::reverse(p.images_.begin(), p.images_.end());
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw InvalidStrandCount("permutation size must be >= 1");
  std::vector<bool> seen(n, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v - 1]) throw Error("image list is not a permutation");
    seen[v - 1] = true;
  }
  Permutation p(n);
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (int j = 1; j <= size(); ++j)
    if (images_[j - 1] != j) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p(size());
  for (int j = 1; j <= size(); ++j) p.images_[images_[j - 1] - 1] = j;
  return p;
}

int Permutation::inversions() const {
  int count = 0;
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (images_[a] > images_[b]) ++count;
  return count;
}

void Permutation::apply_letter(int i) {
  if (i < 1 || i + 1 > size()) throw InvalidLetter("letter index out of range");
  std::swap(images_[i - 1], images_[i]);
}

Permutation compose(const Permutation& left, const Permutation& right) {
  if (left.size() != right.size())
    throw IncompatibleWords("composing permutations of different sizes");
  std::vector<int> images(left.size());
  for (int j = 1; j <= left.size(); ++j) images[j - 1] = left.image(right.image(j));
  return Permutation::from_images(std::move(images));
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw InvalidStrandCount("strand count must be >= 1");
  for (int e : letters_) {
    if (e == 0 || std::abs(e) >= strands_)
      throw InvalidLetter("letter " + std::to_string(e) + " invalid on " +
                          std::to_string(strands_) + " strands");
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<int> letters(letters_.rbegin(), letters_.rend());
  for (int& e : letters) e = -e;
  return BraidWord(strands_, std::move(letters));
}

void BraidWord::append(const BraidWord& other) {
  if (strands_ != other.strands_)
    throw IncompatibleWords("appending words with different strand counts");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  BraidWord result = u;
  result.append(v);
  return result;
}

PureGenerator::PureGenerator(int i_, int j_, int strands_)
    : i(i_), j(j_), strands(strands_) {
  if (!(1 <= i && i < j && j <= strands))
    throw Error("pure generator needs 1 <= i < j <= strands");
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.letters().size());
  for (int e : w.letters()) {
    if (!out.empty() && out.back() == -e)
      out.pop_back();
    else
      out.push_back(e);
  }
  return BraidWord(w.strands(), std::move(out));
}

Permutation permutation_of(const BraidWord& w) {
  Permutation p(w.strands());
  for (int e : w.letters()) p.apply_letter(std::abs(e));
  return p;
}

BraidWord expand_pure_generator(const PureGenerator& g) {
  std::vector<int> letters;
  letters.reserve(2 * (g.j - g.i));
  for (int s = g.j - 1; s > g.i; --s) letters.push_back(s);
  letters.push_back(g.i);
  letters.push_back(g.i);
  for (int s = g.i + 1; s <= g.j - 1; ++s) letters.push_back(-s);
  return BraidWord(g.strands, std::move(letters));
}

BraidWord delta_word(int n, DeltaVariant variant) {
  if (n < 2) throw InvalidStrandCount("half twist needs n >= 2");
  std::vector<int> letters;
  letters.reserve(n * (n - 1) / 2);
  switch (variant) {
    case DeltaVariant::kAscendingStacks:
      for (int m = 1; m <= n - 1; ++m)
        for (int s = m; s >= 1; --s) letters.push_back(s);
      break;
    case DeltaVariant::kDescendingStacks:
      for (int m = n - 1; m >= 1; --m)
        for (int s = 1; s <= m; ++s) letters.push_back(s);
      break;
    case DeltaVariant::kReverseStacks:
      for (int m = 1; m <= n - 1; ++m)
        for (int s = n - 1; s >= m; --s) letters.push_back(s);
      break;
    case DeltaVariant::kTailStacks:
      for (int m = n - 1; m >= 1; --m)
        for (int s = m; s <= n - 1; ++s) letters.push_back(s);
      break;
  }
  return BraidWord(n, std::move(letters));
}

namespace {

void push_run(std::vector<int>& letters, int from, int to) {
  if (from <= to)
    for (int s = from; s <= to; ++s) letters.push_back(s);
  else
    for (int s = from; s >= to; --s) letters.push_back(s);
}

}  // namespace

BraidWord full_twist_word(int n, FullTwistVariant variant) {
  if (n < 2) throw InvalidStrandCount("full twist needs n >= 2");
  std::vector<int> letters;
  letters.reserve(n * (n - 1));
  switch (variant) {
    case FullTwistVariant::kA:
      for (int m = 1; m <= n - 1; ++m) {
        push_run(letters, m, 1);
        push_run(letters, 1, m);
      }
      break;
    case FullTwistVariant::kB:
      for (int m = n - 1; m >= 1; --m) {
        push_run(letters, m, 1);
        push_run(letters, 1, m);
      }
      break;
    case FullTwistVariant::kC:
      for (int m = n - 1; m >= 2; --m) push_run(letters, 1, m);
      letters.push_back(1);
      letters.push_back(1);
      for (int m = 2; m <= n - 1; ++m) push_run(letters, m, 1);
      break;
    case FullTwistVariant::kD:
      for (int rep = 0; rep < n; ++rep) push_run(letters, 1, n - 1);
      break;
    case FullTwistVariant::kDprime:
      for (int rep = 0; rep < n; ++rep) push_run(letters, n - 1, 1);
      break;
    case FullTwistVariant::kE: {
      BraidWord word = BraidWord::identity(n);
      for (int j = n; j >= 2; --j)
        for (int i = 1; i <= j - 1; ++i)
          word.append(expand_pure_generator(PureGenerator(i, j, n)));
      return word;
    }
    case FullTwistVariant::kF: {
      BraidWord word = BraidWord::identity(n);
      for (int j = 2; j <= n; ++j)
        for (int i = 1; i <= j - 1; ++i)
          word.append(expand_pure_generator(PureGenerator(i, j, n)));
      return word;
    }
  }
  return BraidWord(n, std::move(letters));
}

BraidWord shift(const BraidWord& w) {
  std::vector<int> letters = w.letters();
  for (int& e : letters) {
    const int idx = std::abs(e);
    if (idx + 1 >= w.strands())
      throw ShiftOutOfRange("shift would leave the strand count");
    e = (e > 0) ? idx + 1 : -(idx + 1);
  }
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord conjugate_by_delta(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> letters = w.letters();
  for (int& e : letters) e = (e > 0) ? n - e : -(n + e);
  return BraidWord(n, std::move(letters));
}

int exponent_sum(const BraidWord& w) {
  int sum = 0;
  for (int e : w.letters()) sum += (e > 0) ? 1 : -1;
  return sum;
}

}  // namespace braidforge
