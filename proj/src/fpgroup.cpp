#include "braidforge/fpgroup.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace braidforge {

FreeWord free_reduce_word(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int e : w) {
    if (!out.empty() && out.back() == -e)
      out.pop_back();
    else
      out.push_back(e);
  }
  return out;
}

FreeWord cyclically_reduce_word(const FreeWord& w) {
  FreeWord r = free_reduce_word(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return FreeWord(r.begin() + lo, r.begin() + hi);
}

FreeWord invert_word(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& e : out) e = -e;
  return out;
}

FreeWord concat_words(const FreeWord& u, const FreeWord& v) {
  FreeWord out = u;
  for (int e : v) {
    if (!out.empty() && out.back() == -e)
      out.pop_back();
    else
      out.push_back(e);
  }
  return out;
}

FreeWord commutator_word(int g, int h) { return FreeWord{g, h, -g, -h}; }

namespace {

// Least representative among all rotations of w and of w^{-1}; the dedup key.
FreeWord cyclic_key(const FreeWord& w) {
  FreeWord best = w;
  FreeWord cur = w;
  FreeWord inv = invert_word(w);
  if (inv < best) best = inv;
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    std::rotate(inv.begin(), inv.begin() + 1, inv.end());
    if (cur < best) best = cur;
    if (inv < best) best = inv;
  }
  return best;
}

bool valid_generator_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::islower(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::islower(static_cast<unsigned char>(c)) &&
        !std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

}  // namespace

Presentation::Presentation(std::vector<std::string> generators,
                           std::vector<FreeWord> relators)
    : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const std::string& name : generators_) {
    if (!valid_generator_name(name))
      throw InvalidPresentation("bad generator name '" + name + "'");
    if (!seen.insert(name).second)
      throw InvalidPresentation("duplicate generator '" + name + "'");
  }
  std::set<FreeWord> keys;
  for (const FreeWord& r : relators) {
    for (int e : r)
      if (e == 0 || std::abs(e) > generator_count())
        throw InvalidPresentation("relator letter out of range");
    FreeWord reduced = cyclically_reduce_word(r);
    if (reduced.empty()) continue;
    if (keys.insert(cyclic_key(reduced)).second)
      relators_.push_back(std::move(reduced));
  }
}

std::optional<int> Presentation::generator_index(const std::string& name) const {
  for (int i = 0; i < generator_count(); ++i)
    if (generators_[i] == name) return i + 1;
  return std::nullopt;
}

bool Presentation::has_relator(const FreeWord& w) const {
  const FreeWord key = cyclic_key(cyclically_reduce_word(w));
  for (const FreeWord& r : relators_)
    if (cyclic_key(r) == key) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

long long checked_mul(long long a, long long b) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error("integer overflow in Smith normal form");
  return out;
}

long long checked_sub(long long a, long long b) {
  long long out = 0;
  if (__builtin_sub_overflow(a, b, &out))
    throw Error("integer overflow in Smith normal form");
  return out;
}

long long checked_add(long long a, long long b) {
  long long out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw Error("integer overflow in Smith normal form");
  return out;
}

}  // namespace

SmithResult smith_normal_form(std::vector<std::vector<long long>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != cols) throw Error("ragged matrix");

  auto row_sub = [&](int target, int source, long long q) {
    if (q == 0) return;
    for (int c = 0; c < cols; ++c)
      m[target][c] = checked_sub(m[target][c], checked_mul(q, m[source][c]));
  };
  auto col_sub = [&](int target, int source, long long q) {
    if (q == 0) return;
    for (int r = 0; r < rows; ++r)
      m[r][target] = checked_sub(m[r][target], checked_mul(q, m[r][source]));
  };

  int t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the trailing submatrix becomes the pivot.
    int pr = -1, pc = -1;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c)
        if (m[r][c] != 0 &&
            (pr < 0 || std::llabs(m[r][c]) < std::llabs(m[pr][pc]))) {
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    std::swap(m[t], m[pr]);
    for (int r = 0; r < rows; ++r) std::swap(m[r][t], m[r][pc]);

    bool clean = true;
    for (int r = t + 1; r < rows; ++r) {
      if (m[r][t] == 0) continue;
      row_sub(r, t, m[r][t] / m[t][t]);
      if (m[r][t] != 0) clean = false;  // remainder, smaller pivot available
    }
    for (int c = t + 1; c < cols; ++c) {
      if (m[t][c] == 0) continue;
      col_sub(c, t, m[t][c] / m[t][t]);
      if (m[t][c] != 0) clean = false;
    }
    if (!clean) continue;

    // Pivot must divide the rest of the submatrix before we move on.
    bool divides = true;
    for (int r = t + 1; r < rows && divides; ++r)
      for (int c = t + 1; c < cols && divides; ++c)
        if (m[r][c] % m[t][t] != 0) {
          for (int cc = 0; cc < cols; ++cc)
            m[t][cc] = checked_add(m[t][cc], m[r][cc]);
          divides = false;
        }
    if (!divides) continue;
    ++t;
  }

  SmithResult result;
  result.rank = t;
  for (int i = 0; i < t; ++i) result.factors.push_back(std::llabs(m[i][i]));
  // The division steps already give a chain, but make it canonical anyway.
  for (std::size_t i = 0; i + 1 < result.factors.size(); ++i)
    for (std::size_t j = i + 1; j < result.factors.size(); ++j)
      if (result.factors[j] % result.factors[i] != 0) {
        const long long g = std::gcd(result.factors[i], result.factors[j]);
        const long long l = checked_mul(result.factors[i] / g, result.factors[j]);
        result.factors[i] = g;
        result.factors[j] = l;
      }
  return result;
}

AbelianInvariants abelianization(const Presentation& p) {
  const int gens = p.generator_count();
  std::vector<std::vector<long long>> m;
  m.reserve(p.relator_count());
  for (const FreeWord& r : p.relators()) {
    std::vector<long long> row(gens, 0);
    for (int e : r) row[std::abs(e) - 1] += (e > 0) ? 1 : -1;
    m.push_back(std::move(row));
  }
  const SmithResult snf = smith_normal_form(std::move(m));
  AbelianInvariants inv;
  inv.free_rank = gens - snf.rank;
  for (long long d : snf.factors)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

// ---------------------------------------------------------------------------
// Todd-Coxeter

int CosetTable::apply(int coset, int letter) const {
  const Permutation& perm = action[std::abs(letter) - 1];
  return letter > 0 ? perm.image(coset) : perm.inverse().image(coset);
}

int CosetTable::apply(int coset, const FreeWord& w) const {
  for (int e : w) coset = apply(coset, e);
  return coset;
}

namespace {

// Column layout: generator g (1-based) forward is 2(g-1), inverse 2(g-1)+1.
class Enumerator {
 public:
  Enumerator(const Presentation& p, int max_cosets)
      : ncols_(2 * p.generator_count()), cap_(max_cosets) {
    for (const FreeWord& r : p.relators()) relators_.push_back(to_cols(r));
    new_coset();
  }

  static std::vector<int> to_cols(const FreeWord& w) {
    std::vector<int> cols;
    cols.reserve(w.size());
    for (int e : w)
      cols.push_back(e > 0 ? 2 * (e - 1) : 2 * (-e - 1) + 1);
    return cols;
  }

  void run(const std::vector<FreeWord>& subgroup_gens) {
    for (const FreeWord& w : subgroup_gens) {
      const FreeWord reduced = free_reduce_word(w);
      if (!reduced.empty()) scan(0, to_cols(reduced), /*fill=*/true);
    }
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (dead(c)) continue;
      for (const std::vector<int>& rel : relators_) {
        scan(static_cast<int>(c), rel, /*fill=*/true);
        if (dead(c)) break;
      }
      for (int x = 0; x < ncols_; ++x) {
        if (dead(c)) break;
        if (entry(c, x) < 0) define(static_cast<int>(c), x);
      }
    }
  }

  int live_count() const { return live_; }

  // Live cosets in creation order, renumbered from zero.
  std::vector<std::vector<int>> compact() const {
    std::vector<int> number(table_.size(), -1);
    int next = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (!dead(c)) number[c] = next++;
    std::vector<std::vector<int>> out;
    out.reserve(live_);
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (dead(c)) continue;
      std::vector<int> row(ncols_);
      for (int x = 0; x < ncols_; ++x) row[x] = number[find(entry(c, x))];
      out.push_back(std::move(row));
    }
    return out;
  }

 private:
  bool dead(std::size_t c) const { return parent_[c] != static_cast<int>(c); }

  int find(int c) const {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }

  int& entry(std::size_t c, int x) { return table_[c][x]; }
  int entry(std::size_t c, int x) const { return table_[c][x]; }

  int new_coset() {
    const int c = static_cast<int>(table_.size());
    table_.emplace_back(ncols_, -1);
    parent_.push_back(c);
    ++live_;
    return c;
  }

  int define(int c, int x) {
    c = find(c);
    if (entry(c, x) >= 0) return find(entry(c, x));
    if (live_ >= cap_) {
      lookahead();
      c = find(c);
      if (entry(c, x) >= 0) return find(entry(c, x));
      if (live_ >= cap_)
        throw EnumerationOverflow(
            "coset cap exceeded; group may be infinite or the cap too small");
    }
    const int q = new_coset();
    entry(c, x) = q;
    entry(q, x ^ 1) = c;
    return q;
  }

  // Deduction-only pass over every live coset and relator.
  void lookahead() {
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (dead(c)) continue;
      for (const std::vector<int>& rel : relators_) {
        scan(static_cast<int>(c), rel, /*fill=*/false);
        if (dead(c)) break;
      }
    }
  }

  void scan(int start, const std::vector<int>& word, bool fill) {
    start = find(start);
    if (word.empty()) return;
    int f = start;
    int i = 0;
    int b = start;
    int j = static_cast<int>(word.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, word[i]) >= 0) f = find(entry(f, word[i++]));
      if (i > j) {
        if (f != b) coincide(f, b);
        return;
      }
      while (j >= i && entry(b, word[j] ^ 1) >= 0) b = find(entry(b, word[j--] ^ 1));
      if (j < i) {
        coincide(f, b);
        return;
      }
      if (j == i) {
        entry(f, word[i]) = b;
        entry(b, word[i] ^ 1) = f;
        return;
      }
      if (!fill) return;
      // A define may trigger lookahead, which can merge anything; chase the
      // representatives before continuing the scan.
      f = find(define(f, word[i]));
      b = find(b);
      ++i;
    }
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the older coset alive
    parent_[b] = a;
    --live_;
    queue.push_back(b);
  }

  void coincide(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int c = queue[head];
      for (int x = 0; x < ncols_; ++x) {
        const int d = entry(c, x);
        if (d < 0) continue;
        if (entry(d, x ^ 1) == c) entry(d, x ^ 1) = -1;
        const int mu = find(c);
        const int nu = find(d);
        if (entry(mu, x) >= 0)
          merge(entry(mu, x), nu, queue);
        else if (entry(nu, x ^ 1) >= 0)
          merge(entry(nu, x ^ 1), mu, queue);
        else {
          entry(mu, x) = nu;
          entry(nu, x ^ 1) = mu;
        }
      }
    }
  }

  int ncols_;
  long long cap_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> table_;
  mutable std::vector<int> parent_;
  int live_ = 0;
};

}  // namespace

CosetTable coset_enumerate(const Presentation& p,
                           const std::vector<FreeWord>& subgroup_gens,
                           int max_cosets) {
  if (max_cosets < 1) throw Error("max_cosets must be >= 1");
  for (const FreeWord& w : subgroup_gens)
    for (int e : w)
      if (e == 0 || std::abs(e) > p.generator_count())
        throw InvalidPresentation("subgroup word letter out of range");

  if (p.generator_count() == 0) {
    CosetTable t;
    t.cosets = 1;
    t.subgroup_generator_count = static_cast<int>(subgroup_gens.size());
    return t;
  }

  Enumerator en(p, max_cosets);
  en.run(subgroup_gens);
  const std::vector<std::vector<int>> rows = en.compact();

  CosetTable t;
  t.cosets = static_cast<int>(rows.size());
  t.subgroup_generator_count = static_cast<int>(subgroup_gens.size());
  for (int g = 0; g < p.generator_count(); ++g) {
    std::vector<int> images(t.cosets);
    for (int c = 0; c < t.cosets; ++c) images[c] = rows[c][2 * g] + 1;
    t.action.push_back(Permutation::from_images(std::move(images)));
  }
  return t;
}

int GroupTable::element_order(int a) const {
  int x = a;
  int n = 1;
  while (x != 0) {
    x = mult[x][a];
    ++n;
  }
  return n;
}

GroupTable multiplication_table(const CosetTable& t, const Presentation& p) {
  if (t.subgroup_generator_count != 0)
    throw NotRegularTable("table was not enumerated over the trivial subgroup");

  // Representative word for each coset, breadth first over signed generators.
  const int n = t.cosets;
  std::vector<FreeWord> rep(n);
  std::vector<bool> known(n, false);
  known[0] = true;
  std::vector<int> frontier{1};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int c : frontier) {
      for (int g = 1; g <= p.generator_count(); ++g) {
        for (int s : {g, -g}) {
          const int d = t.apply(c, s) - 1;
          if (!known[d]) {
            known[d] = true;
            rep[d] = rep[c - 1];
            rep[d].push_back(s);
            next.push_back(d + 1);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  for (bool k : known)
    if (!k) throw NotRegularTable("coset table is not transitive");

  GroupTable g;
  g.order = n;
  g.mult.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mult[a][b] = t.apply(a + 1, rep[b]) - 1;
  return g;
}

namespace {

std::vector<int> order_profile(const GroupTable& t) {
  std::vector<int> orders(t.order);
  for (int a = 0; a < t.order; ++a) orders[a] = t.element_order(a);
  std::vector<int> sorted = orders;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

// Subgroup generated by `gens`, as a sorted element list.
std::vector<int> closure_of(const GroupTable& t, const std::vector<int>& gens) {
  std::vector<bool> in(t.order, false);
  in[0] = true;
  std::vector<int> elements{0};
  for (std::size_t head = 0; head < elements.size(); ++head)
    for (int g : gens) {
      const int d = t.mult[elements[head]][g];
      if (!in[d]) {
        in[d] = true;
        elements.push_back(d);
      }
    }
  std::sort(elements.begin(), elements.end());
  return elements;
}

// Partial homomorphism determined by generator images; nullopt on conflict
// or collision (we only ever want isomorphisms).
std::optional<std::vector<int>> extend_map(const GroupTable& t1,
                                           const GroupTable& t2,
                                           const std::vector<int>& gens,
                                           const std::vector<int>& images) {
  std::vector<int> phi(t1.order, -1);
  std::vector<bool> hit(t2.order, false);
  phi[0] = 0;
  hit[0] = true;
  std::vector<int> worklist{0};
  for (std::size_t head = 0; head < worklist.size(); ++head) {
    const int a = worklist[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int b = t1.mult[a][gens[i]];
      const int image = t2.mult[phi[a]][images[i]];
      if (phi[b] < 0) {
        if (hit[image]) return std::nullopt;
        phi[b] = image;
        hit[image] = true;
        worklist.push_back(b);
      } else if (phi[b] != image) {
        return std::nullopt;
      }
    }
  }
  return phi;
}

bool search_iso(const GroupTable& t1, const GroupTable& t2,
                const std::vector<int>& gens, std::vector<int>& images,
                std::size_t k, const std::vector<int>& orders1,
                const std::vector<int>& orders2) {
  if (k == gens.size()) {
    const auto phi = extend_map(t1, t2, gens, images);
    if (!phi) return false;
    for (int v : *phi)
      if (v < 0) return false;  // proper subgroup image
    for (int a = 0; a < t1.order; ++a)
      for (int b = 0; b < t1.order; ++b)
        if ((*phi)[t1.mult[a][b]] != t2.mult[(*phi)[a]][(*phi)[b]]) return false;
    return true;
  }
  for (int c = 0; c < t2.order; ++c) {
    if (orders2[c] != orders1[gens[k]]) continue;
    images[k] = c;
    if (!extend_map(t1, t2, {gens.begin(), gens.begin() + k + 1},
                    {images.begin(), images.begin() + k + 1}))
      continue;
    if (search_iso(t1, t2, gens, images, k + 1, orders1, orders2)) return true;
  }
  return false;
}

}  // namespace

bool isomorphic_small_groups(const GroupTable& t1, const GroupTable& t2) {
  if (t1.order > 64 || t2.order > 64)
    throw TooLargeForIsomorphism("isomorphism testing is limited to order 64");
  if (t1.order != t2.order) return false;
  if (order_profile(t1) != order_profile(t2)) return false;

  std::vector<int> gens;
  std::vector<int> have = closure_of(t1, gens);
  while (static_cast<int>(have.size()) < t1.order) {
    int pick = 0;
    while (std::binary_search(have.begin(), have.end(), pick)) ++pick;
    gens.push_back(pick);
    have = closure_of(t1, gens);
  }

  std::vector<int> orders1(t1.order), orders2(t2.order);
  for (int a = 0; a < t1.order; ++a) orders1[a] = t1.element_order(a);
  for (int a = 0; a < t2.order; ++a) orders2[a] = t2.element_order(a);

  std::vector<int> images(gens.size(), 0);
  return search_iso(t1, t2, gens, images, 0, orders1, orders2);
}

// ---------------------------------------------------------------------------
// Tietze moves and consequence certificates

Presentation eliminate_generator(const Presentation& p, const std::string& gen,
                                 int relator_index) {
  const std::optional<int> maybe_idx = p.generator_index(gen);
  if (!maybe_idx) throw Error("no generator named '" + gen + "'");
  const int g = *maybe_idx;
  if (relator_index < 1 || relator_index > p.relator_count())
    throw Error("relator index out of range");
  const FreeWord& defining = p.relators()[relator_index - 1];

  int occurrences = 0;
  std::size_t position = 0;
  for (std::size_t i = 0; i < defining.size(); ++i)
    if (std::abs(defining[i]) == g) {
      ++occurrences;
      position = i;
    }
  if (occurrences != 1)
    throw NotEliminableHere("relator mentions '" + gen + "' " +
                            std::to_string(occurrences) + " times");

  // Rotate the single occurrence to the front and solve for the generator.
  FreeWord rotated = defining;
  std::rotate(rotated.begin(), rotated.begin() + position, rotated.end());
  FreeWord tail(rotated.begin() + 1, rotated.end());
  const FreeWord expr = (rotated[0] > 0) ? invert_word(tail) : tail;
  const FreeWord expr_inv = invert_word(expr);

  auto substitute = [&](const FreeWord& w) {
    FreeWord out;
    for (int e : w) {
      const FreeWord& piece =
          (std::abs(e) == g) ? (e > 0 ? expr : expr_inv) : FreeWord{e};
      for (int x : piece) {
        if (!out.empty() && out.back() == -x)
          out.pop_back();
        else
          out.push_back(x);
      }
    }
    return out;
  };

  auto reindex = [&](const FreeWord& w) {
    FreeWord out = w;
    for (int& e : out) {
      const int idx = std::abs(e);
      if (idx > g) e = (e > 0) ? idx - 1 : -(idx - 1);
    }
    return out;
  };

  std::vector<std::string> gens;
  for (int i = 1; i <= p.generator_count(); ++i)
    if (i != g) gens.push_back(p.generators()[i - 1]);
  std::vector<FreeWord> relators;
  for (int i = 1; i <= p.relator_count(); ++i) {
    if (i == relator_index) continue;
    relators.push_back(reindex(substitute(p.relators()[i - 1])));
  }
  return Presentation(std::move(gens), std::move(relators));
}

bool verify_consequence(const Presentation& p, const FreeWord& w,
                        const ConsequenceCertificate& cert) {
  FreeWord product;
  auto push = [&](int e) {
    if (!product.empty() && product.back() == -e)
      product.pop_back();
    else
      product.push_back(e);
  };
  for (const CertificateTerm& term : cert) {
    if (term.relator_index < 1 || term.relator_index > p.relator_count())
      throw Error("certificate relator index out of range");
    if (term.sign != 1 && term.sign != -1) throw Error("certificate sign must be +-1");
    for (int e : term.conjugator) push(e);
    const FreeWord& r = p.relators()[term.relator_index - 1];
    const FreeWord body = term.sign > 0 ? r : invert_word(r);
    for (int e : body) push(e);
    for (int e : invert_word(term.conjugator)) push(e);
  }
  return product == free_reduce_word(w);
}

std::optional<ConsequenceCertificate> commutation_certificate(
    const Presentation& p, const FreeWord& w, const std::vector<int>& left,
    const std::vector<int>& right) {
  std::vector<int> side(p.generator_count() + 1, 0);
  for (int g : left) side[g] = 1;
  for (int h : right) side[h] = 2;

  // Locate the literal commutator relator for each needed pair; orientation
  // records whether it is stored as [g,h] or as [h,g].
  struct Located {
    int index = 0;
    bool left_first = true;
  };
  std::map<std::pair<int, int>, Located> located;
  auto find_relator = [&](int g, int h) -> std::optional<Located> {
    const auto it = located.find({g, h});
    if (it != located.end()) return it->second;
    for (int i = 1; i <= p.relator_count(); ++i) {
      const FreeWord& r = p.relators()[i - 1];
      if (r == commutator_word(g, h)) {
        located[{g, h}] = {i, true};
        return located[{g, h}];
      }
      if (r == commutator_word(h, g)) {
        located[{g, h}] = {i, false};
        return located[{g, h}];
      }
    }
    return std::nullopt;
  };

  ConsequenceCertificate cert;
  FreeWord g_acc, h_acc;
  auto push_reduced = [](FreeWord& acc, int e) {
    if (!acc.empty() && acc.back() == -e)
      acc.pop_back();
    else
      acc.push_back(e);
  };

  for (int x : free_reduce_word(w)) {
    const int s = side[std::abs(x)];
    if (s == 0) return std::nullopt;
    if (s == 2) {
      push_reduced(h_acc, x);
      continue;
    }
    // Move the left-side letter across the accumulated right-side tail,
    // paying one conjugated commutator relator per crossed letter.
    const int g = std::abs(x);
    for (int t = static_cast<int>(h_acc.size()); t >= 1; --t) {
      const int hl = h_acc[t - 1];
      const int h = std::abs(hl);
      const auto loc = find_relator(g, h);
      if (!loc) return std::nullopt;

      FreeWord inner;  // conjugator of [h^eps, g^delta] over [g,h]
      int sign;
      const bool he = hl > 0, xe = x > 0;
      if (he && xe) {
        sign = -1;
      } else if (!he && xe) {
        inner = {-h};
        sign = 1;
      } else if (he && !xe) {
        inner = {-g};
        sign = 1;
      } else {
        inner = {-h, -g};
        sign = -1;
      }
      if (!loc->left_first) sign = -sign;

      CertificateTerm term;
      term.conjugator = g_acc;
      term.conjugator.insert(term.conjugator.end(), h_acc.begin(),
                             h_acc.begin() + (t - 1));
      term.conjugator = free_reduce_word(concat_words(term.conjugator, inner));
      term.relator_index = loc->index;
      term.sign = sign;
      cert.push_back(std::move(term));
    }
    push_reduced(g_acc, x);
  }
  if (!g_acc.empty() || !h_acc.empty()) return std::nullopt;
  return cert;
}

std::optional<int> is_free_of_rank(const Presentation& p) {
  if (p.relator_count() == 0) return p.generator_count();
  return std::nullopt;
}

bool check_homomorphism(
    const Presentation& p,
    const std::vector<std::pair<std::string, Permutation>>& images) {
  std::vector<const Permutation*> image_of(p.generator_count() + 1, nullptr);
  int degree = 0;
  for (const auto& [name, perm] : images) {
    const std::optional<int> idx = p.generator_index(name);
    if (!idx) throw Error("image given for unknown generator '" + name + "'");
    if (degree == 0) degree = perm.size();
    if (perm.size() != degree)
      throw Error("generator images live in different symmetric groups");
    image_of[*idx] = &perm;
  }
  for (int g = 1; g <= p.generator_count(); ++g)
    if (!image_of[g]) throw Error("missing image for generator '" + p.generators()[g - 1] + "'");

  for (const FreeWord& r : p.relators()) {
    Permutation acc = Permutation::identity(degree);
    for (int e : r) {
      const Permutation& img = *image_of[std::abs(e)];
      acc = compose(acc, e > 0 ? img : img.inverse());
    }
    if (!acc.is_identity()) return false;
  }
  return true;
}

}  // namespace braidforge
