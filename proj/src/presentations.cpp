#include "braidforge/presentations.hpp"

#include <algorithm>
#include <string>

namespace braidforge {

namespace {

// Generators a_{ij}, 1 <= i < j <= n, in lexicographic order.
std::vector<std::string> alpha_names(int n, const std::string& stem) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      names.push_back(stem + std::to_string(i) + std::to_string(j));
  return names;
}

int alpha_index(int n, int i, int j) {
  // Position of (i, j) in the lexicographic list, 1-based.
  int idx = 0;
  for (int a = 1; a < i; ++a) idx += n - a;
  return idx + (j - i);
}

std::vector<std::string> sigma_names(int count) {
  std::vector<std::string> names;
  for (int i = 1; i <= count; ++i) names.push_back("s" + std::to_string(i));
  return names;
}

// u = v = w chains compile to u v^-1 and v w^-1, in display order.
void push_chain(std::vector<FreeWord>& relators, const std::vector<FreeWord>& chain) {
  for (std::size_t t = 0; t + 1 < chain.size(); ++t)
    relators.push_back(concat_words(chain[t], invert_word(chain[t + 1])));
}

void push_yang_baxter(std::vector<FreeWord>& relators, int n, int offset,
                      const std::vector<std::string>& names) {
  (void)names;
  auto a = [&](int i, int j) { return offset + alpha_index(n, i, j); };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        push_chain(relators, {{a(i, j), a(i, k), a(j, k)},
                              {a(i, k), a(j, k), a(i, j)},
                              {a(j, k), a(i, j), a(i, k)}});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          relators.push_back(commutator_word(a(k, l), a(i, j)));
          relators.push_back(commutator_word(a(i, l), a(j, k)));
          // [a_jl, a_jk^-1 a_ik a_jk]
          FreeWord conj1{-a(j, k), a(i, k), a(j, k)};
          relators.push_back(concat_words(
              concat_words({a(j, l)}, conj1),
              concat_words({-a(j, l)}, invert_word(conj1))));
          // [a_jl, a_kl a_ik a_kl^-1]
          FreeWord conj2{a(k, l), a(i, k), -a(k, l)};
          relators.push_back(concat_words(
              concat_words({a(j, l)}, conj2),
              concat_words({-a(j, l)}, invert_word(conj2))));
        }
}

// The full twist over a_{ij} generators living at `offset` in some larger
// generator list, grouped by the larger index.
FreeWord alpha_full_twist(int k, int offset) {
  FreeWord w;
  for (int j = 2; j <= k; ++j)
    for (int i = 1; i < j; ++i) w.push_back(offset + alpha_index(k, i, j));
  return w;
}

FreeWord sphere_relator(int k) {
  // s_1 s_2 ... s_k^2 ... s_2 s_1
  FreeWord w;
  for (int s = 1; s <= k; ++s) w.push_back(s);
  for (int s = k; s >= 1; --s) w.push_back(s);
  return w;
}

std::vector<FreeWord> artin_relators(int n) {
  std::vector<FreeWord> relators;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      relators.push_back(commutator_word(i, j));
  for (int i = 1; i <= n - 2; ++i)
    relators.push_back({i, i + 1, i, -(i + 1), -i, -(i + 1)});
  return relators;
}

// Ascending-stack half twist of the first k strands, squared.
FreeWord delta_squared_relator(int k) {
  FreeWord delta;
  for (int m = 1; m <= k - 1; ++m)
    for (int s = m; s >= 1; --s) delta.push_back(s);
  FreeWord w = delta;
  w.insert(w.end(), delta.begin(), delta.end());
  return w;
}

Presentation trivial_presentation() { return Presentation({}, {}); }

Presentation coxeter_presentation(int k) {
  if (k < 1) throw Error("symmetric group needs k >= 1");
  if (k == 1) return trivial_presentation();
  std::vector<FreeWord> relators = artin_relators(k);
  for (int i = 1; i <= k - 1; ++i) relators.push_back({i, i});
  return Presentation(sigma_names(k - 1), std::move(relators));
}

}  // namespace

StratumParams::StratumParams(int k, int i, int n) : k_points(k), i_dim(i), n_dim(n) {
  if (k < 1 || i < 1 || n < 1)
    throw Error("stratum parameters must be positive");
}

Presentation pure_braid_presentation(int n) {
  if (n < 2) throw Error("pure braid presentation needs n >= 2");
  std::vector<FreeWord> relators;
  push_yang_baxter(relators, n, 0, {});
  return Presentation(alpha_names(n, "a"), std::move(relators));
}

Presentation artin_presentation(int n) {
  if (n < 2) throw Error("braid presentation needs n >= 2");
  return Presentation(sigma_names(n - 1), artin_relators(n));
}

FreeWord pure_full_twist_relator(int k) { return alpha_full_twist(k, 0); }

Presentation sphere_pure_presentation(int k) {
  if (k < 1) throw Error("sphere pure braid presentation needs k >= 1");
  if (k == 1) return trivial_presentation();
  std::vector<FreeWord> relators;
  push_yang_baxter(relators, k, 0, {});
  FreeWord twist = alpha_full_twist(k, 0);
  FreeWord squared = twist;
  squared.insert(squared.end(), twist.begin(), twist.end());
  relators.push_back(std::move(squared));
  return Presentation(alpha_names(k, "a"), std::move(relators));
}

Presentation sphere_braid_presentation(int k) {
  if (k < 1) throw Error("sphere braid presentation needs k >= 1");
  std::vector<FreeWord> relators = artin_relators(k + 1);
  relators.push_back(sphere_relator(k));
  return Presentation(sigma_names(k), std::move(relators));
}

Presentation f_stratum_presentation(const StratumParams& params) {
  if (!stratum_nonempty(params)) throw EmptyStratum("stratum is empty");
  const int k = params.k_points - 1;
  if (params.i_dim == 1 && params.n_dim == 1)
    return k >= 1 ? sphere_pure_presentation(k) : trivial_presentation();
  if (params.i_dim == 1 && params.n_dim >= 2 && k >= 3) {
    std::vector<FreeWord> relators;
    push_yang_baxter(relators, k, 0, {});
    relators.push_back(alpha_full_twist(k, 0));
    return Presentation(alpha_names(k, "a"), std::move(relators));
  }
  return trivial_presentation();
}

Presentation c_stratum_presentation(const StratumParams& params) {
  if (!stratum_nonempty(params)) throw EmptyStratum("stratum is empty");
  const int k = params.k_points - 1;
  if (params.i_dim == 1 && params.n_dim == 1)
    return k >= 1 ? sphere_braid_presentation(k) : trivial_presentation();
  if (params.i_dim == 1 && params.n_dim >= 2 && k >= 3) {
    std::vector<FreeWord> relators = artin_relators(k + 1);
    relators.push_back(sphere_relator(k));
    relators.push_back(delta_squared_relator(k));
    return Presentation(sigma_names(k), std::move(relators));
  }
  return coxeter_presentation(params.k_points);
}

Presentation pappus_pi_presentation() {
  std::vector<std::string> names = alpha_names(3, "b");
  const std::vector<std::string> primed = alpha_names(3, "bp");
  names.insert(names.end(), primed.begin(), primed.end());

  std::vector<FreeWord> relators;
  push_yang_baxter(relators, 3, 0, {});
  push_yang_baxter(relators, 3, 3, {});
  for (int ij = 1; ij <= 3; ++ij)
    for (int pq = 4; pq <= 6; ++pq) relators.push_back(commutator_word(ij, pq));
  // bp12 bp13 bp23 = b12 b13 b23
  relators.push_back(concat_words({4, 5, 6}, invert_word({1, 2, 3})));
  return Presentation(std::move(names), std::move(relators));
}

Presentation pappus_p_presentation() {
  const Presentation base = pappus_pi_presentation();
  std::vector<FreeWord> relators = base.relators();
  relators.push_back({1, 2, 3});
  return Presentation(base.generators(), std::move(relators));
}

int stratum_dimension(const StratumParams& params) {
  const int k = params.k_points, i = params.i_dim, n = params.n_dim;
  return k * i + (i + 1) * (n - i);
}

bool stratum_nonempty(const StratumParams& params) {
  return params.i_dim <= std::min(params.k_points + 1, params.n_dim);
}

bool spanning_consistent(const StratumParams& params) {
  return params.i_dim <= std::min(params.k_points - 1, params.n_dim);
}

}  // namespace braidforge
