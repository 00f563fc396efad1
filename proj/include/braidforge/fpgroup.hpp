#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidforge/braid.hpp"
#include "braidforge/errors.hpp"

namespace braidforge {

/// Word in a free group: signed 1-based generator indices.
using FreeWord = std::vector<int>;

FreeWord free_reduce_word(const FreeWord& w);
FreeWord cyclically_reduce_word(const FreeWord& w);
FreeWord invert_word(const FreeWord& w);
FreeWord concat_words(const FreeWord& u, const FreeWord& v);  // freely reduced
FreeWord commutator_word(int g, int h);                       // g h g^-1 h^-1

/// Finitely presented group. Relators are kept cyclically reduced, with empty
/// relators dropped and duplicates removed up to cyclic rotation and
/// inversion, so that presentations built along different routes compare
/// predictably.
class Presentation {
 public:
  Presentation(std::vector<std::string> generators, std::vector<FreeWord> relators);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<FreeWord>& relators() const { return relators_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }
  int relator_count() const { return static_cast<int>(relators_.size()); }

  /// 1-based index, or nullopt when the name is unknown.
  std::optional<int> generator_index(const std::string& name) const;

  /// Membership up to cyclic rotation and inversion.
  bool has_relator(const FreeWord& w) const;

  bool operator==(const Presentation& other) const = default;

 private:
  std::vector<std::string> generators_;
  std::vector<FreeWord> relators_;
};

/// Invariant-factor description of a finitely generated abelian group.
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<long long> torsion;  // each >= 2, divisibility chain

  bool operator==(const AbelianInvariants& other) const = default;
};

struct SmithResult {
  std::vector<long long> factors;  // positive, d_1 | d_2 | ... | d_r
  int rank = 0;
};

/// Invariant factors of an integer matrix, exact arithmetic.
SmithResult smith_normal_form(std::vector<std::vector<long long>> m);

/// H_1 of the presented group via the relator exponent-sum matrix.
AbelianInvariants abelianization(const Presentation& p);

/// Closed coset table: each generator acts by a permutation of {1..cosets},
/// coset 1 being the subgroup.
struct CosetTable {
  int cosets = 0;
  std::vector<Permutation> action;  // one permutation per generator
  int subgroup_generator_count = 0;

  int apply(int coset, int letter) const;         // one signed generator
  int apply(int coset, const FreeWord& w) const;  // a whole word
};

/// HLT enumeration with deterministic lookahead and first-free numbering.
/// Throws EnumerationOverflow when the live-coset cap is hit.
CosetTable coset_enumerate(const Presentation& p,
                           const std::vector<FreeWord>& subgroup_gens,
                           int max_cosets = 100000);

/// Multiplication table of a finite group; elements are 0-based with 0 the
/// identity.
struct GroupTable {
  int order = 0;
  std::vector<std::vector<int>> mult;

  int element_order(int a) const;
};

/// Regular-representation table from an enumeration over the trivial
/// subgroup; throws NotRegularTable otherwise.
GroupTable multiplication_table(const CosetTable& t, const Presentation& p);

/// Brute-force isomorphism test with order-profile pruning; orders must be
/// at most 64 (TooLargeForIsomorphism otherwise).
bool isomorphic_small_groups(const GroupTable& t1, const GroupTable& t2);

/// Tietze move: removes `gen` using a relator that mentions it exactly once
/// (up to cyclic rotation); substitutes the solved expression everywhere.
/// Throws NotEliminableHere when the chosen relator does not qualify.
Presentation eliminate_generator(const Presentation& p, const std::string& gen,
                                 int relator_index);

/// One term of a consequence witness: conjugator u, 1-based relator index,
/// sign. The certified product is u r^{sign} u^{-1}, multiplied in order.
struct CertificateTerm {
  FreeWord conjugator;
  int relator_index = 0;
  int sign = 1;
};

using ConsequenceCertificate = std::vector<CertificateTerm>;

/// True iff the certified product freely reduces to w. No search.
bool verify_consequence(const Presentation& p, const FreeWord& w,
                        const ConsequenceCertificate& cert);

/// Constructs a certificate for words that are trivial exactly because the
/// `left` generators commute with the `right` generators; the presentation
/// must contain the literal commutator relator for every needed pair.
/// Returns nullopt when w is not of that shape.
std::optional<ConsequenceCertificate> commutation_certificate(
    const Presentation& p, const FreeWord& w, const std::vector<int>& left,
    const std::vector<int>& right);

/// Generator count when no relators remain; a syntactic condition only.
std::optional<int> is_free_of_rank(const Presentation& p);

/// True iff every relator maps to the identity permutation under the given
/// generator images (all in one symmetric group).
bool check_homomorphism(const Presentation& p,
                        const std::vector<std::pair<std::string, Permutation>>& images);

}  // namespace braidforge
