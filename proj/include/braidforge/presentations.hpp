#pragma once

#include "braidforge/fpgroup.hpp"

namespace braidforge {

/// Parameters of a configuration stratum: k_points points of a complex
/// projective n_dim-space spanning a subspace of projective dimension i_dim.
struct StratumParams {
  int k_points;
  int i_dim;
  int n_dim;

  StratumParams(int k, int i, int n);
};

/// Pure braid group of the plane on n strands: generators a_{ij}, the
/// triple-index chains and the quadruple-index commutators.
Presentation pure_braid_presentation(int n);

/// Braid group of the plane on n strands, generators s_1..s_{n-1}.
Presentation artin_presentation(int n);

/// Pure sphere braids on k+1 points: pure braids plus the full twist squared.
Presentation sphere_pure_presentation(int k);

/// Sphere braids on k+1 points: Artin plus s_1 s_2 ... s_k^2 ... s_2 s_1.
Presentation sphere_braid_presentation(int k);

/// Full twist of the first k strands as a word over generators a_{ij}, in the
/// grouping a_{12} (a_{13} a_{23}) ... (a_{1k} ... a_{k-1,k}).
FreeWord pure_full_twist_relator(int k);

/// Fundamental group of the ordered stratum; trivial except along lines.
Presentation f_stratum_presentation(const StratumParams& params);

/// Fundamental group of the unordered stratum; the symmetric group except
/// along lines.
Presentation c_stratum_presentation(const StratumParams& params);

/// Six points on two lines through a common point, the point removed.
Presentation pappus_pi_presentation();

/// The same with the intersection point free to move in the plane.
Presentation pappus_p_presentation();

/// Complex dimension k*i + (i+1)(n-i) of the stratum.
int stratum_dimension(const StratumParams& params);

/// Nonemptiness predicate i <= min(k+1, n), kept exactly as stated.
bool stratum_nonempty(const StratumParams& params);

/// Stricter companion: k points span dimension at most k-1, so also require
/// i <= min(k-1, n).
bool spanning_consistent(const StratumParams& params);

}  // namespace braidforge
