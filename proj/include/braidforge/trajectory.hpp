#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "braidforge/braid.hpp"

namespace braidforge {

/// Sampled trajectories of k points in the complex plane over t in [0,1].
/// The sample positions must stay pairwise distinct, and the configuration at
/// t=1 must equal the one at t=0 as a multiset (a loop up to permutation).
struct StrandPaths {
  int strand_count = 0;
  std::vector<double> times;
  std::vector<std::vector<std::complex<double>>> positions;  // per sample

  void validate() const;
  StrandPaths time_reversed() const;
};

struct ExtractionParams {
  double projection_angle = 0.0;
  double tie_tolerance = 1e-9;  // relative to the configuration diameter
  int max_retries = 16;
  std::uint64_t retry_seed = 0x62726169;
};

/// Strand j moves along j * exp(2*pi*i*t); endpoints are copied exactly.
/// Requires num_samples >= 8*k^2 (TooFewSamples otherwise).
StrandPaths sample_concentric_loop(int k, int num_samples);

/// Reads the braid of the motion: order the strands along the projection
/// line; each exchange of adjacent strands emits one letter, positive when
/// the pair exchanges counterclockwise. Ambiguous projections retry with a
/// seeded pseudorandom angle; unresolvable sample gaps are decomposed along
/// the interpolated motion after refinement bottoms out.
BraidWord extract_braid(const StrandPaths& paths, const ExtractionParams& params = {});

/// True iff the concentric loop on k strands extracts to the full twist,
/// compared through normal forms. Requires 2 <= k <= 6.
bool concentric_loop_is_full_twist(int k);

}  // namespace braidforge
