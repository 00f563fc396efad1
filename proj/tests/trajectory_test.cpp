#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "braidforge/garside.hpp"
#include "braidforge/trajectory.hpp"

using namespace braidforge;

TEST_CASE("loop sampling") {
  const StrandPaths two = sample_concentric_loop(2, 256);
  CHECK(two.positions.front()[0] == std::complex<double>(1.0, 0.0));
  CHECK(two.positions.front()[1] == std::complex<double>(2.0, 0.0));
  CHECK(two.positions.front() == two.positions.back());

  const StrandPaths three = sample_concentric_loop(3, 1025);
  const auto& mid = three.positions[512];  // t = 1/2
  CHECK(std::abs(mid[0] - std::complex<double>(-1.0, 0.0)) < 1e-9);
  CHECK(std::abs(mid[1] - std::complex<double>(-2.0, 0.0)) < 1e-9);
  CHECK(std::abs(mid[2] - std::complex<double>(-3.0, 0.0)) < 1e-9);

  CHECK_THROWS_AS(sample_concentric_loop(3, 10), TooFewSamples);
}

TEST_CASE("extraction recovers the full twist") {
  const BraidWord two = extract_braid(sample_concentric_loop(2, 256));
  CHECK(braids_equal(two, BraidWord(2, {1, 1})));

  const BraidWord three = extract_braid(sample_concentric_loop(3, 1024));
  CHECK(three.length() == 6);
  for (int e : three.letters()) CHECK(e > 0);
  CHECK(braids_equal(three, full_twist_word(3, FullTwistVariant::kA)));
}

TEST_CASE("stationary strands give the empty word") {
  StrandPaths still;
  still.strand_count = 2;
  for (int s = 0; s <= 16; ++s) {
    still.times.push_back(s / 16.0);
    still.positions.push_back({{0.0, 0.0}, {1.0, 1.0}});
  }
  CHECK(extract_braid(still).empty());
}

TEST_CASE("extraction is stable under refinement and projection angle") {
  for (int k = 2; k <= 4; ++k) {
    const BraidWord base = extract_braid(sample_concentric_loop(k, 8 * k * k));
    const BraidWord doubled = extract_braid(sample_concentric_loop(k, 16 * k * k));
    CHECK(braids_equal(base, doubled));

    std::mt19937 rng(5 + k);
    std::uniform_real_distribution<double> angles(0.05, 3.0);
    for (int trial = 0; trial < 3; ++trial) {
      ExtractionParams params;
      params.projection_angle = angles(rng);
      const BraidWord other = extract_braid(sample_concentric_loop(k, 8 * k * k), params);
      CHECK(braids_equal(base, other));
    }
  }
}

TEST_CASE("endpoint permutation matches the loop") {
  // Two points swapping along half circles: an odd permutation.
  StrandPaths swap;
  swap.strand_count = 2;
  const int samples = 64;
  for (int s = 0; s < samples; ++s) {
    const double t = static_cast<double>(s) / (samples - 1);
    const std::complex<double> around = std::polar(1.0, std::numbers::pi * t);
    swap.times.push_back(t);
    swap.positions.push_back({around, -around});
  }
  swap.times.back() = 1.0;
  swap.positions.back() = {{-1.0, 0.0}, {1.0, 0.0}};
  const BraidWord w = extract_braid(swap);
  CHECK_FALSE(permutation_of(w).is_identity());
  CHECK(w.length() == 1);
}

TEST_CASE("a cyclic rotation of three strands lands on the right permutation") {
  StrandPaths rotation;
  rotation.strand_count = 3;
  const int samples = 128;
  for (int s = 0; s < samples; ++s) {
    const double t = static_cast<double>(s) / (samples - 1);
    std::vector<std::complex<double>> config;
    for (int j = 0; j < 3; ++j)
      config.push_back(std::polar(1.0, 2.0 * std::numbers::pi * (t + j) / 3.0));
    rotation.times.push_back(t);
    rotation.positions.push_back(std::move(config));
  }
  rotation.times.back() = 1.0;
  rotation.positions.back() = {rotation.positions.front()[1],
                               rotation.positions.front()[2],
                               rotation.positions.front()[0]};
  const BraidWord w = extract_braid(rotation);
  const Permutation perm = permutation_of(w);
  CHECK_FALSE(perm.is_identity());
  // Three cyclically rotating strands give a 3-cycle.
  int moved = 0;
  for (int j = 1; j <= 3; ++j)
    if (perm.image(j) != j) ++moved;
  CHECK(moved == 3);
}

TEST_CASE("time reversal extracts the inverse braid") {
  for (int k = 2; k <= 4; ++k) {
    const StrandPaths paths = sample_concentric_loop(k, 8 * k * k);
    const BraidWord forward = extract_braid(paths);
    const BraidWord backward = extract_braid(paths.time_reversed());
    CHECK(braids_equal(backward, forward.inverse()));
  }
}

TEST_CASE("degenerate projections run out of retries") {
  StrandPaths vertical;
  vertical.strand_count = 2;
  for (int s = 0; s <= 16; ++s) {
    vertical.times.push_back(s / 16.0);
    vertical.positions.push_back({{0.0, 1.0}, {0.0, -1.0}});
  }
  ExtractionParams params;
  params.max_retries = 0;  // the default angle projects both points together
  CHECK_THROWS_AS(extract_braid(vertical, params), DegenerateProjection);
  CHECK(extract_braid(vertical).empty());  // retries find a good angle
}

TEST_CASE("full twist verification") {
  for (int k = 2; k <= 5; ++k) CHECK(concentric_loop_is_full_twist(k));
  CHECK_THROWS_AS(concentric_loop_is_full_twist(1), InvalidRange);
  CHECK_THROWS_AS(concentric_loop_is_full_twist(7), InvalidRange);
}
