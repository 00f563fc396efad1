#include <doctest.h>

#include <sstream>

#include "braidforge/io.hpp"

using namespace braidforge;

TEST_CASE("braid word format") {
  std::istringstream in("n=3\n1 2 1\n");
  const BraidWord w = read_braid_word(in);
  CHECK(w.strands() == 3);
  CHECK(w.letters() == std::vector<int>{1, 2, 1});
  CHECK(format_braid_word(w) == "n=3\n1 2 1\n");

  std::istringstream empty("n=4\n\n");
  CHECK(read_braid_word(empty).empty());
  std::istringstream missing("n=4\n");
  CHECK(read_braid_word(missing).empty());

  std::istringstream bad("m=3\n1\n");
  CHECK_THROWS_AS(read_braid_word(bad), ParseError);
  std::istringstream overflow("n=3\n5\n");
  CHECK_THROWS_AS(read_braid_word(overflow), InvalidLetter);
}

TEST_CASE("presentation format") {
  const std::string text = "gens: a b\nrel: a b a b' a' b'\nrel: a a\n";
  std::istringstream in(text);
  const Presentation p = read_presentation(in);
  CHECK(p.generator_count() == 2);
  CHECK(p.relator_count() == 2);
  CHECK(p.has_relator({1, 2, 1, -2, -1, -2}));
  CHECK(format_presentation(p) == text);

  std::istringstream round(format_presentation(p));
  CHECK(read_presentation(round) == p);

  std::istringstream no_gens("rel: a\n");
  CHECK_THROWS_AS(read_presentation(no_gens), ParseError);
  std::istringstream unknown("gens: a\nrel: b\n");
  CHECK_THROWS_AS(read_presentation(unknown), ParseError);
}

TEST_CASE("free word parsing") {
  const Presentation p({"a", "b"}, {});
  CHECK(parse_free_word(p, "a b' a'") == FreeWord{1, -2, -1});
  CHECK(parse_free_word(p, "") == FreeWord{});
}

TEST_CASE("trajectory format") {
  const std::string text =
      "k=2\n"
      "0.0, 1.0, 0.0, 2.0, 0.0\n"
      "0.5, -1.0, 0.0, -2.0, 0.0\n"
      "1.0, 1.0, 0.0, 2.0, 0.0\n";
  std::istringstream in(text);
  const StrandPaths paths = read_strand_paths(in);
  CHECK(paths.strand_count == 2);
  CHECK(paths.times.size() == 3);
  CHECK(paths.positions[1][1] == std::complex<double>(-2.0, 0.0));

  std::istringstream short_row("k=2\n0.0, 1.0, 0.0\n");
  CHECK_THROWS_AS(read_strand_paths(short_row), ParseError);
}

TEST_CASE("permutation and normal form formatting") {
  CHECK(format_permutation(Permutation::from_images({2, 3, 1})) == "2 3 1");
  const NormalForm nf = normal_form(BraidWord(3, {-1}));
  CHECK(format_normal_form(nf) == "p=-1; factors=2 3 1");
  const NormalForm twist = normal_form(full_twist_word(3, FullTwistVariant::kA));
  CHECK(format_normal_form(twist) == "p=2; factors=");
}
