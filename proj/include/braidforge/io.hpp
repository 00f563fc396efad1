#pragma once

#include <iosfwd>
#include <string>

#include "braidforge/braid.hpp"
#include "braidforge/fpgroup.hpp"
#include "braidforge/garside.hpp"
#include "braidforge/trajectory.hpp"

namespace braidforge {

// Braid word text format:
//   n=<strands>
//   <signed letters, whitespace separated; empty line is the identity>
BraidWord read_braid_word(std::istream& in);
BraidWord read_braid_word_file(const std::string& path);
std::string format_braid_word(const BraidWord& w);

// Presentation text format:
//   gens: a b c
//   rel: a b a b' a' b'
Presentation read_presentation(std::istream& in);
Presentation read_presentation_file(const std::string& path);
std::string format_presentation(const Presentation& p);

// Free words in the same token syntax (lowercase name, trailing ' inverts).
FreeWord parse_free_word(const Presentation& p, const std::string& text);

// Trajectory input format:
//   k=<strands>
//   t, re_1, im_1, ..., re_k, im_k     (one row per sample, increasing t)
StrandPaths read_strand_paths(std::istream& in);
StrandPaths read_strand_paths_file(const std::string& path);

// One-line image notation, e.g. "2 1 3".
std::string format_permutation(const Permutation& p);

// "p=<int>; factors=<perm>;<perm>;..."
std::string format_normal_form(const NormalForm& nf);

}  // namespace braidforge
