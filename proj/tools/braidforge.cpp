#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "braidforge/garside.hpp"
#include "braidforge/io.hpp"
#include "braidforge/presentations.hpp"
#include "braidforge/suite.hpp"
#include "braidforge/trajectory.hpp"

namespace {

using namespace braidforge;

DeltaVariant delta_variant_of(const std::string& name) {
  if (name == "1" || name == "ascending-stacks") return DeltaVariant::kAscendingStacks;
  if (name == "2" || name == "descending-stacks") return DeltaVariant::kDescendingStacks;
  if (name == "3" || name == "reverse-stacks") return DeltaVariant::kReverseStacks;
  if (name == "4" || name == "tail-stacks") return DeltaVariant::kTailStacks;
  throw CLI::ValidationError("--variant", "expected 1..4 or a variant name");
}

FullTwistVariant twist_variant_of(const std::string& name) {
  if (name == "A") return FullTwistVariant::kA;
  if (name == "B") return FullTwistVariant::kB;
  if (name == "C") return FullTwistVariant::kC;
  if (name == "D") return FullTwistVariant::kD;
  if (name == "D'" || name == "Dp") return FullTwistVariant::kDprime;
  if (name == "E") return FullTwistVariant::kE;
  if (name == "F") return FullTwistVariant::kF;
  throw CLI::ValidationError("--variant", "expected one of A B C D D' E F");
}

Presentation family_presentation(const std::string& family, int k, int i, int n) {
  if (family == "pb") return pure_braid_presentation(k);
  if (family == "artin") return artin_presentation(k);
  if (family == "sphere-pure") return sphere_pure_presentation(k);
  if (family == "sphere") return sphere_braid_presentation(k);
  if (family == "f-stratum") return f_stratum_presentation(StratumParams(k, i, n));
  if (family == "c-stratum") return c_stratum_presentation(StratumParams(k, i, n));
  if (family == "pappus-pi") return pappus_pi_presentation();
  if (family == "pappus-p") return pappus_p_presentation();
  throw CLI::ValidationError("--family", "unknown family '" + family + "'");
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("BRAIDFORGE_SEED");
  if (!env) return fallback;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw Error("BRAIDFORGE_SEED must be an unsigned integer");
  }
}

std::vector<FreeWord> parse_subgroup(const Presentation& p, const std::string& text) {
  std::vector<FreeWord> words;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string part =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (part.find_first_not_of(" \t") != std::string::npos)
      words.push_back(parse_free_word(p, part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return words;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidforge: braid words, Garside normal forms, finitely presented "
               "groups, and braid extraction from trajectories"};
  app.require_subcommand(1);

  // normalize
  auto* cmd_normalize = app.add_subcommand("normalize", "left-greedy normal form of a braid word");
  std::string normalize_file;
  cmd_normalize->add_option("file", normalize_file)->required();

  // equal
  auto* cmd_equal = app.add_subcommand("equal", "decide whether two braid words are equal");
  std::string equal_a, equal_b;
  cmd_equal->add_option("a", equal_a)->required();
  cmd_equal->add_option("b", equal_b)->required();

  // perm
  auto* cmd_perm = app.add_subcommand("perm", "permutation image of a braid word");
  std::string perm_file;
  cmd_perm->add_option("file", perm_file)->required();

  // delta
  auto* cmd_delta = app.add_subcommand("delta", "one of the half-twist words");
  int delta_n = 0;
  std::string delta_variant = "1";
  cmd_delta->add_option("--n", delta_n)->required();
  cmd_delta->add_option("--variant", delta_variant);

  // fulltwist
  auto* cmd_twist = app.add_subcommand("fulltwist", "one of the full-twist words");
  int twist_n = 0;
  std::string twist_variant = "A";
  cmd_twist->add_option("--n", twist_n)->required();
  cmd_twist->add_option("--variant", twist_variant);

  // expand-alpha
  auto* cmd_alpha = app.add_subcommand("expand-alpha", "pure generator as an Artin word");
  int alpha_n = 0, alpha_i = 0, alpha_j = 0;
  cmd_alpha->add_option("--n", alpha_n)->required();
  cmd_alpha->add_option("--i", alpha_i)->required();
  cmd_alpha->add_option("--j", alpha_j)->required();

  // abelianize
  auto* cmd_ab = app.add_subcommand("abelianize", "first homology of a presentation");
  std::string ab_file;
  cmd_ab->add_option("file", ab_file)->required();

  // coset
  auto* cmd_coset = app.add_subcommand("coset", "coset enumeration");
  std::string coset_file, coset_family, coset_subgroup;
  int coset_k = 0, coset_i = 1, coset_n = 1, coset_max = 100000;
  cmd_coset->add_option("file", coset_file);
  cmd_coset->add_option("--family", coset_family);
  cmd_coset->add_option("--k", coset_k);
  cmd_coset->add_option("--i", coset_i);
  cmd_coset->add_option("--n", coset_n);
  cmd_coset->add_option("--subgroup", coset_subgroup);
  cmd_coset->add_option("--max", coset_max);

  // eliminate
  auto* cmd_elim = app.add_subcommand("eliminate", "Tietze generator elimination");
  std::string elim_file, elim_gen;
  int elim_rel = 0;
  cmd_elim->add_option("file", elim_file)->required();
  cmd_elim->add_option("--gen", elim_gen)->required();
  cmd_elim->add_option("--rel", elim_rel, "defining relator, 1-based")->required();

  // check-hom
  auto* cmd_hom = app.add_subcommand("check-hom", "test generator images in a symmetric group");
  std::string hom_file, hom_images;
  int hom_sym = 0;
  cmd_hom->add_option("file", hom_file)->required();
  cmd_hom->add_option("--sym", hom_sym, "degree of the symmetric group")->required();
  cmd_hom->add_option("--images", hom_images,
                      "comma-separated image lists, one per generator")
      ->required();

  // presentation
  auto* cmd_pres = app.add_subcommand("presentation", "emit a built-in presentation");
  std::string pres_family;
  int pres_k = 0, pres_i = 1, pres_n = 1;
  cmd_pres->add_option("--family", pres_family)->required();
  cmd_pres->add_option("--k", pres_k);
  cmd_pres->add_option("--i", pres_i);
  cmd_pres->add_option("--n", pres_n);

  // extract-braid
  auto* cmd_extract = app.add_subcommand("extract-braid", "read a braid off sampled trajectories");
  std::string extract_file;
  double extract_angle = 0.0;
  std::optional<std::uint64_t> extract_seed;
  cmd_extract->add_option("file", extract_file)->required();
  cmd_extract->add_option("--angle", extract_angle, "projection angle in radians");
  cmd_extract->add_option("--seed", extract_seed, "retry seed");

  // paper-suite
  auto* cmd_suite = app.add_subcommand("paper-suite", "run every claim check and report");
  int suite_max_n = 6;
  std::string suite_out;
  bool suite_json = false;
  cmd_suite->add_option("--max-n", suite_max_n);
  cmd_suite->add_option("--out", suite_out, "write the report to this path");
  cmd_suite->add_flag("--json", suite_json, "structured single-document format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_normalize) {
      const NormalForm nf = normal_form(read_braid_word_file(normalize_file));
      std::cout << format_normal_form(nf) << "\n";
    } else if (*cmd_equal) {
      const bool eq = braids_equal(read_braid_word_file(equal_a), read_braid_word_file(equal_b));
      std::cout << (eq ? "equal" : "not-equal") << "\n";
    } else if (*cmd_perm) {
      std::cout << format_permutation(permutation_of(read_braid_word_file(perm_file))) << "\n";
    } else if (*cmd_delta) {
      std::cout << format_braid_word(delta_word(delta_n, delta_variant_of(delta_variant)));
    } else if (*cmd_twist) {
      std::cout << format_braid_word(full_twist_word(twist_n, twist_variant_of(twist_variant)));
    } else if (*cmd_alpha) {
      std::cout << format_braid_word(
          expand_pure_generator(PureGenerator(alpha_i, alpha_j, alpha_n)));
    } else if (*cmd_ab) {
      const AbelianInvariants inv = abelianization(read_presentation_file(ab_file));
      std::cout << "free_rank=" << inv.free_rank << "; torsion=";
      for (std::size_t i = 0; i < inv.torsion.size(); ++i)
        std::cout << (i ? " " : "") << inv.torsion[i];
      std::cout << "\n";
    } else if (*cmd_coset) {
      if (coset_family.empty() == coset_file.empty())
        throw CLI::ValidationError("coset", "give either a file or --family");
      const Presentation p = coset_family.empty()
                                 ? read_presentation_file(coset_file)
                                 : family_presentation(coset_family, coset_k, coset_i, coset_n);
      const std::vector<FreeWord> sub = parse_subgroup(p, coset_subgroup);
      const CosetTable t = coset_enumerate(p, sub, coset_max);
      if (sub.empty())
        std::cout << "order=" << t.cosets << "\n";
      else
        std::cout << "index=" << t.cosets << "\n";
    } else if (*cmd_elim) {
      const Presentation p =
          eliminate_generator(read_presentation_file(elim_file), elim_gen, elim_rel);
      std::cout << format_presentation(p);
    } else if (*cmd_hom) {
      const Presentation p = read_presentation_file(hom_file);
      std::vector<std::pair<std::string, Permutation>> images;
      std::size_t start = 0;
      int next_gen = 0;
      while (start <= hom_images.size() && next_gen < p.generator_count()) {
        const std::size_t comma = hom_images.find(',', start);
        const std::string part = hom_images.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        std::istringstream stream(part);
        std::vector<int> image_list;
        int v = 0;
        while (stream >> v) image_list.push_back(v);
        if (static_cast<int>(image_list.size()) != hom_sym)
          throw Error("each image needs exactly --sym entries");
        images.emplace_back(p.generators()[next_gen++],
                            Permutation::from_images(image_list));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      std::cout << (check_homomorphism(p, images) ? "homomorphism" : "not-a-homomorphism")
                << "\n";
    } else if (*cmd_pres) {
      std::cout << format_presentation(family_presentation(pres_family, pres_k, pres_i, pres_n));
    } else if (*cmd_extract) {
      ExtractionParams params;
      params.projection_angle = extract_angle;
      params.retry_seed = extract_seed ? *extract_seed : seed_from_env(params.retry_seed);
      std::cout << format_braid_word(extract_braid(read_strand_paths_file(extract_file), params));
    } else if (*cmd_suite) {
      const SuiteReport report = run_paper_suite(suite_max_n);
      const std::string text = suite_json ? report.to_json() : report.to_tab_text();
      std::cout << text;
      std::cout << "passed=" << report.passed << " failed=" << report.failed
                << " skipped=" << report.skipped << "\n";
      if (!suite_out.empty()) {
        std::ofstream out(suite_out);
        if (!out) throw Error("cannot write '" + suite_out + "'");
        out << text;
      }
      return report.all_passed() ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
