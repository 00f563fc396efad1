#pragma once

#include <functional>
#include <string>
#include <vector>

#include "braidforge/presentations.hpp"

namespace braidforge {

struct SuiteCheck {
  std::string id;
  std::string claim;
  std::string status;  // pass | fail | skipped
  std::string detail;
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;
  int passed = 0;
  int failed = 0;
  int skipped = 0;

  bool all_passed() const { return failed == 0; }
  /// Line-oriented `id<TAB>status<TAB>claim<TAB>detail`, sorted by id.
  std::string to_tab_text() const;
  /// Structured single-document form.
  std::string to_json() const;
};

/// Overridable stratum factories so tests can inject faults.
struct SuiteFactories {
  std::function<Presentation(const StratumParams&)> f_stratum = f_stratum_presentation;
  std::function<Presentation(const StratumParams&)> c_stratum = c_stratum_presentation;
};

/// Runs every claim check in order, 3 <= max_n <= 8. Individual failures are
/// recorded, never thrown.
SuiteReport run_paper_suite(int max_n);
SuiteReport run_paper_suite(int max_n, const SuiteFactories& factories);

/// The individual checks, reusable at pinned ranges by the acceptance suite.
/// Each returns pass/fail and appends a short summary to *detail.
namespace checks {

bool slide_identities(int max_n, std::string* detail);
bool half_twist_words(int max_n, std::string* detail);
bool full_twist_words(int max_n, std::string* detail);
bool pure_factor_cancellation(int max_n, std::string* detail);
bool full_twist_centrality(int max_n, std::string* detail);
bool ordered_stratum_homology(int max_k, std::string* detail,
                              const SuiteFactories& factories = {});
bool unordered_stratum_homology(int max_k, std::string* detail,
                                const SuiteFactories& factories = {});
bool three_point_sphere_order(std::string* detail, const SuiteFactories& factories = {});
bool dicyclic_quotient(std::string* detail, const SuiteFactories& factories = {});
bool triple_line_free_rank(std::string* detail, const SuiteFactories& factories = {});
bool line_pair_reduction(std::string* detail);
bool plane_pappus_reduction(std::string* detail);
bool symmetric_quotient(int max_points, std::string* detail,
                        const SuiteFactories& factories = {});
bool loop_extraction(int max_k, std::string* detail);

}  // namespace checks

}  // namespace braidforge
