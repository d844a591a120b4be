#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qhopf {

struct Failure {
  std::string suite, check, item, lhs, rhs;
  nlohmann::json to_json() const;
};

struct CheckResult {
  std::string suite, check;
  long long cases = 0;
  std::optional<Failure> failure;
  std::string note;  // informational, printed but never affects ok()
  bool ok() const { return !failure; }
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool ok() const;
};

std::vector<std::string> suite_names();  // ring, words, ..., dgg
// Runs one suite ("all" runs every suite) with degree bound max_degree.
std::vector<SuiteResult> run_suite(const std::string& name, int max_degree);

namespace checks {

// ring
CheckResult ring_axioms(int trials, unsigned seed);
CheckResult q_factorials(int max_n);
// words
CheckResult rsk_bijection(int max_n);  // also des(w) = des(Q(w))
CheckResult knuth_classes_match_p(int max_n);
CheckResult sign_formula(int n);  // on all of S_n
CheckResult standardization(int trials, unsigned seed);
// tableaux
CheckResult inv_identity(int trials, unsigned seed);
CheckResult tableau_examples();
// qsym
CheckResult quasishuffle_oracle(int max_total);
CheckResult ce_identity_vanishes(int max_n);
CheckResult f_product_routes(int max_total);
CheckResult coproduct_routes(int max_n);
// nsym
CheckResult pairing_duality(int max_total);
CheckResult inner_form_routes(int max_n);
CheckResult antipode_identity(int max_n);
CheckResult kernel_generators(int max_n);
// mrpr
CheckResult diagram(int max_n);
CheckResult pr_prime_vs_mr_prime(int max_n);
CheckResult pr_vs_jq(int max_n);
// odd
CheckResult golden_s211();
CheckResult odd_kernel_orthogonality(int max_n);
CheckResult osym_membership_negative();
CheckResult odd_lr_routes(int max_total);  // PR′ route, F route, definition row, Σ OC
CheckResult odd_pieri_routes(int max_total);
CheckResult odd_expansions(int max_n);  // h and e expansions against odd Kostka tables, orthogonality
CheckResult odd_left_pieri(int max_total);
// syct
CheckResult syct_examples();
CheckResult golden_s12_s2();
CheckResult syct_enumeration(int max_n);
CheckResult mason_round_trip(int max_cells, int max_entry, int max_base);
CheckResult triangularity_and_refinement(int max_n);
CheckResult oqs_pieri_oracle(int max_total);
CheckResult coproduct_dq(int max_n);
CheckResult cor_612(int max_total);
CheckResult ync_pieri_oracle(int max_total);
CheckResult c_classes(int max_n);
CheckResult phi_of_dual(int max_n);
// dgg
CheckResult graph_duality(int max_rank_symbolic, int max_rank_signed);
CheckResult graph_path_weights(int max_n);
CheckResult ide_identity(int max_n);
CheckResult graph_from_dual_hopf(int max_rank);

}  // namespace checks

}  // namespace qhopf
