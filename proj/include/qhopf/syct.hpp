#pragma once

#include "qhopf/odd.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qhopf {

// A (skew) Young composition tableau. base occupies the first base[i] boxes
// of row i; rows[i] holds the entries to the right of them.
struct CompositionTableau {
  Composition base;
  std::vector<std::vector<int>> rows;

  CompositionTableau() = default;
  explicit CompositionTableau(std::vector<std::vector<int>> r) : rows(std::move(r)) { trim(); }
  CompositionTableau(Composition b, std::vector<std::vector<int>> r) : base(std::move(b)), rows(std::move(r)) { trim(); }

  int base_at(std::size_t i) const { return i < base.size() ? base[i] : 0; }
  Composition shape() const;  // outer composition
  int size() const;
  bool filled(std::size_t i, int j) const;  // j is an absolute column, 0-based
  bool in_base(std::size_t i, int j) const { return j < base_at(i); }
  int at(std::size_t i, int j) const { return rows[i][j - base_at(i)]; }

  void trim();

  auto operator<=>(const CompositionTableau&) const = default;
};

using Chain = std::vector<Composition>;

// Young composition poset.
std::vector<Composition> covers(const Composition& a);
bool is_cover(const Composition& a, const Composition& b);
// Saturated chains of length n starting at a.
std::vector<Chain> saturated_chains(const Composition& a, int n);

CompositionTableau syct_from_chain(const Chain& chain);
Chain chain_from_syct(const CompositionTableau& t);
std::vector<int> column_sequence(const Chain& chain);  // 1-based columns

bool is_ssyct(const CompositionTableau& t);
bool is_syct(const CompositionTableau& t);

// SYCT(outer ⫽ base) from chains; the _filter versions test every filling.
std::vector<CompositionTableau> enumerate_syct(const Composition& outer, const Composition& base = {});
std::vector<CompositionTableau> enumerate_syct_filter(const Composition& outer, const Composition& base = {});
// SSYCT with entries ≤ max_entry, via (st, cont).
std::vector<CompositionTableau> enumerate_ssyct(const Composition& outer, int max_entry, const Composition& base = {});
std::vector<CompositionTableau> enumerate_ssyct_filter(const Composition& outer, int max_entry,
                                                       const Composition& base = {});

CompositionTableau u_alpha(const Composition& a);

std::vector<int> content(const CompositionTableau& t);
CompositionTableau standardize_syct(const CompositionTableau& t);
long long inv_c(const CompositionTableau& t);
// #{(x, y) ∈ a × b : col(x) > col(y)} over filled boxes.
long long inv_c_between(const CompositionTableau& a, const CompositionTableau& b);
std::vector<int> descent_set(const CompositionTableau& t);
Composition descent_composition(const CompositionTableau& t);

// ρ_β and its inverse.
Tableau mason(const CompositionTableau& t);
std::optional<CompositionTableau> try_mason_inverse(const Tableau& t, const Composition& base = {});
CompositionTableau mason_inverse(const Tableau& t, const Composition& base = {});

Word column_word(const CompositionTableau& t);
CompositionTableau rect_syct(const CompositionTableau& t);
bool c_equivalent_words(const Word& w, const Word& w2);
bool c_equivalent(const CompositionTableau& a, const CompositionTableau& b);

// u_k keeps the entries ≤ k; upper_part is the standardized rest over sh(u_k).
CompositionTableau lower_part(const CompositionTableau& t, int k);
CompositionTableau upper_part(const CompositionTableau& t, int k);

// Odd quasisymmetric Schur functions. Keys of an OqsLin mean 𝒮_β.
using OqsLin = CompLin<long long>;
OddLin odd_qs_schur(const Composition& a);    // F basis
OddLin odd_qs_schur_m(const Composition& a);  // M basis, from SSYCT contents
OddLin oqs_to_f(const OqsLin& x);
std::optional<OqsLin> oqs_decompose(const OddLin& f_basis);

bool refinement_check(const Partition& la);
// Triangular 𝒮 → F matrix in degree n with diagonal (-1)^{inv(ρ(U_α))}.
bool triangularity_check(int n);

// nullopt marks an undefined removal.
std::optional<Composition> rem_s(const Composition& a, int s);
std::optional<Composition> row_s(const Composition& a, std::vector<int> s);
std::optional<Composition> col_m(const Composition& a, std::vector<int> m);
// Columns (1-based) occupied by ν/λ, with multiplicity.
std::vector<int> strip_columns(const Partition& nu, const Partition& la);

OqsLin oqs_pieri(const Composition& a, int n, Strip kind);

long long oc_coefficient(const Composition& a, const Composition& b, const Composition& g);
OqsLin oc_row(const Composition& a, const Composition& b);  // γ ↦ OC^γ_{αβ}

struct YncTerm {
  long long coeff = 0;
  int chains = 0;
};
// 𝒮*_α 𝒮*_(n) (horizontal) or 𝒮*_α 𝒮*_(1ⁿ) (vertical), from chains.
std::map<Composition, YncTerm> ync_pieri(const Composition& a, int n, Strip kind);

std::string format_syct(const CompositionTableau& t);
CompositionTableau parse_syct(const std::string& s);

}  // namespace qhopf
