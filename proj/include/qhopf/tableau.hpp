#pragma once

#include "qhopf/composition.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace qhopf {

using Word = std::vector<int>;
using Permutation = std::vector<int>;

// A (skew) tableau. rows[i] holds the entries of row i to the right of the
// inner shape, so the outer row length is inner[i] + rows[i].size().
struct Tableau {
  Partition inner;
  std::vector<std::vector<int>> rows;

  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> r) : rows(std::move(r)) { trim(); }
  Tableau(Partition in, std::vector<std::vector<int>> r) : inner(std::move(in)), rows(std::move(r)) { trim(); }

  int inner_at(std::size_t i) const { return i < inner.size() ? inner[i] : 0; }
  Partition shape() const;  // outer shape
  int size() const;          // number of non-inner boxes
  bool is_straight() const { return inner.empty(); }
  int at(std::size_t i, int j) const { return rows[i][j - inner_at(i)]; }  // j is an absolute column

  void trim();

  auto operator<=>(const Tableau&) const = default;
};

bool is_semistandard(const Tableau& t);
bool is_standard(const Tableau& t);

Word row_word(const Tableau& t);
std::vector<int> content(const Tableau& t);  // multiplicities of 1..max
Tableau standardize_tableau(const Tableau& t);

long long inv(const Tableau& t);    // straight shapes only
long long inv_c(const Tableau& t);  // accepts skew
int sign(const Tableau& t);         // (-1)^{ℓ(w(st T))}
long long inv_between(const Tableau& a, const Tableau& b);  // #{(i,j) ∈ a×b : i > j}

Tableau t_lambda(const Partition& la);
// Standard descents: k with k+1 in a strictly lower row.
std::vector<int> descent_set(const Tableau& t);
Composition descent_composition(const Tableau& t);

Tableau row_insert(const Tableau& t, int x);
Tableau insertion_tableau(const Word& w);
Tableau dot_product(const Tableau& a, const Tableau& b);
Tableau rect(const Tableau& s);
Tableau concat_on_top(const Tableau& t, const Tableau& s);  // (T)_S
Tableau relabel(const Tableau& t, const std::vector<int>& values);  // k -> values[k-1]

// Skew shapes λ/μ with |λ/μ| = k, obtained from μ by adding k boxes.
std::vector<Tableau> syt(const Partition& outer, const Partition& inner = {});
std::vector<Tableau> ssyt(const Partition& outer, int max_entry, const Partition& inner = {});
// Standard skew tableaux with k boxes over inner shape mu, any outer shape.
std::vector<Tableau> standard_extensions(const Partition& mu, int k);

struct Split {
  int p = 0;
  std::vector<int> lower;  // i: entries of row 2 of U_p
  std::vector<int> upper;  // j: entries of row 1 of U_p
  Tableau u;               // the intermediate tableau U_p
};
// Reverse slides through the outside corner of row 2 (two-row straight SYT).
std::vector<Split> reverse_slide_expansion(const Tableau& t);

std::string format_tableau(const Tableau& t);
Tableau parse_tableau(const std::string& s);

}  // namespace qhopf
