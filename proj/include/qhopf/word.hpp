#pragma once

#include "qhopf/module.hpp"
#include "qhopf/tableau.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace qhopf {

Permutation standardize(const Word& w);
long long inversions(const Word& w);
std::vector<int> word_descents(const Word& w);
Composition descent_composition(const Word& w);
bool is_permutation(const Word& w);
Permutation inverse(const Permutation& w);
Word shift(const Word& w, int by);
std::vector<Permutation> permutations_of(int n);  // lexicographic

// Σ over interleavings of q^{t} w, t = #(v-letter, u-letter) pairs with the v-letter first.
template <class C = LaurentPoly>
ModuleElement<Word, C> q_shuffle(const Word& u, const Word& v) {
  ModuleElement<Word, C> out;
  Word cur;
  cur.reserve(u.size() + v.size());
  auto rec = [&](auto&& self, std::size_t i, std::size_t j, int t) -> void {
    if (i == u.size() && j == v.size()) {
      out.add_term(cur, qpow<C>(t));
      return;
    }
    if (i < u.size()) {
      cur.push_back(u[i]);
      self(self, i + 1, j, t);
      cur.pop_back();
    }
    if (j < v.size()) {
      cur.push_back(v[j]);
      self(self, i, j + 1, t + static_cast<int>(u.size() - i));
      cur.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

// w *'_q w' = w ⧢_q shift(w').
template <class C = LaurentPoly>
ModuleElement<Permutation, C> shifted_q_concat_product(const Permutation& w, const Permutation& w2) {
  return q_shuffle<C>(w, shift(w2, static_cast<int>(w.size())));
}

// The product of MR: Σ uv with st(u)=w, st(v)=w', alph(u) ∪ alph(v) = [p+q].
template <class C = LaurentPoly>
ModuleElement<Permutation, C> mr_product(const Permutation& w, const Permutation& w2) {
  const int p = static_cast<int>(w.size()), n = p + static_cast<int>(w2.size());
  ModuleElement<Permutation, C> out;
  std::vector<int> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + p, 1);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<int> a, b;
    for (int x = 1; x <= n; ++x) (pick[x - 1] ? a : b).push_back(x);
    Permutation uv;
    for (int x : w) uv.push_back(a[x - 1]);
    for (int x : w2) uv.push_back(b[x - 1]);
    out.add_term(uv, C(1));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

struct RskPair {
  Tableau p;
  Tableau q;
};
RskPair rsk(const Word& w);
Word rsk_inverse(const Tableau& p, const Tableau& q);

// Elementary Knuth neighbours of w.
std::vector<Word> knuth_moves(const Word& w);
// Classes of S_n under the transitive closure of knuth_moves, each sorted, in order of least member.
std::vector<std::vector<Permutation>> knuth_classes(int n, int bound = 7);

std::string format_word(const Word& w);
Word parse_word(const std::string& s);

}  // namespace qhopf
