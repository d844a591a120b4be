#include "qhopf/qsym.hpp"

#include <map>
#include <stdexcept>

namespace qhopf {

namespace {

template <class C>
using Memo = std::map<std::pair<Composition, Composition>, CompLin<C>>;

template <class C>
CompLin<C> prepend(int part, const CompLin<C>& x) {
  CompLin<C> r;
  for (const auto& [k, c] : x) {
    Composition a{part};
    a.insert(a.end(), k.begin(), k.end());
    r.add_term(a, c);
  }
  return r;
}

template <class C>
const CompLin<C>& qsh(const Composition& a, const Composition& b, MergeRule rule, Memo<C>& memo) {
  auto key = std::make_pair(a, b);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  CompLin<C> r;
  if (a.empty()) {
    r.add_term(b, C(1));
  } else if (b.empty()) {
    r.add_term(a, C(1));
  } else {
    Composition a1(a.begin() + 1, a.end()), b1(b.begin() + 1, b.end());
    r += prepend(a[0], qsh(a1, b, rule, memo));
    r += prepend(b[0], qsh(a, b1, rule, memo)) * qpow<C>(b[0] * weight(a));
    int e = rule == MergeRule::normal_order ? b[0] * (weight(a) - a[0]) : a[0] * b[0];
    r += prepend(a[0] + b[0], qsh(a1, b1, rule, memo)) * qpow<C>(e);
  }
  return memo.emplace(key, std::move(r)).first->second;
}

}  // namespace

template <class C>
CompLin<C> q_quasishuffle(const Composition& a, const Composition& b, MergeRule rule) {
  Memo<C> memo;
  return qsh<C>(a, b, rule, memo);
}

template <class C>
CompLin<C> m_product(const CompLin<C>& x, const CompLin<C>& y, MergeRule rule) {
  Memo<C> memo;
  CompLin<C> r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) r += qsh<C>(a, b, rule, memo) * (ca * cb);
  return r;
}

Permutation representative_permutation(const Composition& a) {
  Permutation w;
  int start = 1;
  for (int len : complement(a)) {
    for (int k = start + len - 1; k >= start; --k) w.push_back(k);
    start += len;
  }
  return w;
}

template <class C>
CompLin<C> f_product_via(const Permutation& w, const Permutation& w2) {
  CompLin<C> r;
  for (const auto& [u, c] : shifted_q_concat_product<C>(w, w2)) r.add_term(descent_composition(u), c);
  return r;
}

template <class C>
CompLin<C> f_product(const CompLin<C>& x, const CompLin<C>& y) {
  CompLin<C> r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      r += f_product_via<C>(representative_permutation(a), representative_permutation(b)) * (ca * cb);
  return r;
}

template <class C>
CompLin<C> m_to_f(const CompLin<C>& x) {
  CompLin<C> r;
  for (const auto& [a, c] : x)
    for (const auto& b : refinements(a)) r.add_term(b, c * C(sign_pow(length(b) - length(a))));
  return r;
}

template <class C>
CompLin<C> f_to_m(const CompLin<C>& x) {
  CompLin<C> r;
  for (const auto& [a, c] : x)
    for (const auto& b : refinements(a)) r.add_term(b, c);
  return r;
}

template <class C>
CompTensor<C> coproduct_m(const CompLin<C>& x) {
  CompTensor<C> r;
  for (const auto& [a, c] : x)
    for (std::size_t i = 0; i <= a.size(); ++i)
      r.add_term({Composition(a.begin(), a.begin() + i), Composition(a.begin() + i, a.end())}, c);
  return r;
}

template <class C>
CompTensor<C> coproduct_f(const CompLin<C>& x) {
  CompTensor<C> r;
  for (const auto& [a, c] : x) {
    for (std::size_t i = 0; i <= a.size(); ++i)
      r.add_term({Composition(a.begin(), a.begin() + i), Composition(a.begin() + i, a.end())}, c);
    // β ∨ γ = α: split one part into two positive pieces.
    for (std::size_t i = 0; i < a.size(); ++i)
      for (int s = 1; s < a[i]; ++s) {
        Composition b(a.begin(), a.begin() + i), g(a.begin() + i + 1, a.end());
        b.push_back(s);
        g.insert(g.begin(), a[i] - s);
        r.add_term({b, g}, c);
      }
  }
  return r;
}

template <class C>
CompLin<C> h_elem(int n) {
  CompLin<C> r;
  for (const auto& a : compositions_of(n)) r.add_term(a, C(1));
  return r;
}

template <class C>
CompLin<C> e_elem(int n) {
  return CompLin<C>(Composition(n, 1));
}

template <class C>
MonoLin<C> monomial_expand(const CompLin<C>& x, int m) {
  MonoLin<C> r;
  for (const auto& [a, c] : x) {
    int len = length(a);
    if (len > m) continue;
    std::vector<int> pick(m, 0);
    std::fill(pick.end() - len, pick.end(), 1);
    do {
      WeakComposition g(m, 0);
      int k = 0;
      for (int i = 0; i < m; ++i)
        if (pick[i]) g[i] = a[k++];
      r.add_term(g, c);
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return r;
}

template <class C>
MonoLin<C> normal_order_multiply(const MonoLin<C>& x, const MonoLin<C>& y) {
  MonoLin<C> r;
  for (const auto& [g, cg] : x)
    for (const auto& [d, cd] : y) {
      if (g.size() != d.size()) throw std::invalid_argument("normal_order_multiply: length mismatch");
      int e = 0;
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) e += g[i] * d[j];
      WeakComposition s = g;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += d[i];
      r.add_term(s, cg * cd * qpow<C>(e));
    }
  return r;
}

template <class C>
CompLin<C> ce_identity(int n) {
  CompLin<C> r;
  for (int k = 0; k <= n; ++k)
    r += m_product<C>(e_elem<C>(k), h_elem<C>(n - k)) * (C(sign_pow(k)) * qpow<C>(static_cast<int>(binom2(k))));
  return r;
}

#define QHOPF_INSTANTIATE(C)                                                                \
  template CompLin<C> q_quasishuffle<C>(const Composition&, const Composition&, MergeRule); \
  template CompLin<C> m_product<C>(const CompLin<C>&, const CompLin<C>&, MergeRule);        \
  template CompLin<C> f_product<C>(const CompLin<C>&, const CompLin<C>&);                   \
  template CompLin<C> f_product_via<C>(const Permutation&, const Permutation&);             \
  template CompLin<C> m_to_f<C>(const CompLin<C>&);                                         \
  template CompLin<C> f_to_m<C>(const CompLin<C>&);                                         \
  template CompTensor<C> coproduct_m<C>(const CompLin<C>&);                                 \
  template CompTensor<C> coproduct_f<C>(const CompLin<C>&);                                 \
  template CompLin<C> h_elem<C>(int);                                                       \
  template CompLin<C> e_elem<C>(int);                                                       \
  template MonoLin<C> monomial_expand<C>(const CompLin<C>&, int);                           \
  template MonoLin<C> normal_order_multiply<C>(const MonoLin<C>&, const MonoLin<C>&);       \
  template CompLin<C> ce_identity<C>(int);

QHOPF_INSTANTIATE(LaurentPoly)
QHOPF_INSTANTIATE(long long)

}  // namespace qhopf
