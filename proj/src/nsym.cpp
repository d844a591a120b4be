#include "qhopf/nsym.hpp"

#include <map>
#include <stdexcept>

namespace qhopf {

template <class C>
CompLin<C> h_product(const CompLin<C>& x, const CompLin<C>& y) {
  CompLin<C> r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) r.add_term(concat(a, b), ca * cb);
  return r;
}

template <class C>
CompLin<C> r_to_h(const CompLin<C>& x) {
  CompLin<C> r;
  for (const auto& [a, c] : x)
    for (const auto& b : coarsenings(a)) r.add_term(b, c * C(sign_pow(length(a) - length(b))));
  return r;
}

template <class C>
CompLin<C> h_to_r(const CompLin<C>& x) {
  CompLin<C> r;
  for (const auto& [a, c] : x)
    for (const auto& b : coarsenings(a)) r.add_term(b, c);
  return r;
}

// E_n = Σ_{α ⊨ n} (-1)^{n-ℓ(α)} H_α, and symmetrically H_n in terms of E.
template <class C>
CompLin<C> e_to_h(const CompLin<C>& x) {
  CompLin<C> r;
  for (const auto& [a, c] : x) {
    CompLin<C> prod(Composition{}, c);
    for (int part : a) {
      CompLin<C> en;
      for (const auto& b : compositions_of(part)) en.add_term(b, C(sign_pow(part - length(b))));
      prod = h_product(prod, en);
    }
    r += prod;
  }
  return r;
}

template <class C>
CompLin<C> h_to_e(const CompLin<C>& x) {
  return e_to_h(x);
}

template <class C>
C theta(const WeakComposition& g, const WeakComposition& d) {
  if (g.size() != d.size()) throw std::invalid_argument("theta: length mismatch");
  int e = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) e += g[i] * d[j];
  return qpow<C>(e);
}

template <class C>
CompTensor<C> coproduct_q(const CompLin<C>& x) {
  CompTensor<C> r;
  for (const auto& [a, c] : x) {
    WeakComposition g(a.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == a.size()) {
        WeakComposition d(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) d[k] = a[k] - g[k];
        r.add_term({collapse(g), collapse(d)}, c * theta<C>(g, d));
        return;
      }
      for (int v = 0; v <= a[i]; ++v) {
        g[i] = v;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
  return r;
}

template <class C>
C canonical_pair(const CompLin<C>& m, const CompLin<C>& h) {
  C s{};
  for (const auto& [a, c] : m) {
    C v = h.coefficient_of(a);
    if (!is_zero(v)) s += c * v;
  }
  return s;
}

template <class C>
CompLin<C> phi(const CompLin<C>& x) {
  CompLin<C> r;
  std::map<Composition, CompLin<C>> cache;
  for (const auto& [a, c] : x) {
    auto it = cache.find(a);
    if (it == cache.end()) {
      CompLin<C> p(Composition{});
      for (int part : a) p = m_product<C>(p, h_elem<C>(part));
      it = cache.emplace(a, p).first;
    }
    r += it->second * c;
  }
  return r;
}

template <class C>
C inner_form(const CompLin<C>& x, const CompLin<C>& y) {
  return canonical_pair<C>(phi<C>(x), y);
}

template <class C>
C inner_form_descents(const Composition& a, const Composition& b) {
  if (weight(a) != weight(b)) return C{};
  C s{};
  for (const auto& w : permutations_of(weight(a)))
    if (refines(descent_composition(inverse(w)), a) && refines(descent_composition(w), b))
      s += qpow<C>(static_cast<int>(inversions(w)));
  return s;
}

template <class C>
C ribbon_form(const Composition& a, const Composition& b) {
  if (weight(a) != weight(b)) throw std::invalid_argument("ribbon_form: weight mismatch");
  C s{};
  for (const auto& w : permutations_of(weight(a)))
    if (descent_composition(inverse(w)) == a && descent_composition(w) == b)
      s += qpow<C>(static_cast<int>(inversions(w)));
  return s;
}

template <class C>
CompLin<C> psi1(const CompLin<C>& x) {
  CompLin<C> r;
  for (const auto& [a, c] : x) {
    CompLin<C> e(a);
    r += e_to_h(e) * (c * qpow<C>(-static_cast<int>(binom2_sum(a))));
  }
  return r;
}

template <class C>
CompLin<C> psi2(const CompLin<C>& x) {
  CompLin<C> r;
  for (const auto& [a, c] : x) {
    int n = weight(a);
    r.add_term(a, c * C(sign_pow(n)) * qpow<C>(static_cast<int>(binom2(n))));
  }
  return r;
}

template <class C>
CompLin<C> psi3(const CompLin<C>& x) {
  CompLin<C> r;
  for (const auto& [a, c] : x) r.add_term(reverse(a), c);
  return r;
}

template <class C>
CompLin<C> antipode(const CompLin<C>& x) {
  return psi1(psi2(psi3(x)));
}

std::vector<KernelGenerator> odd_kernel_generators(int max_degree) {
  std::vector<KernelGenerator> out;
  auto hh = [](int a, int b) { return collapse(Composition{a, b}); };
  for (int d = 2; d <= max_degree; ++d)
    for (int n = 1; n < d; ++n) {
      int m = d - n;
      KernelGenerator g{n, m, {}};
      if (d % 2 == 0) {
        g.h.add_term(hh(n, m), 1);
        g.h.add_term(hh(m, n), -1);
      } else {
        long long s = sign_pow(n);
        g.h.add_term(hh(n, m), 1);
        g.h.add_term(hh(m, n), s);
        g.h.add_term(hh(n + 1, m - 1), -s);
        g.h.add_term(hh(m - 1, n + 1), -1);
      }
      out.push_back(g);
    }
  return out;
}

std::vector<CompLin<long long>> odd_kernel_span(int n) {
  std::vector<CompLin<long long>> out;
  for (const auto& g : odd_kernel_generators(n)) {
    int d = g.n + g.m;
    for (int left = 0; left <= n - d; ++left)
      for (const auto& b : compositions_of(left))
        for (const auto& c : compositions_of(n - d - left)) {
          auto x = h_product<long long>(h_product<long long>(CompLin<long long>(b), g.h), CompLin<long long>(c));
          if (!x.empty()) out.push_back(x);
        }
  }
  return out;
}

#define QHOPF_INSTANTIATE(C)                                                 \
  template CompLin<C> h_product<C>(const CompLin<C>&, const CompLin<C>&);    \
  template CompLin<C> r_to_h<C>(const CompLin<C>&);                          \
  template CompLin<C> h_to_r<C>(const CompLin<C>&);                          \
  template CompLin<C> e_to_h<C>(const CompLin<C>&);                          \
  template CompLin<C> h_to_e<C>(const CompLin<C>&);                          \
  template C theta<C>(const WeakComposition&, const WeakComposition&);       \
  template CompTensor<C> coproduct_q<C>(const CompLin<C>&);                  \
  template C canonical_pair<C>(const CompLin<C>&, const CompLin<C>&);        \
  template CompLin<C> phi<C>(const CompLin<C>&);                             \
  template C inner_form<C>(const CompLin<C>&, const CompLin<C>&);            \
  template C inner_form_descents<C>(const Composition&, const Composition&); \
  template C ribbon_form<C>(const Composition&, const Composition&);         \
  template CompLin<C> psi1<C>(const CompLin<C>&);                            \
  template CompLin<C> psi2<C>(const CompLin<C>&);                            \
  template CompLin<C> psi3<C>(const CompLin<C>&);                            \
  template CompLin<C> antipode<C>(const CompLin<C>&);

QHOPF_INSTANTIATE(LaurentPoly)
QHOPF_INSTANTIATE(long long)

}  // namespace qhopf
