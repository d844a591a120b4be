#pragma once

#include "qhopf/composition.hpp"
#include "qhopf/module.hpp"
#include "qhopf/word.hpp"

namespace qhopf {

// Composition-keyed elements. The basis (M, F, H, E, R, ...) is implied by the function used.
template <class C = LaurentPoly>
using CompLin = ModuleElement<Composition, C>;
template <class C = LaurentPoly>
using CompTensor = Tensor<Composition, Composition, C>;

enum class MergeRule {
  normal_order,  // q^{β₁(|α|−α₁)}, agrees with multiplication in A_q
  printed,       // q^{α₁β₁}
};

inline int comp_degree(const Composition& a) { return weight(a); }

template <class C>
CompLin<C> q_quasishuffle(const Composition& a, const Composition& b, MergeRule rule = MergeRule::normal_order);

template <class C>
CompLin<C> m_product(const CompLin<C>& x, const CompLin<C>& y, MergeRule rule = MergeRule::normal_order);

// Minimal-length permutation with descent set des(α).
Permutation representative_permutation(const Composition& a);

template <class C>
CompLin<C> f_product(const CompLin<C>& x, const CompLin<C>& y);
// F_{c(w)} F_{c(w')} for explicit representatives.
template <class C>
CompLin<C> f_product_via(const Permutation& w, const Permutation& w2);

template <class C>
CompLin<C> m_to_f(const CompLin<C>& x);
template <class C>
CompLin<C> f_to_m(const CompLin<C>& x);

template <class C>
CompTensor<C> coproduct_m(const CompLin<C>& x);
template <class C>
CompTensor<C> coproduct_f(const CompLin<C>& x);

template <class C>
CompLin<C> h_elem(int n);  // M basis
template <class C>
CompLin<C> e_elem(int n);  // M basis

// Normal-ordered monomials in x_1..x_m, keyed by exponent vectors of length m.
template <class C = LaurentPoly>
using MonoLin = ModuleElement<WeakComposition, C>;

template <class C>
MonoLin<C> monomial_expand(const CompLin<C>& m_basis, int m);
template <class C>
MonoLin<C> normal_order_multiply(const MonoLin<C>& a, const MonoLin<C>& b);

// Degree-n part of Σ_k (-1)^k q^{C(k,2)} e_k h_{n-k} (M basis).
template <class C>
CompLin<C> ce_identity(int n);

}  // namespace qhopf
