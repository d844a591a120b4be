#pragma once

#include "qhopf/qsym.hpp"

#include <vector>

namespace qhopf {

// NSym elements are CompLin<C> in the H basis unless a function says otherwise.

template <class C>
CompLin<C> h_product(const CompLin<C>& x, const CompLin<C>& y);

template <class C>
CompLin<C> r_to_h(const CompLin<C>& x);
template <class C>
CompLin<C> h_to_r(const CompLin<C>& x);
template <class C>
CompLin<C> e_to_h(const CompLin<C>& x);
template <class C>
CompLin<C> h_to_e(const CompLin<C>& x);

// q^{Σ_{i>j} γ_i δ_j}
template <class C>
C theta(const WeakComposition& g, const WeakComposition& d);

template <class C>
CompTensor<C> coproduct_q(const CompLin<C>& x);

// <M-basis element, H-basis element>
template <class C>
C canonical_pair(const CompLin<C>& m_basis, const CompLin<C>& h_basis);

// Forgetful map, returned in the M basis.
template <class C>
CompLin<C> phi(const CompLin<C>& x);

// (x, y) = <φ(x), y>
template <class C>
C inner_form(const CompLin<C>& x, const CompLin<C>& y);
// Σ q^{ℓ(w)} over w ∈ S_n with c(w⁻¹) ⪯ α and c(w) ⪯ β.
template <class C>
C inner_form_descents(const Composition& a, const Composition& b);
// Σ q^{ℓ(w)} over c(w⁻¹) = α, c(w) = β.
template <class C>
C ribbon_form(const Composition& a, const Composition& b);

template <class C>
CompLin<C> psi1(const CompLin<C>& x);
template <class C>
CompLin<C> psi2(const CompLin<C>& x);
template <class C>
CompLin<C> psi3(const CompLin<C>& x);
template <class C>
CompLin<C> antipode(const CompLin<C>& x);

struct KernelGenerator {
  int n = 0, m = 0;
  CompLin<long long> h;  // H basis at q = -1
};
std::vector<KernelGenerator> odd_kernel_generators(int max_degree);
// Spanning set of the degree-n part of the ideal generated by the generators.
std::vector<CompLin<long long>> odd_kernel_span(int n);

}  // namespace qhopf
