#pragma once

#include "qhopf/nsym.hpp"

#include <optional>

namespace qhopf {

template <class C = LaurentPoly>
using PermLin = ModuleElement<Permutation, C>;
template <class C = LaurentPoly>
using PermTensor = Tensor<Permutation, Permutation, C>;
template <class C = LaurentPoly>
using TabLin = ModuleElement<Tableau, C>;
template <class C = LaurentPoly>
using TabTensor = Tensor<Tableau, Tableau, C>;

inline int perm_degree(const Permutation& w) { return static_cast<int>(w.size()); }
inline int tab_degree(const Tableau& t) { return t.size(); }

// #{(k, l): k > l, w_k <= i < w_l}
int inv_split(int i, const Permutation& w);

template <class C>
PermLin<C> mr_mul(const PermLin<C>& x, const PermLin<C>& y);        // *
template <class C>
PermLin<C> mr_prime_mul(const PermLin<C>& x, const PermLin<C>& y);  // *'_q
template <class C>
PermTensor<C> mr_coproduct_q(const PermLin<C>& x);
template <class C>
PermTensor<C> mr_prime_coproduct(const PermLin<C>& x);

template <class C>
PermLin<C> theta_q(const PermLin<C>& x);
template <class C>
PermLin<C> iota_q(const CompLin<C>& h_basis);
template <class C>
PermLin<C> iota_q_ribbon(const CompLin<C>& r_basis);
template <class C>
CompLin<C> pi_prime_q(const PermLin<C>& x);  // F basis

// Class of x in MR_q / J_q, written in the c*_q basis.
template <class C>
TabLin<C> jq_normal_form(const PermLin<C>& x);

template <class C>
PermLin<C> cq(const Tableau& t);
// Regroups an element of MR'_q into c_q(T) keys; nullopt if it is not in their span.
template <class C>
std::optional<TabLin<C>> regroup_cq(const PermLin<C>& x);

// PR'_q side, keys mean c_q(T).
template <class C>
TabLin<C> pr_prime_product(const TabLin<C>& x, const TabLin<C>& y);
template <class C>
TabTensor<C> pr_prime_coproduct(const TabLin<C>& x);
// PR_q side, keys mean c*_q(T).
template <class C>
TabLin<C> pr_product(const TabLin<C>& x, const TabLin<C>& y);
template <class C>
TabTensor<C> pr_coproduct_q(const TabLin<C>& x);

inline LaurentPoly tab_delta(const Tableau& a, const Tableau& b) { return a == b ? 1 : 0; }
inline LaurentPoly perm_delta(const Permutation& a, const Permutation& b) { return a == b ? 1 : 0; }

// Standard tableaux of size n, grouped by shape in partitions_of order.
std::vector<Tableau> all_syt(int n);

struct DiagramReport {
  bool ok = true;
  std::string failure;
};
// θ_q ι_q(R_α) = Σ_{c(T)=α} c_q(T) and π'_q θ_q ι_q = φ on R_α, α ⊨ n ≤ max_n.
DiagramReport diagram_check(int max_n);

}  // namespace qhopf
