#pragma once

#include "qhopf/mrpr.hpp"

#include <optional>

namespace qhopf {

// Everything here lives at q = -1 with plain integer coefficients.
using OddLin = CompLin<long long>;                 // M or F basis
using PartLin = ModuleElement<Partition, long long>;  // s or m basis

OddLin odd_schur_of_tableau(const Tableau& t);      // F basis, Knuth class sum
OddLin odd_schur_of_tableau_sil(const Tableau& t);  // F basis, via the sign formula
OddLin odd_schur_f(const Partition& la);            // s_λ in the F basis
OddLin odd_schur_m(const Partition& la);            // s_λ in the M basis, from SSYT contents
PartLin odd_schur_monomial_sym(const Partition& la);  // s_λ = (-1)^{C(λᵀ,2)} Σ OK_{λμ} m_μ

long long odd_kostka(const Partition& la, const Partition& mu);

// Expansion of an F-basis element of OSym in the s basis; nullopt if not in the span.
std::optional<PartLin> s_decompose(const OddLin& f_basis);

long long odd_lr(const Partition& la, const Partition& mu, const Partition& nu);
PartLin odd_lr_row(const Partition& la, const Partition& mu);    // Σ_ν oc^ν_{λμ} s_ν
PartLin odd_product_f_route(const Partition& la, const Partition& mu);
PartLin odd_product_pr_route(const Partition& la, const Partition& mu);

enum class Strip { horizontal, vertical };
// Horizontal strips labelled left to right, vertical strips top to bottom.
std::vector<Tableau> strip_fillings(const Partition& la, int n, Strip kind);
PartLin odd_pieri(const Partition& la, int n, Strip kind);
PartLin odd_pieri_closed(const Partition& la, int n, Strip kind);

PartLin h_expansion(const Partition& la);  // h_λ
PartLin e_expansion(const Partition& la);  // (-1)^{Σ C(λ_i,2)} e_λ

long long osym_inner(const Partition& la, const Partition& mu);  // (s_λ, s_μ)
// Preimage Y in span{H_ν} with φ(Y) = s_μ at q = -1.
CompLin<long long> schur_preimage(const Partition& mu);
long long psi3_scalar(const Partition& la);          // computed as φ(ψ₃ Y_λ)
long long psi3_scalar_formula(const Partition& la);  // sign(T_λ)(-1)^{C(λᵀ,2)}
PartLin left_pieri(const Partition& la, int n, Strip kind);          // s_(n) s_λ or s_(1ⁿ) s_λ
PartLin left_pieri_formula(const Partition& la, int n, Strip kind);

bool osym_membership(const OddLin& f_basis, int n);

std::string format_partlin(const PartLin& x, const std::string& basis);
std::string format_complin(const OddLin& x, const std::string& basis);

}  // namespace qhopf
