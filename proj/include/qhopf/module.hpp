#pragma once

#include "qhopf/laurent.hpp"

#include <functional>
#include <map>
#include <utility>

namespace qhopf {

// Finitely supported linear combination of basis keys K with coefficients in C.
// Keys are kept sorted; zero coefficients are dropped on insertion.
template <class K, class C = LaurentPoly>
class ModuleElement {
 public:
  using key_type = K;
  using coeff_type = C;
  using map_type = std::map<K, C>;

  ModuleElement() = default;
  explicit ModuleElement(const K& k, C c = C(1)) { add_term(k, c); }

  void add_term(const K& k, const C& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  C coefficient_of(const K& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? C() : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  ModuleElement& operator+=(const ModuleElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  ModuleElement& operator-=(const ModuleElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  ModuleElement& operator*=(const C& s) {
    if (is_zero(s)) {
      terms_.clear();
      return *this;
    }
    map_type next;
    for (auto& [k, c] : terms_) {
      C v = c * s;
      if (!is_zero(v)) next.emplace(k, std::move(v));
    }
    terms_ = std::move(next);
    return *this;
  }
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend ModuleElement operator*(ModuleElement a, const C& s) { return a *= s; }
  friend ModuleElement operator*(const C& s, ModuleElement a) { return a *= s; }
  ModuleElement operator-() const { return *this * C(-1); }
  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

  template <class Deg>
  ModuleElement degree_component(int d, Deg deg) const {
    ModuleElement r;
    for (const auto& [k, c] : terms_)
      if (deg(k) == d) r.terms_.emplace(k, c);
    return r;
  }

  // Linear extension of f: K -> ModuleElement<K2, C>.
  template <class F>
  auto apply(F f) const {
    using R = decltype(f(std::declval<const K&>()));
    R r;
    for (const auto& [k, c] : terms_) r += f(k) * c;
    return r;
  }

  // Coefficientwise ring change, e.g. evaluation at q = -1.
  template <class C2, class F>
  ModuleElement<K, C2> map_coeffs(F f) const {
    ModuleElement<K, C2> r;
    for (const auto& [k, c] : terms_) r.add_term(k, f(c));
    return r;
  }

 private:
  map_type terms_;
};

template <class K, class L, class C = LaurentPoly>
using Tensor = ModuleElement<std::pair<K, L>, C>;

template <class K, class L, class C>
Tensor<K, L, C> tensor(const ModuleElement<K, C>& x, const ModuleElement<L, C>& y) {
  Tensor<K, L, C> r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) r.add_term({a, b}, ca * cb);
  return r;
}

// Bilinear extension of a key pairing B(K, L) -> C.
template <class K, class L, class C, class B>
C pair(B b, const ModuleElement<K, C>& x, const ModuleElement<L, C>& y) {
  C s{};
  for (const auto& [k, ck] : x)
    for (const auto& [l, cl] : y) {
      C v = b(k, l);
      if (!is_zero(v)) s += ck * cl * v;
    }
  return s;
}

// <x1 ⊗ x2, y1 ⊗ y2> = B1(x1, y1) B2(x2, y2).
template <class K1, class K2, class L1, class L2, class C, class B1, class B2>
C tensor_pair(B1 b1, B2 b2, const Tensor<K1, K2, C>& x, const Tensor<L1, L2, C>& y) {
  C s{};
  for (const auto& [k, ck] : x)
    for (const auto& [l, cl] : y) {
      C v1 = b1(k.first, l.first);
      if (is_zero(v1)) continue;
      C v2 = b2(k.second, l.second);
      if (!is_zero(v2)) s += ck * cl * v1 * v2;
    }
  return s;
}

template <class K, class L, class C, class DegK, class DegL>
Tensor<L, K, C> q_flip(const Tensor<K, L, C>& x, DegK dk, DegL dl) {
  Tensor<L, K, C> r;
  for (const auto& [kl, c] : x) r.add_term({kl.second, kl.first}, c * qpow<C>(dk(kl.first) * dl(kl.second)));
  return r;
}

// (a ⊗ b)(a' ⊗ b') = q^{|b||a'|} aa' ⊗ bb'. mul_a / mul_b return ModuleElements.
template <class K, class L, class C, class MulA, class MulB, class DegK, class DegL>
Tensor<K, L, C> braided_tensor_product(MulA mul_a, MulB mul_b, const Tensor<K, L, C>& x, const Tensor<K, L, C>& y,
                                       DegK dk, DegL dl) {
  Tensor<K, L, C> r;
  for (const auto& [ab, c1] : x)
    for (const auto& [ab2, c2] : y) {
      C s = c1 * c2 * qpow<C>(dl(ab.second) * dk(ab2.first));
      r += tensor(mul_a(ab.first, ab2.first), mul_b(ab.second, ab2.second)) * s;
    }
  return r;
}

}  // namespace qhopf
