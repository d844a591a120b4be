#include "qhopf/mrpr.hpp"

#include <map>
#include <sstream>

namespace qhopf {

int inv_split(int i, const Permutation& w) {
  int n = 0;
  for (std::size_t l = 0; l < w.size(); ++l)
    for (std::size_t k = l + 1; k < w.size(); ++k)
      if (w[k] <= i && i < w[l]) ++n;
  return n;
}

template <class C>
PermLin<C> mr_mul(const PermLin<C>& x, const PermLin<C>& y) {
  PermLin<C> r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) r += mr_product<C>(a, b) * (ca * cb);
  return r;
}

template <class C>
PermLin<C> mr_prime_mul(const PermLin<C>& x, const PermLin<C>& y) {
  PermLin<C> r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) r += shifted_q_concat_product<C>(a, b) * (ca * cb);
  return r;
}

template <class C>
PermTensor<C> mr_coproduct_q(const PermLin<C>& x) {
  PermTensor<C> r;
  for (const auto& [w, c] : x) {
    int n = static_cast<int>(w.size());
    for (int i = 0; i <= n; ++i) {
      Word lo, hi;
      for (int v : w) (v <= i ? lo : hi).push_back(v);
      r.add_term({lo, standardize(hi)}, c * qpow<C>(inv_split(i, w)));
    }
  }
  return r;
}

template <class C>
PermTensor<C> mr_prime_coproduct(const PermLin<C>& x) {
  PermTensor<C> r;
  for (const auto& [w, c] : x)
    for (std::size_t i = 0; i <= w.size(); ++i)
      r.add_term({standardize(Word(w.begin(), w.begin() + i)), standardize(Word(w.begin() + i, w.end()))}, c);
  return r;
}

template <class C>
PermLin<C> theta_q(const PermLin<C>& x) {
  PermLin<C> r;
  for (const auto& [w, c] : x) r.add_term(inverse(w), c * qpow<C>(static_cast<int>(inversions(w))));
  return r;
}

template <class C>
PermLin<C> iota_q(const CompLin<C>& h) {
  PermLin<C> r;
  for (const auto& [a, c] : h)
    for (const auto& w : permutations_of(weight(a)))
      if (refines(descent_composition(w), a)) r.add_term(w, c);
  return r;
}

template <class C>
PermLin<C> iota_q_ribbon(const CompLin<C>& rb) {
  PermLin<C> r;
  for (const auto& [a, c] : rb)
    for (const auto& w : permutations_of(weight(a)))
      if (descent_composition(w) == a) r.add_term(w, c);
  return r;
}

template <class C>
CompLin<C> pi_prime_q(const PermLin<C>& x) {
  CompLin<C> r;
  for (const auto& [w, c] : x) r.add_term(descent_composition(w), c);
  return r;
}

template <class C>
TabLin<C> jq_normal_form(const PermLin<C>& x) {
  TabLin<C> r;
  for (const auto& [w, c] : x) r.add_term(rsk(w).p, c * qpow<C>(static_cast<int>(inversions(w))));
  return r;
}

template <class C>
PermLin<C> cq(const Tableau& t) {
  PermLin<C> r;
  for (const auto& q : syt(t.shape())) {
    Word w = rsk_inverse(t, q);
    r.add_term(w, qpow<C>(static_cast<int>(inversions(w))));
  }
  return r;
}

template <class C>
std::optional<TabLin<C>> regroup_cq(const PermLin<C>& x) {
  TabLin<C> r;
  std::map<Tableau, bool> seen;
  for (const auto& [w, c] : x) {
    Tableau p = rsk(w).p;
    if (seen.emplace(p, true).second) r.add_term(p, c * qpow<C>(-static_cast<int>(inversions(w))));
  }
  PermLin<C> back;
  for (const auto& [t, c] : r) back += cq<C>(t) * c;
  if (!(back == x)) return std::nullopt;
  return r;
}

std::vector<Tableau> all_syt(int n) {
  std::vector<Tableau> out;
  for (const auto& la : partitions_of(n))
    for (auto& t : syt(la)) out.push_back(std::move(t));
  return out;
}

namespace {

// Entries sets A ⊂ [n] of size k, as sorted vectors.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<int> a;
    for (int i = 0; i < n; ++i)
      if (pick[i]) a.push_back(i + 1);
    out.push_back(a);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<int> complement_set(const std::vector<int>& a, int n) {
  std::vector<int> b;
  for (int v = 1; v <= n; ++v)
    if (!std::binary_search(a.begin(), a.end(), v)) b.push_back(v);
  return b;
}

// Entries of t above k, shifted down by k, as a skew tableau over t|≤k.
std::pair<Tableau, Tableau> cut(const Tableau& t, int k) {
  std::vector<std::vector<int>> lo, hi;
  Partition inner;
  for (const auto& row : t.rows) {
    std::vector<int> a, b;
    for (int v : row) (v <= k ? a : b).push_back(v);
    inner.push_back(static_cast<int>(a.size()));
    lo.push_back(a);
    for (int& v : b) v -= k;
    hi.push_back(b);
  }
  return {Tableau(lo), Tableau(inner, hi)};
}

}  // namespace

template <class C>
TabLin<C> pr_prime_product(const TabLin<C>& x, const TabLin<C>& y) {
  TabLin<C> r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& s : standard_extensions(a.shape(), b.size()))
        if (rect(s) == b) r.add_term(concat_on_top(a, s), ca * cb);
  return r;
}

template <class C>
TabTensor<C> pr_prime_coproduct(const TabLin<C>& x) {
  TabTensor<C> r;
  for (const auto& [t, c] : x) {
    int n = t.size();
    for (int k = 0; k <= n; ++k) {
      auto left = all_syt(k), right = all_syt(n - k);
      for (const auto& a : subsets(n, k)) {
        auto b = complement_set(a, n);
        for (const auto& t1 : left) {
          Tableau r1 = relabel(t1, a);
          for (const auto& t2 : right) {
            Tableau r2 = relabel(t2, b);
            if (dot_product(r1, r2) == t) r.add_term({t1, t2}, c * qpow<C>(static_cast<int>(inv_between(r1, r2))));
          }
        }
      }
    }
  }
  return r;
}

template <class C>
TabLin<C> pr_product(const TabLin<C>& x, const TabLin<C>& y) {
  TabLin<C> r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      int n = a.size() + b.size();
      for (const auto& s : subsets(n, a.size())) {
        Tableau r1 = relabel(a, s), r2 = relabel(b, complement_set(s, n));
        r.add_term(dot_product(r1, r2), ca * cb * qpow<C>(static_cast<int>(inv_between(r1, r2))));
      }
    }
  return r;
}

template <class C>
TabTensor<C> pr_coproduct_q(const TabLin<C>& x) {
  TabTensor<C> r;
  for (const auto& [t, c] : x)
    for (int k = 0; k <= t.size(); ++k) {
      auto [lo, hi] = cut(t, k);
      r.add_term({lo, rect(hi)}, c);
    }
  return r;
}

DiagramReport diagram_check(int max_n) {
  using C = LaurentPoly;
  DiagramReport rep;
  for (int n = 0; n <= max_n && rep.ok; ++n)
    for (const auto& a : compositions_of(n)) {
      CompLin<C> ra(a);
      auto lhs = theta_q<C>(iota_q_ribbon<C>(ra));
      PermLin<C> rhs;
      for (const auto& t : all_syt(n))
        if (descent_composition(t) == a) rhs += cq<C>(t);
      auto f1 = pi_prime_q<C>(lhs);
      auto f2 = m_to_f<C>(phi<C>(r_to_h<C>(ra)));
      if (!(lhs == rhs) || !(f1 == f2)) {
        rep.ok = false;
        rep.failure = format_composition(a);
        break;
      }
    }
  return rep;
}

#define QHOPF_INSTANTIATE(C)                                                  \
  template PermLin<C> mr_mul<C>(const PermLin<C>&, const PermLin<C>&);        \
  template PermLin<C> mr_prime_mul<C>(const PermLin<C>&, const PermLin<C>&);  \
  template PermTensor<C> mr_coproduct_q<C>(const PermLin<C>&);                \
  template PermTensor<C> mr_prime_coproduct<C>(const PermLin<C>&);            \
  template PermLin<C> theta_q<C>(const PermLin<C>&);                          \
  template PermLin<C> iota_q<C>(const CompLin<C>&);                           \
  template PermLin<C> iota_q_ribbon<C>(const CompLin<C>&);                    \
  template CompLin<C> pi_prime_q<C>(const PermLin<C>&);                       \
  template TabLin<C> jq_normal_form<C>(const PermLin<C>&);                    \
  template PermLin<C> cq<C>(const Tableau&);                                  \
  template std::optional<TabLin<C>> regroup_cq<C>(const PermLin<C>&);         \
  template TabLin<C> pr_prime_product<C>(const TabLin<C>&, const TabLin<C>&); \
  template TabTensor<C> pr_prime_coproduct<C>(const TabLin<C>&);              \
  template TabLin<C> pr_product<C>(const TabLin<C>&, const TabLin<C>&);       \
  template TabTensor<C> pr_coproduct_q<C>(const TabLin<C>&);

QHOPF_INSTANTIATE(LaurentPoly)
QHOPF_INSTANTIATE(long long)

}  // namespace qhopf
