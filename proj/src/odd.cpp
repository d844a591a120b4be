#include "qhopf/odd.hpp"

#include "qhopf/linalg.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qhopf {

OddLin odd_schur_of_tableau(const Tableau& t) {
  OddLin r;
  for (const auto& q : syt(t.shape())) {
    Word w = rsk_inverse(t, q);
    r.add_term(descent_composition(w), sign_pow(inversions(w)));
  }
  return r;
}

OddLin odd_schur_of_tableau_sil(const Tableau& t) {
  Partition la = t.shape();
  long long pre = sign_pow(binom2_sum(transpose(la)) + inv(t));
  OddLin r;
  for (const auto& q : syt(la)) r.add_term(descent_composition(q), pre * sign_pow(inv(q)));
  return r;
}

OddLin odd_schur_f(const Partition& la) { return odd_schur_of_tableau(t_lambda(la)); }

OddLin odd_schur_m(const Partition& la) {
  int n = weight(la);
  long long pre = sign_pow(binom2_sum(transpose(la)));
  OddLin r;
  for (const auto& u : ssyt(la, n)) {
    auto c = content(u);
    if (std::find(c.begin(), c.end(), 0) != c.end()) continue;
    r.add_term(c, pre * sign_pow(inv(u)));
  }
  return r;
}

PartLin odd_schur_monomial_sym(const Partition& la) {
  auto m = f_to_m<long long>(odd_schur_f(la));
  PartLin r;
  for (const auto& mu : partitions_of(weight(la))) r.add_term(mu, m.coefficient_of(mu));
  return r;
}

long long odd_kostka(const Partition& la, const Partition& mu) {
  if (weight(la) != weight(mu)) throw std::invalid_argument("odd_kostka: weight mismatch");
  long long s = 0;
  for (const auto& u : ssyt(la, length(mu)))
    if (content(u) == mu) s += sign_pow(inv(u));
  return s;
}

namespace {

struct SchurTable {
  std::vector<Partition> parts;
  std::vector<std::map<Composition, long long>> cols;
};

const SchurTable& schur_table(int n) {
  static std::mutex mu;
  static std::map<int, SchurTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  SchurTable t;
  for (const auto& la : partitions_of(n)) {
    t.parts.push_back(la);
    auto f = odd_schur_f(la);
    t.cols.emplace_back(f.terms().begin(), f.terms().end());
  }
  return cache.emplace(n, std::move(t)).first->second;
}

std::optional<PartLin> decompose_homogeneous(const OddLin& x, int n) {
  const SchurTable& t = schur_table(n);
  std::map<Composition, long long> target(x.terms().begin(), x.terms().end());
  auto sol = solve_in_span(t.cols, target);
  if (!sol) return std::nullopt;
  PartLin r;
  for (std::size_t j = 0; j < sol->size(); ++j) {
    const Rational& v = (*sol)[j];
    if (denominator(v) != 1) return std::nullopt;
    r.add_term(t.parts[j], static_cast<long long>(numerator(v)));
  }
  return r;
}

}  // namespace

std::optional<PartLin> s_decompose(const OddLin& f) {
  std::map<int, OddLin> by_degree;
  for (const auto& [a, c] : f) by_degree[weight(a)].add_term(a, c);
  PartLin r;
  for (const auto& [n, x] : by_degree) {
    auto d = decompose_homogeneous(x, n);
    if (!d) return std::nullopt;
    r += *d;
  }
  return r;
}

long long odd_lr(const Partition& la, const Partition& mu, const Partition& nu) {
  if (weight(la) + weight(mu) != weight(nu)) return 0;
  for (std::size_t i = 0; i < la.size(); ++i)
    if (i >= nu.size() || la[i] > nu[i]) return 0;
  Tableau tl = t_lambda(la), tm = t_lambda(mu);
  long long s = 0;
  for (const auto& st : syt(nu, la))
    if (rect(st) == tm) s += sign_pow(inv(concat_on_top(tl, st)));
  return s;
}

PartLin odd_lr_row(const Partition& la, const Partition& mu) {
  PartLin r;
  Tableau tl = t_lambda(la), tm = t_lambda(mu);
  for (const auto& st : standard_extensions(la, weight(mu)))
    if (rect(st) == tm) {
      Tableau full = concat_on_top(tl, st);
      r.add_term(full.shape(), sign_pow(inv(full)));
    }
  return r;
}

PartLin odd_product_f_route(const Partition& la, const Partition& mu) {
  auto d = s_decompose(f_product<long long>(odd_schur_f(la), odd_schur_f(mu)));
  if (!d) throw std::logic_error("odd_product_f_route: product left the s span");
  return *d;
}

PartLin odd_product_pr_route(const Partition& la, const Partition& mu) {
  // c(T_λ) *' c(T_μ) in MR'_q at q = -1, regrouped into c(T) and sent to 𝔰_T = (-1)^{inv T} s_{sh T}.
  auto prod = mr_prime_mul<long long>(cq<long long>(t_lambda(la)), cq<long long>(t_lambda(mu)));
  auto grouped = regroup_cq<long long>(prod);
  if (!grouped) throw std::logic_error("odd_product_pr_route: product not closed in PR'");
  PartLin r;
  for (const auto& [t, c] : *grouped) r.add_term(t.shape(), c * sign_pow(inv(t)));
  return r;
}

std::vector<Tableau> strip_fillings(const Partition& la, int n, Strip kind) {
  std::vector<Tableau> out;
  auto la_at = [&](std::size_t i) { return i < la.size() ? la[i] : 0; };
  std::vector<Partition> shapes;
  for (const auto& mu : partitions_of(weight(la) + n)) {
    bool contains = mu.size() >= la.size();
    for (std::size_t i = 0; contains && i < la.size(); ++i) contains = mu[i] >= la[i];
    if (contains) shapes.push_back(mu);
  }
  for (const auto& mu : shapes) {
    Partition mt = transpose(mu), lt = transpose(la);
    bool ok = true;
    if (kind == Strip::horizontal) {
      for (std::size_t j = 0; j < mt.size(); ++j)
        if (mt[j] - (j < lt.size() ? lt[j] : 0) > 1) ok = false;
    } else {
      for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] - la_at(i) > 1) ok = false;
    }
    if (!ok) continue;
    // Cells of mu/la in labelling order.
    std::vector<std::pair<int, int>> cells;
    for (std::size_t i = 0; i < mu.size(); ++i)
      for (int j = la_at(i); j < mu[i]; ++j) cells.push_back({static_cast<int>(i), j});
    if (kind == Strip::horizontal)
      std::sort(cells.begin(), cells.end(), [](auto a, auto b) { return a.second < b.second; });
    std::vector<std::vector<int>> rows(mu.size());
    std::map<std::pair<int, int>, int> label;
    for (std::size_t k = 0; k < cells.size(); ++k) label[cells[k]] = static_cast<int>(k) + 1;
    for (std::size_t i = 0; i < mu.size(); ++i)
      for (int j = la_at(i); j < mu[i]; ++j) rows[i].push_back(label[{static_cast<int>(i), j}]);
    out.emplace_back(la, rows);
  }
  return out;
}

PartLin odd_pieri(const Partition& la, int n, Strip kind) {
  PartLin r;
  Tableau tl = t_lambda(la);
  for (const auto& s : strip_fillings(la, n, kind)) r.add_term(s.shape(), sign_pow(inv(concat_on_top(tl, s))));
  return r;
}

PartLin odd_pieri_closed(const Partition& la, int n, Strip kind) {
  PartLin r;
  Partition lt = transpose(la);
  for (const auto& s : strip_fillings(la, n, kind)) {
    Partition mu = s.shape();
    long long e = 0;
    for (std::size_t i = 0; i < s.rows.size(); ++i)
      for (std::size_t k = 0; k < s.rows[i].size(); ++k) {
        int col = s.inner_at(i) + static_cast<int>(k);
        if (kind == Strip::vertical) {
          for (std::size_t r2 = i + 1; r2 < la.size(); ++r2) e += la[r2];
        } else {
          for (std::size_t c2 = col + 1; c2 < lt.size(); ++c2) e += lt[c2];
        }
      }
    if (kind == Strip::horizontal) e = ne_count(mu) - ne_count(la) - e;
    r.add_term(mu, sign_pow(e));
  }
  return r;
}

namespace {

PartLin times(const PartLin& x, const Partition& block, Strip kind) {
  PartLin r;
  int n = weight(block);
  for (const auto& [la, c] : x) r += odd_pieri(la, n, kind) * c;
  return r;
}

}  // namespace

PartLin h_expansion(const Partition& la) {
  PartLin x(Partition{});
  for (int part : la) x = times(x, Partition{part}, Strip::horizontal);
  return x;
}

PartLin e_expansion(const Partition& la) {
  PartLin x(Partition{});
  for (int part : la) x = times(x, Partition(part, 1), Strip::vertical);
  return x;
}

CompLin<long long> schur_preimage(const Partition& mu) {
  int n = weight(mu);
  auto parts = partitions_of(n);
  std::vector<std::map<Composition, long long>> cols;
  for (const auto& nu : parts) {
    auto h = phi<long long>(CompLin<long long>(nu));
    cols.emplace_back(h.terms().begin(), h.terms().end());
  }
  auto s = odd_schur_m(mu);
  auto sol = solve_in_span(cols, std::map<Composition, long long>(s.terms().begin(), s.terms().end()));
  if (!sol) throw std::logic_error("schur_preimage: s_mu not in the span of h_nu");
  CompLin<long long> y;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (denominator((*sol)[j]) != 1) throw std::logic_error("schur_preimage: non-integral preimage");
    y.add_term(parts[j], static_cast<long long>(numerator((*sol)[j])));
  }
  return y;
}

long long osym_inner(const Partition& la, const Partition& mu) {
  if (weight(la) != weight(mu)) return 0;
  return canonical_pair<long long>(odd_schur_m(la), schur_preimage(mu));
}

long long psi3_scalar(const Partition& la) {
  auto img = phi<long long>(psi3<long long>(schur_preimage(la)));
  auto s = odd_schur_m(la);
  // img must be a multiple of s.
  for (long long c : {1LL, -1LL})
    if (img == s * c) return c;
  return 0;
}

long long psi3_scalar_formula(const Partition& la) {
  return sign(t_lambda(la)) * sign_pow(binom2_sum(transpose(la)));
}

PartLin left_pieri(const Partition& la, int n, Strip kind) {
  Partition block = kind == Strip::horizontal ? Partition{n} : Partition(n, 1);
  auto d = s_decompose(f_product<long long>(odd_schur_f(block), odd_schur_f(la)));
  if (!d) throw std::logic_error("left_pieri: product left the s span");
  return *d;
}

PartLin left_pieri_formula(const Partition& la, int n, Strip kind) {
  PartLin r;
  Partition block = kind == Strip::horizontal ? Partition{n} : Partition(n, 1);
  long long base = sign_pow(binom2_sum(transpose(la))) * sign(t_lambda(la));
  for (const auto& [mu, c] : odd_lr_row(la, block))
    r.add_term(mu, c * base * sign_pow(binom2_sum(transpose(mu))) * sign(t_lambda(mu)));
  return r;
}

bool osym_membership(const OddLin& f, int n) {
  auto m = f_to_m<long long>(f);
  for (const auto& g : odd_kernel_span(n))
    if (canonical_pair<long long>(m, g) != 0) return false;
  return true;
}

std::string format_partlin(const PartLin& x, const std::string& basis) {
  OddLin y;
  for (const auto& [k, c] : x) y.add_term(k, c);
  return format_complin(y, basis);
}

std::string format_complin(const OddLin& x, const std::string& basis) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest keys first reads like the usual dominance-ordered display.
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    long long c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    long long mag = c < 0 ? -c : c;
    if (mag != 1) os << mag << "*";
    os << basis << "[" << format_composition(it->first) << "]";
  }
  return os.str();
}

}  // namespace qhopf
