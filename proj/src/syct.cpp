#include "qhopf/syct.hpp"

#include "qhopf/linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qhopf {

void CompositionTableau::trim() {
  if (rows.size() < base.size()) rows.resize(base.size());
  while (rows.size() > base.size() && rows.back().empty()) rows.pop_back();
}

Composition CompositionTableau::shape() const {
  Composition s;
  for (std::size_t i = 0; i < rows.size(); ++i) s.push_back(base_at(i) + static_cast<int>(rows[i].size()));
  return s;
}

int CompositionTableau::size() const {
  int n = 0;
  for (const auto& r : rows) n += static_cast<int>(r.size());
  return n;
}

bool CompositionTableau::filled(std::size_t i, int j) const {
  return i < rows.size() && j >= base_at(i) && j < base_at(i) + static_cast<int>(rows[i].size());
}

namespace {

struct Box {
  std::size_t row;
  int col;
};

// Box added going from a to its cover b.
Box added_box(const Composition& a, const Composition& b) {
  if (b.size() == a.size() + 1) return {a.size(), 0};
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return {i, a[i]};
  throw std::invalid_argument("added_box: not a cover");
}

std::vector<Box> filled_boxes(const CompositionTableau& t) {
  std::vector<Box> out;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t k = 0; k < t.rows[i].size(); ++k) out.push_back({i, t.base_at(i) + static_cast<int>(k)});
  return out;
}

// Grid of full rows, 0 on base boxes.
std::vector<std::vector<int>> grid(const CompositionTableau& t) {
  std::vector<std::vector<int>> g(t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    g[i].assign(t.base_at(i), 0);
    g[i].insert(g[i].end(), t.rows[i].begin(), t.rows[i].end());
  }
  return g;
}

CompositionTableau from_grid(const Composition& base, const std::vector<std::vector<int>>& g) {
  std::vector<std::vector<int>> rows(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    int b = i < base.size() ? base[i] : 0;
    rows[i].assign(g[i].begin() + b, g[i].end());
  }
  return CompositionTableau(base, rows);
}

bool shape_ok(const CompositionTableau& t) {
  for (std::size_t i = 0; i < t.base.size(); ++i)
    if (t.base[i] < 1) return false;
  for (const auto& r : t.rows)
    if (r.empty() && &r - t.rows.data() >= static_cast<std::ptrdiff_t>(t.base.size())) return false;
  return true;
}

constexpr int kFilterBound = 8;

}  // namespace

std::vector<Composition> covers(const Composition& a) {
  std::vector<Composition> out;
  Composition b = a;
  b.push_back(1);
  out.push_back(b);
  for (std::size_t k = 0; k < a.size(); ++k) {
    bool rightmost = true;
    for (std::size_t i = k + 1; i < a.size(); ++i)
      if (a[i] == a[k]) rightmost = false;
    if (!rightmost) continue;
    Composition c = a;
    ++c[k];
    out.push_back(c);
  }
  return out;
}

bool is_cover(const Composition& a, const Composition& b) {
  auto cs = covers(a);
  return std::find(cs.begin(), cs.end(), b) != cs.end();
}

std::vector<Chain> saturated_chains(const Composition& a, int n) {
  std::vector<Chain> out;
  Chain cur{a};
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (const auto& b : covers(cur.back())) {
      cur.push_back(b);
      self(self, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

CompositionTableau syct_from_chain(const Chain& chain) {
  if (chain.empty()) throw std::invalid_argument("syct_from_chain: empty chain");
  std::vector<std::vector<int>> g;
  const Composition& base = chain.front();
  for (int b : base) g.emplace_back(b, 0);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!is_cover(chain[i - 1], chain[i])) throw std::invalid_argument("syct_from_chain: chain is not saturated");
    Box x = added_box(chain[i - 1], chain[i]);
    if (x.row == g.size()) g.emplace_back();
    g[x.row].push_back(static_cast<int>(i));
  }
  return from_grid(base, g);
}

Chain chain_from_syct(const CompositionTableau& t) {
  int n = t.size();
  Chain chain{t.base};
  Composition cur = t.base;
  std::vector<Box> where(n + 1, Box{0, -1});
  for (const auto& b : filled_boxes(t)) {
    int v = t.at(b.row, b.col);
    if (v < 1 || v > n || where[v].col >= 0) throw std::invalid_argument("chain_from_syct: not standard");
    where[v] = b;
  }
  for (int v = 1; v <= n; ++v) {
    Composition next = cur;
    if (where[v].row == next.size()) next.push_back(0);
    if (where[v].row > next.size() || next[where[v].row] != where[v].col)
      throw std::invalid_argument("chain_from_syct: not a chain");
    ++next[where[v].row];
    if (!is_cover(cur, next)) throw std::invalid_argument("chain_from_syct: not a chain");
    chain.push_back(next);
    cur = next;
  }
  return chain;
}

std::vector<int> column_sequence(const Chain& chain) {
  std::vector<int> out;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!is_cover(chain[i - 1], chain[i])) throw std::invalid_argument("column_sequence: chain is not saturated");
    out.push_back(added_box(chain[i - 1], chain[i]).col + 1);
  }
  return out;
}

bool is_ssyct(const CompositionTableau& t) {
  if (!shape_ok(t)) return false;
  auto g = grid(t);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 1; j < g[i].size(); ++j)
      if (g[i][j] && g[i][j - 1] > g[i][j]) return false;
  int last = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i][0]) {
      if (g[i][0] <= last) return false;
      last = g[i][0];
    }
  // triple rule, with 0 marking base boxes
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t k = 0; k + 1 < g[j].size(); ++k) {
      int top = g[j][k + 1];
      if (!top) continue;
      for (std::size_t i = j + 1; i < g.size(); ++i) {
        if (k >= g[i].size()) continue;
        if (g[i][k] && g[i][k] > top) continue;
        if (k + 1 < g[i].size() && g[i][k + 1] == 0) continue;
        if (k + 1 < g[i].size() && g[i][k + 1] < top) continue;
        return false;
      }
    }
  return true;
}

bool is_syct(const CompositionTableau& t) {
  if (!is_ssyct(t)) return false;
  auto c = content(t);
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 1; });
}

std::vector<CompositionTableau> enumerate_syct(const Composition& outer, const Composition& base) {
  int n = weight(outer) - weight(base);
  std::vector<CompositionTableau> out;
  if (n < 0) return out;
  for (const auto& ch : saturated_chains(base, n))
    if (ch.back() == outer) out.push_back(syct_from_chain(ch));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

CompositionTableau empty_filling(const Composition& outer, const Composition& base) {
  if (base.size() > outer.size()) throw std::invalid_argument("base longer than shape");
  std::vector<std::vector<int>> rows(outer.size());
  for (std::size_t i = 0; i < outer.size(); ++i) {
    int b = i < base.size() ? base[i] : 0;
    if (b > outer[i]) throw std::invalid_argument("base not contained in shape");
    rows[i].assign(outer[i] - b, 0);
  }
  return CompositionTableau(base, rows);
}

}  // namespace

std::vector<CompositionTableau> enumerate_syct_filter(const Composition& outer, const Composition& base) {
  auto t = empty_filling(outer, base);
  int n = t.size();
  if (n > kFilterBound) throw std::invalid_argument("enumerate_syct_filter: too many boxes");
  std::vector<CompositionTableau> out;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  do {
    int k = 0;
    for (auto& r : t.rows)
      for (int& v : r) v = perm[k++];
    if (is_ssyct(t)) out.push_back(t);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CompositionTableau> enumerate_ssyct(const Composition& outer, int max_entry, const Composition& base) {
  int n = weight(outer) - weight(base);
  std::vector<CompositionTableau> out;
  if (n < 0 || max_entry < 0) return out;
  auto standard = enumerate_syct(outer, base);
  auto contents = weak_compositions_of(n, max_entry);
  for (const auto& s : standard) {
    auto des = descent_set(s);
    for (const auto& g : contents) {
      // value of each standard label
      std::vector<int> val(n + 1, 0);
      std::set<int> cuts;
      int k = 0;
      for (std::size_t v = 0; v < g.size(); ++v) {
        for (int c = 0; c < g[v]; ++c) val[++k] = static_cast<int>(v) + 1;
        if (k > 0 && k < n) cuts.insert(k);
      }
      if (!std::includes(cuts.begin(), cuts.end(), des.begin(), des.end())) continue;
      CompositionTableau t = s;
      for (auto& r : t.rows)
        for (int& v : r) v = val[v];
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CompositionTableau> enumerate_ssyct_filter(const Composition& outer, int max_entry,
                                                       const Composition& base) {
  auto t = empty_filling(outer, base);
  int n = t.size();
  if (n > kFilterBound) throw std::invalid_argument("enumerate_ssyct_filter: too many boxes");
  std::vector<CompositionTableau> out;
  if (max_entry < 1) {
    if (n == 0) out.push_back(t);
    return out;
  }
  std::vector<int> vals(n, 1);
  while (true) {
    int k = 0;
    for (auto& r : t.rows)
      for (int& v : r) v = vals[k++];
    if (is_ssyct(t)) out.push_back(t);
    int i = n - 1;
    while (i >= 0 && vals[i] == max_entry) vals[i--] = 1;
    if (i < 0) break;
    ++vals[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

CompositionTableau u_alpha(const Composition& a) {
  std::vector<std::vector<int>> rows;
  int v = 0;
  for (int part : a) {
    std::vector<int> r;
    for (int k = 0; k < part; ++k) r.push_back(++v);
    rows.push_back(r);
  }
  return CompositionTableau(rows);
}

std::vector<int> content(const CompositionTableau& t) {
  std::vector<int> c;
  for (const auto& r : t.rows)
    for (int v : r) {
      if (static_cast<int>(c.size()) < v) c.resize(v, 0);
      ++c[v - 1];
    }
  return c;
}

CompositionTableau standardize_syct(const CompositionTableau& t) {
  auto bs = filled_boxes(t);
  std::vector<std::size_t> order(bs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const Box& a = bs[x];
    const Box& b = bs[y];
    return std::tuple(t.at(a.row, a.col), a.col, a.row) < std::tuple(t.at(b.row, b.col), b.col, b.row);
  });
  CompositionTableau r = t;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Box& b = bs[order[k]];
    r.rows[b.row][b.col - t.base_at(b.row)] = static_cast<int>(k) + 1;
  }
  return r;
}

long long inv_c(const CompositionTableau& t) {
  auto bs = filled_boxes(t);
  long long n = 0;
  for (const auto& a : bs)
    for (const auto& b : bs)
      if (a.col < b.col && t.at(a.row, a.col) > t.at(b.row, b.col)) ++n;
  return n;
}

long long inv_c_between(const CompositionTableau& a, const CompositionTableau& b) {
  long long n = 0;
  for (const auto& x : filled_boxes(a))
    for (const auto& y : filled_boxes(b))
      if (x.col > y.col) ++n;
  return n;
}

std::vector<int> descent_set(const CompositionTableau& t) {
  int n = t.size();
  std::vector<int> col(n + 2, -1);
  for (const auto& b : filled_boxes(t)) col[t.at(b.row, b.col)] = b.col;
  std::vector<int> d;
  for (int k = 1; k < n; ++k)
    if (col[k + 1] <= col[k]) d.push_back(k);
  return d;
}

Composition descent_composition(const CompositionTableau& t) { return composition_of_set(descent_set(t), t.size()); }

Tableau mason(const CompositionTableau& t) {
  Partition inner = to_partition(t.base);
  std::map<int, std::vector<int>> cols;
  for (const auto& b : filled_boxes(t)) cols[b.col].push_back(t.at(b.row, b.col));
  std::vector<std::vector<int>> g;
  for (auto& [c, vs] : cols) {
    std::sort(vs.begin(), vs.end());
    std::size_t h = 0;
    while (h < inner.size() && inner[h] > c) ++h;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      std::size_t r = h + k;
      if (g.size() <= r) g.resize(r + 1);
      int start = r < inner.size() ? inner[r] : 0;
      if (start + static_cast<int>(g[r].size()) != c) throw std::logic_error("mason: columns do not align");
      g[r].push_back(vs[k]);
    }
  }
  return Tableau(inner, g);
}

std::optional<CompositionTableau> try_mason_inverse(const Tableau& t, const Composition& base) {
  if (t.inner != to_partition(base)) throw std::invalid_argument("mason_inverse: inner shape must be the sorted base");
  std::map<int, std::vector<int>> cols;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t k = 0; k < t.rows[i].size(); ++k) cols[t.inner_at(i) + static_cast<int>(k)].push_back(t.rows[i][k]);
  std::vector<std::vector<int>> g;
  for (int b : base) g.emplace_back(b, 0);
  for (auto& [c, vs] : cols) {
    std::sort(vs.begin(), vs.end());
    if (c == 0) {
      for (int v : vs) g.push_back({v});
      continue;
    }
    for (int v : vs) {
      int pick = -1;
      for (int r = static_cast<int>(g.size()) - 1; r >= 0; --r)
        if (static_cast<int>(g[r].size()) == c && (g[r][c - 1] == 0 || g[r][c - 1] <= v)) {
          pick = r;
          break;
        }
      if (pick < 0) return std::nullopt;
      g[pick].push_back(v);
    }
  }
  return from_grid(base, g);
}

CompositionTableau mason_inverse(const Tableau& t, const Composition& base) {
  auto r = try_mason_inverse(t, base);
  if (!r) throw std::invalid_argument("mason_inverse: no valid placement for " + format_tableau(t));
  return *r;
}

Word column_word(const CompositionTableau& t) {
  std::map<int, std::vector<int>> cols;
  for (const auto& b : filled_boxes(t)) cols[b.col].push_back(t.at(b.row, b.col));
  Word w;
  for (auto& [c, vs] : cols) {
    std::sort(vs.rbegin(), vs.rend());
    w.insert(w.end(), vs.begin(), vs.end());
  }
  return w;
}

CompositionTableau rect_syct(const CompositionTableau& t) {
  return mason_inverse(insertion_tableau(column_word(t)));
}

bool c_equivalent_words(const Word& w, const Word& w2) {
  auto a = rsk(w), b = rsk(w2);
  return a.q == b.q && mason_inverse(a.p).shape() == mason_inverse(b.p).shape();
}

bool c_equivalent(const CompositionTableau& a, const CompositionTableau& b) {
  return a.base == b.base && a.shape() == b.shape() && c_equivalent_words(column_word(a), column_word(b));
}

CompositionTableau lower_part(const CompositionTableau& t, int k) {
  auto g = grid(t);
  for (auto& r : g) {
    std::size_t keep = 0;
    while (keep < r.size() && r[keep] <= k) ++keep;
    r.resize(keep);
  }
  return from_grid(t.base, g);
}

CompositionTableau upper_part(const CompositionTableau& t, int k) {
  auto low = lower_part(t, k);
  Composition base = low.shape();
  auto g = grid(t);
  std::vector<std::vector<int>> rows(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (int v : g[i])
      if (v > k) rows[i].push_back(v - k);
  return CompositionTableau(base, rows);
}

OddLin odd_qs_schur(const Composition& a) {
  static std::mutex mu;
  static std::map<Composition, OddLin> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
  }
  long long pre = sign_pow(ne_count(to_partition(a)));
  OddLin r;
  for (const auto& t : enumerate_syct(a)) r.add_term(descent_composition(t), pre * sign_pow(inv_c(t)));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(a, r);
  return r;
}

OddLin odd_qs_schur_m(const Composition& a) {
  long long pre = sign_pow(ne_count(to_partition(a)));
  OddLin r;
  for (const auto& t : enumerate_ssyct(a, weight(a))) {
    auto c = content(t);
    if (std::find(c.begin(), c.end(), 0) != c.end()) continue;
    r.add_term(c, pre * sign_pow(inv_c(t)));
  }
  return r;
}

OddLin oqs_to_f(const OqsLin& x) {
  OddLin r;
  for (const auto& [b, c] : x) r += odd_qs_schur(b) * c;
  return r;
}

std::optional<OqsLin> oqs_decompose(const OddLin& f_basis) {
  std::map<int, OddLin> by_degree;
  for (const auto& [a, c] : f_basis) by_degree[weight(a)].add_term(a, c);
  OqsLin r;
  for (const auto& [n, part] : by_degree) {
    auto basis = compositions_of(n);
    std::vector<std::map<Composition, long long>> cols;
    for (const auto& b : basis) {
      auto s = odd_qs_schur(b);
      cols.emplace_back(s.terms().begin(), s.terms().end());
    }
    std::map<Composition, long long> target(part.terms().begin(), part.terms().end());
    auto x = solve_in_span(cols, target);
    if (!x) return std::nullopt;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Rational& v = (*x)[j];
      if (denominator(v) != 1) return std::nullopt;
      r.add_term(basis[j], static_cast<long long>(numerator(v)));
    }
  }
  if (!(oqs_to_f(r) == f_basis)) return std::nullopt;
  return r;
}

bool refinement_check(const Partition& la) {
  OddLin rhs;
  for (const auto& a : compositions_of(weight(la)))
    if (to_partition(a) == la) rhs += odd_qs_schur(a);
  rhs = rhs * sign_pow(binom2_sum(transpose(la)));
  return rhs == odd_schur_f(la);
}

bool triangularity_check(int n) {
  auto basis = compositions_of(n);
  std::map<Composition, std::set<Composition>> out_edges;
  std::map<Composition, int> indeg;
  for (const auto& a : basis) indeg[a] = 0;
  for (const auto& a : basis) {
    auto s = odd_qs_schur(a);
    long long diag = sign_pow(inv(mason(u_alpha(a))));
    if (s.coefficient_of(a) != diag) return false;
    for (const auto& [b, c] : s)
      if (b != a && out_edges[a].insert(b).second) ++indeg[b];
  }
  // the off-diagonal support must be acyclic
  std::vector<Composition> ready;
  for (const auto& [a, d] : indeg)
    if (d == 0) ready.push_back(a);
  std::size_t seen = 0;
  while (!ready.empty()) {
    auto a = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& b : out_edges[a])
      if (--indeg[b] == 0) ready.push_back(b);
  }
  return seen == basis.size();
}

std::optional<Composition> rem_s(const Composition& a, int s) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == s) {
      Composition r = a;
      --r[i];
      return r;
    }
  return std::nullopt;
}

namespace {

std::optional<Composition> apply_rems(Composition a, const std::vector<int>& order) {
  for (int s : order) {
    auto r = rem_s(a, s);
    if (!r) return std::nullopt;
    a = *r;
  }
  a.erase(std::remove(a.begin(), a.end(), 0), a.end());
  return a;
}

}  // namespace

std::optional<Composition> row_s(const Composition& a, std::vector<int> s) {
  std::sort(s.rbegin(), s.rend());
  return apply_rems(a, s);
}

std::optional<Composition> col_m(const Composition& a, std::vector<int> m) {
  std::sort(m.begin(), m.end());
  return apply_rems(a, m);
}

std::vector<int> strip_columns(const Partition& nu, const Partition& la) {
  std::vector<int> cols;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    int from = i < la.size() ? la[i] : 0;
    for (int j = from; j < nu[i]; ++j) cols.push_back(j + 1);
  }
  std::sort(cols.begin(), cols.end());
  return cols;
}

namespace {

bool contains(const Partition& nu, const Partition& la) {
  if (la.size() > nu.size()) return false;
  for (std::size_t i = 0; i < la.size(); ++i)
    if (la[i] > nu[i]) return false;
  return true;
}

bool is_strip(const Partition& nu, const Partition& la, Strip kind) {
  if (!contains(nu, la)) return false;
  if (kind == Strip::horizontal) {
    for (std::size_t i = 1; i < nu.size(); ++i)
      if (nu[i] > (i - 1 < la.size() ? la[i - 1] : 0)) return false;
    return true;
  }
  return is_strip(transpose(nu), transpose(la), Strip::horizontal);
}

Partition strip_partition(int n, Strip kind) {
  return kind == Strip::horizontal ? Partition{n} : Partition(n, 1);
}

}  // namespace

OqsLin oqs_pieri(const Composition& a, int n, Strip kind) {
  Partition la = to_partition(a);
  Partition mu = strip_partition(n, kind);
  OqsLin r;
  if (n == 0) return OqsLin(a);
  long long pre = sign_pow(binom2_sum(transpose(la)));
  // 𝒮_(1ⁿ) = (-1)^{C(n,2)} s_(1ⁿ); the printed vertical rule drops this factor
  if (kind == Strip::vertical) pre *= sign_pow(binom2(n));
  for (const auto& b : compositions_of(weight(a) + n)) {
    Partition nu = to_partition(b);
    if (!is_strip(nu, la, kind)) continue;
    auto cols = strip_columns(nu, la);
    auto back = kind == Strip::horizontal ? row_s(b, cols) : col_m(b, cols);
    if (!back || *back != a) continue;
    long long oc = odd_lr(la, mu, nu);
    if (oc) r.add_term(b, pre * sign_pow(binom2_sum(transpose(nu))) * oc);
  }
  return r;
}

namespace {

// Σ over S ∈ SYT(ν/α̃) with rect S = ρ(U_β), keyed by sh(ρ⁻¹_α(S)).
void accumulate_oc(const Composition& a, const Tableau& ub, const Partition& nu, OqsLin& r,
                   const Composition* only) {
  Partition la = to_partition(a);
  if (!contains(nu, la)) return;
  Tableau tl = t_lambda(la);
  long long sb = inv(ub);
  for (const auto& s : syt(nu, la)) {
    if (!(rect(s) == ub)) continue;
    auto tau = try_mason_inverse(s, a);
    if (!tau) continue;
    Composition g = tau->shape();
    if (only && g != *only) continue;
    r.add_term(g, sign_pow(inv(concat_on_top(tl, s)) + sb));
  }
}

}  // namespace

long long oc_coefficient(const Composition& a, const Composition& b, const Composition& g) {
  if (weight(g) != weight(a) + weight(b)) return 0;
  OqsLin r;
  accumulate_oc(a, mason(u_alpha(b)), to_partition(g), r, &g);
  return r.coefficient_of(g);
}

OqsLin oc_row(const Composition& a, const Composition& b) {
  OqsLin r;
  Tableau ub = mason(u_alpha(b));
  for (const auto& nu : partitions_of(weight(a) + weight(b))) accumulate_oc(a, ub, nu, r, nullptr);
  return r;
}

std::map<Composition, YncTerm> ync_pieri(const Composition& a, int n, Strip kind) {
  std::map<Composition, YncTerm> out;
  Partition la = to_partition(a);
  Partition mu = strip_partition(n, kind);
  for (const auto& ch : saturated_chains(a, n)) {
    auto cs = column_sequence(ch);
    bool ok = true;
    for (std::size_t i = 1; i < cs.size(); ++i)
      if (kind == Strip::horizontal ? cs[i] <= cs[i - 1] : cs[i] > cs[i - 1]) ok = false;
    if (!ok) continue;
    auto& term = out[ch.back()];
    term.coeff = odd_lr(la, mu, to_partition(ch.back()));
    ++term.chains;
  }
  return out;
}

std::string format_syct(const CompositionTableau& t) {
  if (t.rows.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i) os << "/";
    bool first = true;
    for (int k = 0; k < t.base_at(i); ++k) {
      os << (first ? "" : ",") << ".";
      first = false;
    }
    for (int x : t.rows[i]) {
      os << (first ? "" : ",") << x;
      first = false;
    }
  }
  return os.str();
}

CompositionTableau parse_syct(const std::string& s) {
  Tableau t = parse_tableau(s);
  Composition base;
  for (std::size_t i = 0; i < t.rows.size(); ++i) base.push_back(t.inner_at(i));
  while (!base.empty() && base.back() == 0) base.pop_back();
  if (std::find(base.begin(), base.end(), 0) != base.end())
    throw std::invalid_argument("parse_syct: base rows must come first: " + s);
  return CompositionTableau(base, t.rows);
}

}  // namespace qhopf
