#include "qhopf/tableau.hpp"

#include "qhopf/word.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qhopf {

void Tableau::trim() {
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  if (rows.size() < inner.size()) rows.resize(inner.size());
  while (!rows.empty() && rows.back().empty() && inner_at(rows.size() - 1) == 0) rows.pop_back();
}

Partition Tableau::shape() const {
  Partition p;
  for (std::size_t i = 0; i < rows.size(); ++i) p.push_back(inner_at(i) + static_cast<int>(rows[i].size()));
  return p;
}

int Tableau::size() const {
  int s = 0;
  for (const auto& r : rows) s += static_cast<int>(r.size());
  return s;
}

namespace {

struct Cell {
  int row, col, val;
};

std::vector<Cell> cells(const Tableau& t) {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t k = 0; k < t.rows[i].size(); ++k)
      out.push_back({static_cast<int>(i), t.inner_at(i) + static_cast<int>(k), t.rows[i][k]});
  return out;
}

}  // namespace

bool is_semistandard(const Tableau& t) {
  Partition sh = t.shape();
  if (!is_partition(sh) && !sh.empty()) return false;
  if (!t.inner.empty() && !is_partition(t.inner)) return false;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k] < 1) return false;
      if (k > 0 && r[k - 1] > r[k]) return false;
      int col = t.inner_at(i) + static_cast<int>(k);
      if (i > 0 && col >= t.inner_at(i - 1) && t.at(i - 1, col) >= r[k]) return false;
    }
  }
  return true;
}

bool is_standard(const Tableau& t) {
  if (!is_semistandard(t)) return false;
  std::vector<int> vals;
  for (const auto& r : t.rows) vals.insert(vals.end(), r.begin(), r.end());
  std::sort(vals.begin(), vals.end());
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (vals[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Word row_word(const Tableau& t) {
  Word w;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

std::vector<int> content(const Tableau& t) {
  std::vector<int> c;
  for (const auto& r : t.rows)
    for (int x : r) {
      if (static_cast<int>(c.size()) < x) c.resize(x, 0);
      ++c[x - 1];
    }
  return c;
}

Tableau standardize_tableau(const Tableau& t) {
  auto cs = cells(t);
  std::vector<std::size_t> order(cs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (cs[a].val != cs[b].val) return cs[a].val < cs[b].val;
    return cs[a].col < cs[b].col;
  });
  Tableau r = t;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Cell& c = cs[order[k]];
    r.rows[c.row][c.col - t.inner_at(c.row)] = static_cast<int>(k) + 1;
  }
  return r;
}

long long inv(const Tableau& t) {
  if (!t.is_straight()) throw std::invalid_argument("inv: skew shape");
  auto cs = cells(t);
  long long n = 0;
  for (const auto& a : cs)
    for (const auto& b : cs)
      if (a.row < b.row && a.val >= b.val) ++n;
  return n;
}

long long inv_c(const Tableau& t) {
  auto cs = cells(t);
  long long n = 0;
  for (const auto& a : cs)
    for (const auto& b : cs)
      if (a.col < b.col && a.val > b.val) ++n;
  return n;
}

int sign(const Tableau& t) { return static_cast<int>(sign_pow(inversions(row_word(standardize_tableau(t))))); }

long long inv_between(const Tableau& a, const Tableau& b) {
  long long n = 0;
  for (const auto& ra : a.rows)
    for (int x : ra)
      for (const auto& rb : b.rows)
        for (int y : rb)
          if (x > y) ++n;
  return n;
}

Tableau t_lambda(const Partition& la) {
  std::vector<std::vector<int>> rows;
  int k = 1;
  for (int len : la) {
    std::vector<int> r;
    for (int j = 0; j < len; ++j) r.push_back(k++);
    rows.push_back(r);
  }
  return Tableau(rows);
}

std::vector<int> descent_set(const Tableau& t) {
  int n = t.size();
  std::vector<int> row_of(n + 2, -1);
  for (const auto& c : cells(t)) row_of[c.val] = c.row;
  std::vector<int> d;
  for (int k = 1; k < n; ++k)
    if (row_of[k + 1] > row_of[k]) d.push_back(k);
  return d;
}

Composition descent_composition(const Tableau& t) { return composition_of_set(descent_set(t), t.size()); }

Tableau row_insert(const Tableau& t, int x) {
  if (!t.is_straight()) throw std::invalid_argument("row_insert: skew shape");
  Tableau r = t;
  for (auto& row : r.rows) {
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return r;
    }
    std::swap(*it, x);
  }
  r.rows.push_back({x});
  return r;
}

Tableau insertion_tableau(const Word& w) {
  Tableau t;
  for (int x : w) t = row_insert(t, x);
  return t;
}

Tableau dot_product(const Tableau& a, const Tableau& b) {
  Word w = row_word(a);
  Word wb = row_word(b);
  w.insert(w.end(), wb.begin(), wb.end());
  return insertion_tableau(w);
}

Tableau rect(const Tableau& s) {
  // g[i] is the full row i; 0 marks inner cells.
  std::vector<std::vector<int>> g;
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    std::vector<int> row(s.inner_at(i), 0);
    row.insert(row.end(), s.rows[i].begin(), s.rows[i].end());
    g.push_back(row);
  }
  Partition inner = s.inner;
  while (!inner.empty()) {
    std::size_t r = 0;
    while (r + 1 < inner.size() && inner[r + 1] == inner[r]) ++r;
    std::size_t c = inner[r] - 1;
    --inner[r];
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    for (;;) {
      bool has_right = c + 1 < g[r].size();
      bool has_below = r + 1 < g.size() && c < g[r + 1].size();
      if (!has_right && !has_below) break;
      if (has_below && (!has_right || g[r + 1][c] <= g[r][c + 1])) {
        g[r][c] = g[r + 1][c];
        ++r;
      } else {
        g[r][c] = g[r][c + 1];
        ++c;
      }
    }
    g[r].pop_back();
    while (!g.empty() && g.back().empty()) g.pop_back();
  }
  return Tableau(g);
}

Tableau concat_on_top(const Tableau& t, const Tableau& s) {
  if (!t.is_straight() || s.inner != t.shape()) throw std::invalid_argument("concat_on_top: shape incompatibility");
  int n = t.size();
  Tableau r = t;
  if (r.rows.size() < s.rows.size()) r.rows.resize(s.rows.size());
  for (std::size_t i = 0; i < s.rows.size(); ++i)
    for (int x : s.rows[i]) r.rows[i].push_back(x + n);
  r.trim();
  return r;
}

Tableau relabel(const Tableau& t, const std::vector<int>& values) {
  Tableau r = t;
  for (auto& row : r.rows)
    for (int& x : row) x = values.at(x - 1);
  return r;
}

namespace {

// Adds boxes 1..k one at a time to mu, never leaving `outer` (if given).
void grow(const Partition& mu, int k, const Partition* outer, std::vector<Tableau>& out) {
  std::vector<std::vector<int>> rows(mu.size());
  Partition cur = mu;
  std::function<void(int)> rec = [&](int next) {
    if (next > k) {
      Tableau t(mu, rows);
      if (outer == nullptr || t.shape() == *outer) out.push_back(t);
      return;
    }
    for (std::size_t i = 0; i <= cur.size(); ++i) {
      int len = i < cur.size() ? cur[i] : 0;
      if (i > 0 && cur[i - 1] <= len) continue;
      if (outer != nullptr && (i >= outer->size() || (*outer)[i] <= len)) continue;
      if (i == cur.size()) {
        cur.push_back(0);
        rows.emplace_back();
      }
      ++cur[i];
      rows[i].push_back(next);
      rec(next + 1);
      rows[i].pop_back();
      --cur[i];
      if (cur[i] == 0) {
        cur.pop_back();
        rows.pop_back();
      }
    }
  };
  rec(1);
}

}  // namespace

std::vector<Tableau> syt(const Partition& outer, const Partition& inner) {
  std::vector<Tableau> out;
  int k = weight(outer) - weight(inner);
  if (k < 0) return out;
  grow(inner, k, &outer, out);
  return out;
}

std::vector<Tableau> standard_extensions(const Partition& mu, int k) {
  std::vector<Tableau> out;
  grow(mu, k, nullptr, out);
  return out;
}

std::vector<Tableau> ssyt(const Partition& outer, int max_entry, const Partition& inner) {
  std::vector<Tableau> out;
  std::vector<std::vector<int>> g;
  for (std::size_t i = 0; i < outer.size(); ++i) g.emplace_back(outer[i], 0);
  auto inner_at = [&](std::size_t i) { return i < inner.size() ? inner[i] : 0; };
  for (std::size_t i = 0; i < outer.size(); ++i)
    if (inner_at(i) > outer[i]) return out;
  std::vector<std::pair<int, int>> order;
  for (std::size_t i = 0; i < outer.size(); ++i)
    for (int j = inner_at(i); j < outer[i]; ++j) order.push_back({static_cast<int>(i), j});
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == order.size()) {
      std::vector<std::vector<int>> rows;
      for (std::size_t i = 0; i < outer.size(); ++i) rows.emplace_back(g[i].begin() + inner_at(i), g[i].end());
      out.emplace_back(inner, rows);
      return;
    }
    auto [i, j] = order[idx];
    int lo = 1;
    if (j > inner_at(i)) lo = std::max(lo, g[i][j - 1]);
    if (i > 0 && j >= inner_at(i - 1)) lo = std::max(lo, g[i - 1][j] + 1);
    for (int v = lo; v <= max_entry; ++v) {
      g[i][j] = v;
      rec(idx + 1);
    }
    g[i][j] = 0;
  };
  rec(0);
  return out;
}

std::vector<Split> reverse_slide_expansion(const Tableau& t) {
  Partition sh = t.shape();
  if (!t.is_straight() || sh.empty() || sh.size() > 2 || !is_standard(t))
    throw std::invalid_argument("reverse_slide_expansion: expected a standard tableau of two-row shape");
  const int m = sh[0];
  const int n = t.size();
  // Full rows with 0 marking inner cells.
  std::vector<std::vector<int>> g = {t.rows[0], sh.size() > 1 ? t.rows[1] : std::vector<int>{}};
  auto snapshot = [&]() {
    Split s;
    Partition in;
    std::vector<std::vector<int>> rows(2);
    for (int i = 0; i < 2; ++i) {
      int k = 0;
      while (k < static_cast<int>(g[i].size()) && g[i][k] == 0) ++k;
      in.push_back(k);
      rows[i].assign(g[i].begin() + k, g[i].end());
    }
    s.upper = rows[0];
    s.lower = rows[1];
    s.p = static_cast<int>(rows[1].size());
    s.u = Tableau(in, rows);
    return s;
  };
  std::vector<Split> out;
  out.push_back(snapshot());
  for (int p = n - m; p < m; ++p) {
    int r = 1, c = static_cast<int>(g[1].size());
    g[1].push_back(0);
    for (;;) {
      int above = (r == 1 && c < static_cast<int>(g[0].size())) ? g[0][c] : 0;
      int left = c > 0 ? g[r][c - 1] : 0;
      if (above == 0 && left == 0) break;
      if (above > left) {
        g[1][c] = above;
        g[0][c] = 0;
        r = 0;
      } else {
        g[r][c] = left;
        g[r][c - 1] = 0;
        --c;
      }
    }
    out.push_back(snapshot());
  }
  return out;
}

std::string format_tableau(const Tableau& t) {
  if (t.rows.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i) os << "/";
    bool first = true;
    for (int k = 0; k < t.inner_at(i); ++k) {
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

Tableau parse_tableau(const std::string& s) {
  if (s == "-" || s.empty()) return {};
  Partition inner;
  std::vector<std::vector<int>> rows;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, '/')) {
    std::stringstream rs(row);
    std::string tok;
    int dots = 0;
    std::vector<int> r;
    while (std::getline(rs, tok, ',')) {
      if (tok == "." || tok == "*") {
        if (!r.empty()) throw std::invalid_argument("inner cell after entry: " + s);
        ++dots;
      } else {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 1) throw std::invalid_argument("bad tableau entry: " + s);
        r.push_back(v);
      }
    }
    inner.push_back(dots);
    rows.push_back(r);
  }
  return Tableau(inner, rows);
}

}  // namespace qhopf
