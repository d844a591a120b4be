#include "qhopf/composition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qhopf {

int weight(const Composition& a) { return std::accumulate(a.begin(), a.end(), 0); }
int length(const Composition& a) { return static_cast<int>(a.size()); }

std::vector<int> descent_set(const Composition& a) {
  std::vector<int> s;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    acc += a[i];
    s.push_back(acc);
  }
  return s;
}

Composition composition_of_set(const std::vector<int>& s, int n) {
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Composition c;
  int prev = 0;
  for (int d : sorted) {
    if (d < 1 || d > n - 1) throw std::invalid_argument("composition_of_set: element outside [n-1]");
    c.push_back(d - prev);
    prev = d;
  }
  if (n > 0) c.push_back(n - prev);
  return c;
}

bool refines(const Composition& alpha, const Composition& beta) {
  if (weight(alpha) != weight(beta)) throw std::invalid_argument("refines: weight mismatch");
  auto da = descent_set(alpha);
  auto db = descent_set(beta);
  return std::includes(db.begin(), db.end(), da.begin(), da.end());
}

Composition concat(const Composition& a, const Composition& b) {
  Composition r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Composition near_concat(const Composition& a, const Composition& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("near_concat: empty operand");
  Composition r = a;
  r.back() += b.front();
  r.insert(r.end(), b.begin() + 1, b.end());
  return r;
}

Composition complement(const Composition& a) {
  int n = weight(a);
  if (n == 0) return {};
  auto d = descent_set(a);
  std::vector<int> c;
  for (int i = 1; i < n; ++i)
    if (!std::binary_search(d.begin(), d.end(), i)) c.push_back(i);
  return composition_of_set(c, n);
}

Composition reverse(const Composition& a) { return Composition(a.rbegin(), a.rend()); }

Partition to_partition(const Composition& a) {
  Partition p = collapse(a);
  std::sort(p.begin(), p.end(), std::greater<int>());
  return p;
}

Composition collapse(const WeakComposition& a) {
  Composition r;
  for (int x : a)
    if (x != 0) r.push_back(x);
  return r;
}

bool is_partition(const std::vector<int>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1) return false;
    if (i > 0 && a[i] > a[i - 1]) return false;
  }
  return true;
}

Partition transpose(const Partition& la) {
  Partition t;
  if (la.empty()) return t;
  for (int j = 0; j < la[0]; ++j) {
    int c = 0;
    for (int x : la)
      if (x > j) ++c;
    t.push_back(c);
  }
  return t;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("compositions_of: negative n");
  std::vector<Composition> out;
  Composition cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = rest; k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxp); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<WeakComposition> weak_compositions_of(int n, int len) {
  std::vector<WeakComposition> out;
  WeakComposition cur(len, 0);
  std::function<void(int, int)> rec = [&](int i, int rest) {
    if (i == len - 1) {
      cur[i] = rest;
      out.push_back(cur);
      return;
    }
    for (int k = rest; k >= 0; --k) {
      cur[i] = k;
      rec(i + 1, rest - k);
    }
  };
  if (len == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  rec(0, n);
  return out;
}

std::vector<Composition> coarsenings(const Composition& a) {
  std::vector<Composition> out;
  for (const auto& b : compositions_of(weight(a)))
    if (refines(b, a)) out.push_back(b);
  return out;
}

std::vector<Composition> refinements(const Composition& a) {
  std::vector<Composition> out;
  for (const auto& b : compositions_of(weight(a)))
    if (refines(a, b)) out.push_back(b);
  return out;
}

long long binom2(long long n) { return n * (n - 1) / 2; }

long long binom2_sum(const std::vector<int>& a) {
  long long s = 0;
  for (int x : a) s += binom2(x);
  return s;
}

long long ne_count(const Partition& la) {
  Partition t = transpose(la);
  long long s = 0;
  for (std::size_t i = 0; i < la.size(); ++i)
    for (int j = 0; j < la[i]; ++j)
      s += static_cast<long long>(la[i] - j - 1) * (t[j] - static_cast<int>(i) - 1);
  return s;
}

std::string format_composition(const Composition& a) {
  if (a.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i];
  }
  return os.str();
}

Composition parse_composition(const std::string& s) {
  if (s == "-" || s.empty()) return {};
  Composition a;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v < 0) throw std::invalid_argument("bad composition: " + s);
    a.push_back(v);
  }
  return a;
}

}  // namespace qhopf
