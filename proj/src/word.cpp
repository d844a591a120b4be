#include "qhopf/word.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qhopf {

Permutation standardize(const Word& w) {
  std::vector<std::size_t> idx(w.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
  Permutation p(w.size());
  for (std::size_t k = 0; k < idx.size(); ++k) p[idx[k]] = static_cast<int>(k) + 1;
  return p;
}

long long inversions(const Word& w) {
  long long n = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++n;
  return n;
}

std::vector<int> word_descents(const Word& w) {
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i) + 1);
  return d;
}

Composition descent_composition(const Word& w) {
  return composition_of_set(word_descents(w), static_cast<int>(w.size()));
}

bool is_permutation(const Word& w) {
  std::vector<int> s = w;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation inverse(const Permutation& w) {
  Permutation r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[w[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

Word shift(const Word& w, int by) {
  Word r = w;
  for (int& x : r) x += by;
  return r;
}

std::vector<Permutation> permutations_of(int n) {
  std::vector<Permutation> out;
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

RskPair rsk(const Word& w) {
  RskPair r;
  for (std::size_t k = 0; k < w.size(); ++k) {
    int x = w[k];
    std::size_t row = 0;
    for (;; ++row) {
      if (row == r.p.rows.size()) {
        r.p.rows.push_back({x});
        r.q.rows.push_back({static_cast<int>(k) + 1});
        break;
      }
      auto& pr = r.p.rows[row];
      auto it = std::upper_bound(pr.begin(), pr.end(), x);
      if (it == pr.end()) {
        pr.push_back(x);
        r.q.rows[row].push_back(static_cast<int>(k) + 1);
        break;
      }
      std::swap(*it, x);
    }
  }
  return r;
}

Word rsk_inverse(const Tableau& p, const Tableau& q) {
  if (p.shape() != q.shape()) throw std::invalid_argument("rsk_inverse: shape mismatch");
  Tableau pp = p, qq = q;
  int n = q.size();
  Word w(n);
  for (int k = n; k >= 1; --k) {
    std::size_t row = 0;
    while (qq.rows[row].empty() || qq.rows[row].back() != k) ++row;
    qq.rows[row].pop_back();
    int x = pp.rows[row].back();
    pp.rows[row].pop_back();
    for (std::size_t r = row; r-- > 0;) {
      auto& pr = pp.rows[r];
      auto it = std::lower_bound(pr.begin(), pr.end(), x);
      --it;
      std::swap(*it, x);
    }
    w[k - 1] = x;
    pp.trim();
    qq.trim();
  }
  return w;
}

std::vector<Word> knuth_moves(const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    int a = w[i], b = w[i + 1], c = w[i + 2];
    auto swap_at = [&](std::size_t k) {
      Word v = w;
      std::swap(v[k], v[k + 1]);
      out.push_back(v);
    };
    // yxz ~ yzx for x < y <= z
    if (b < a && a <= c) swap_at(i + 1);
    if (c < a && a <= b) swap_at(i + 1);
    // xzy ~ zxy for x <= y < z
    if (a <= c && c < b) swap_at(i);
    if (b <= c && c < a) swap_at(i);
  }
  return out;
}

std::vector<std::vector<Permutation>> knuth_classes(int n, int bound) {
  if (n > bound) throw std::invalid_argument("knuth_classes: n exceeds bound");
  std::set<Permutation> seen;
  std::vector<std::vector<Permutation>> out;
  for (const auto& start : permutations_of(n)) {
    if (seen.count(start)) continue;
    std::vector<Permutation> cls;
    std::deque<Permutation> todo{start};
    seen.insert(start);
    while (!todo.empty()) {
      Permutation w = todo.front();
      todo.pop_front();
      cls.push_back(w);
      for (auto& v : knuth_moves(w))
        if (seen.insert(v).second) todo.push_back(v);
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(cls);
  }
  return out;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "-";
  bool small = std::all_of(w.begin(), w.end(), [](int x) { return x >= 1 && x <= 9; });
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!small && i) os << ",";
    os << w[i];
  }
  return os.str();
}

Word parse_word(const std::string& s) {
  if (s == "-" || s.empty()) return {};
  Word w;
  if (s.find(',') == std::string::npos) {
    for (char ch : s) {
      if (ch < '1' || ch > '9') throw std::invalid_argument("bad word: " + s);
      w.push_back(ch - '0');
    }
    return w;
  }
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v < 1) throw std::invalid_argument("bad word: " + s);
    w.push_back(v);
  }
  return w;
}

}  // namespace qhopf
