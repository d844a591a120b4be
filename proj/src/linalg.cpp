#include "qhopf/linalg.hpp"

#include <utility>

namespace qhopf {

namespace {

// Row-reduces [a | b] in place; returns pivot column per pivot row.
std::vector<std::size_t> reduce(std::vector<std::vector<Rational>>& a, std::vector<Rational>* b) {
  std::vector<std::size_t> piv;
  const std::size_t m = a.size(), n = m ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    if (b) std::swap((*b)[p], (*b)[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    if (b) (*b)[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
      if (b) (*b)[i] -= f * (*b)[r];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  auto piv = reduce(a, &b);
  for (std::size_t i = piv.size(); i < a.size(); ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = b[r];
  return x;
}

int rank_exact(std::vector<std::vector<Rational>> a) { return static_cast<int>(reduce(a, nullptr).size()); }

}  // namespace qhopf
