#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <vector>

namespace qhopf {

using Rational = boost::multiprecision::cpp_rational;

// One solution of A x = b over Q (free variables set to 0), or nullopt.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);
int rank_exact(std::vector<std::vector<Rational>> a);

// Express target as Σ x_j cols[j] where vectors are sparse maps over keys K.
template <class K, class C>
std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::map<K, C>>& cols, const std::map<K, C>& target) {
  std::map<K, std::size_t> row;
  for (const auto& c : cols)
    for (const auto& kv : c) row.try_emplace(kv.first, 0);
  for (const auto& kv : target) row.try_emplace(kv.first, 0);
  std::size_t i = 0;
  for (auto& kv : row) kv.second = i++;
  std::vector<std::vector<Rational>> a(row.size(), std::vector<Rational>(cols.size()));
  std::vector<Rational> b(row.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [k, v] : cols[j]) a[row[k]][j] = Rational(v);
  for (const auto& [k, v] : target) b[row[k]] = Rational(v);
  return solve_exact(std::move(a), std::move(b));
}

}  // namespace qhopf
