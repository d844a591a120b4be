#include "qhopf/graph.hpp"

#include "qhopf/syct.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace qhopf {

void GradedGraph::add_vertex(const Vertex& v, int rank) {
  if (rank_of.count(v)) return;
  if (static_cast<int>(ranks.size()) <= rank) ranks.resize(rank + 1);
  ranks[rank].push_back(v);
  rank_of[v] = rank;
}

void GradedGraph::add_weight(const Vertex& u, const Vertex& v, const LaurentPoly& w) {
  auto ru = rank_of.find(u), rv = rank_of.find(v);
  if (ru == rank_of.end() || rv == rank_of.end()) throw std::invalid_argument("add_weight: unknown vertex");
  if (rv->second != ru->second + 1) throw std::invalid_argument("add_weight: ranks must differ by one");
  LaurentPoly& a = out[u][v];
  a += w;
  in[v][u] = a;
  if (a.is_zero()) {
    out[u].erase(v);
    in[v].erase(u);
  }
}

LaurentPoly GradedGraph::weight(const Vertex& u, const Vertex& v) const {
  auto it = out.find(u);
  if (it == out.end()) return {};
  auto jt = it->second.find(v);
  return jt == it->second.end() ? LaurentPoly{} : jt->second;
}

VertexLin up(const GradedGraph& g, const VertexLin& x) {
  VertexLin r;
  for (const auto& [v, c] : x) {
    auto rk = g.rank_of.find(v);
    if (rk == g.rank_of.end()) throw std::invalid_argument("up: unknown vertex " + v);
    if (rk->second >= g.max_rank()) throw std::out_of_range("up: rank " + std::to_string(rk->second) + " is the last built rank");
    auto it = g.out.find(v);
    if (it == g.out.end()) continue;
    for (const auto& [u, w] : it->second) r.add_term(u, c * w);
  }
  return r;
}

VertexLin down(const GradedGraph& g, const VertexLin& x) {
  VertexLin r;
  for (const auto& [v, c] : x) {
    if (!g.rank_of.count(v)) throw std::invalid_argument("down: unknown vertex " + v);
    auto it = g.in.find(v);
    if (it == g.in.end()) continue;
    for (const auto& [u, w] : it->second) r.add_term(u, c * w);
  }
  return r;
}

namespace {

std::string render(const VertexLin& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : x) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")[" << v << "]";
    first = false;
  }
  return os.str();
}

}  // namespace

DualityReport check_duality(const GradedGraph& g, const GradedGraph& gp, const LaurentPoly& q, const LaurentPoly& r,
                            int max_rank) {
  if (max_rank > g.max_rank() || max_rank > gp.max_rank()) throw std::out_of_range("check_duality: rank not built");
  DualityReport rep;
  for (int k = 0; k < max_rank; ++k)
    for (const auto& v : g.ranks[k]) {
      VertexLin x(v);
      VertexLin lhs = down(gp, up(g, x)) - up(g, down(gp, x)) * q;
      VertexLin rhs = x * r;
      ++rep.checked;
      if (!(lhs == rhs)) {
        rep.ok = false;
        rep.vertex = v;
        rep.lhs = render(lhs);
        rep.rhs = render(rhs);
        return rep;
      }
    }
  return rep;
}

std::map<Vertex, LaurentPoly> path_weights(const GradedGraph& g) {
  std::map<Vertex, LaurentPoly> f;
  f[g.root()] = 1;
  for (std::size_t k = 1; k < g.ranks.size(); ++k)
    for (const auto& v : g.ranks[k]) {
      LaurentPoly s;
      auto it = g.in.find(v);
      if (it != g.in.end())
        for (const auto& [u, w] : it->second) s += f[u] * w;
      f[v] = s;
    }
  return f;
}

LaurentPoly path_weight_gf(const GradedGraph& g, const Vertex& v) {
  if (!g.rank_of.count(v)) throw std::out_of_range("path_weight_gf: vertex not built: " + v);
  return path_weights(g)[v];
}

LaurentPoly path_weight(const GradedGraph& g, const std::vector<Vertex>& path) {
  LaurentPoly w = 1;
  for (std::size_t i = 1; i < path.size(); ++i) w *= g.weight(path[i - 1], path[i]);
  return w;
}

namespace {

int below(const Partition& la, std::size_t i) {
  int s = 0;
  for (std::size_t k = i + 1; k < la.size(); ++k) s += la[k];
  return s;
}

// Row of the single box of nu / la.
std::size_t added_row(const Partition& la, const Partition& nu) {
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (i >= la.size() || la[i] != nu[i]) return i;
  throw std::invalid_argument("added_row: equal shapes");
}

LaurentPoly pm(long long e) { return LaurentPoly(sign_pow(e)); }

}  // namespace

GraphPair build_signed_young(int max_rank) {
  GradedGraph g, gp;
  g.name = "young";
  gp.name = "young'";
  for (int n = 0; n <= max_rank; ++n)
    for (const auto& la : partitions_of(n)) {
      g.add_vertex(format_composition(la), n);
      gp.add_vertex(format_composition(la), n);
    }
  for (int n = 0; n < max_rank; ++n)
    for (const auto& la : partitions_of(n))
      for (std::size_t i = 0; i <= la.size(); ++i) {
        int li = i < la.size() ? la[i] : 0;
        if (i > 0 && la[i - 1] == li) continue;
        Partition mu = la;
        if (i == la.size()) mu.push_back(1);
        else ++mu[i];
        long long e = below(la, i) + n + li;
        g.add_weight(format_composition(la), format_composition(mu), pm(e + static_cast<long long>(i)));
        gp.add_weight(format_composition(la), format_composition(mu), pm(e));
      }
  return {g, gp};
}

GraphPair build_composition_poset_pair(int max_rank) {
  GradedGraph l, p;
  l.name = "comp-L";
  p.name = "comp-P";
  for (int n = 0; n <= max_rank; ++n)
    for (const auto& a : compositions_of(n)) {
      l.add_vertex(format_composition(a), n);
      p.add_vertex(format_composition(a), n);
    }
  for (int n = 0; n < max_rank; ++n)
    for (const auto& g : compositions_of(n))
      for (const auto& e : covers(g)) {
        Partition gt = to_partition(g), et = to_partition(e);
        l.add_weight(format_composition(g), format_composition(e), pm(below(gt, added_row(gt, et))));
      }
  for (int n = 1; n <= max_rank; ++n)
    for (const auto& e : compositions_of(n)) {
      std::vector<int> parts(e.begin(), e.end());
      std::sort(parts.begin(), parts.end());
      parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
      for (int s : parts) {
        Composition g = *rem_s(e, s);
        g.erase(std::remove(g.begin(), g.end(), 0), g.end());
        Partition gt = to_partition(g), et = to_partition(e);
        std::size_t i = added_row(gt, et);
        p.add_weight(format_composition(g), format_composition(e), pm(below(et, i) + static_cast<long long>(i)));
      }
    }
  return {l, p};
}

GraphPair build_perm_pair(int max_rank) {
  GradedGraph g, gp;
  g.name = "perm";
  gp.name = "perm'";
  for (int n = 0; n <= max_rank; ++n)
    for (const auto& w : permutations_of(n)) {
      g.add_vertex(format_word(w), n);
      gp.add_vertex(format_word(w), n);
    }
  for (int n = 1; n <= max_rank; ++n)
    for (const auto& w : permutations_of(n)) {
      Word head(w.begin(), w.end() - 1);
      g.add_weight(format_word(standardize(head)), format_word(w), 1);
      Word rest;
      int pos = 0;
      for (int k = 0; k < n; ++k) {
        if (w[k] == n) pos = k + 1;
        else rest.push_back(w[k]);
      }
      gp.add_weight(format_word(rest), format_word(w), LaurentPoly::monomial(n - pos));
    }
  return {g, gp};
}

GraphPair build_tab_pair(int max_rank) {
  GradedGraph g, gp;
  g.name = "tab";
  gp.name = "tab'";
  g.add_vertex(format_tableau(Tableau{}), 0);
  gp.add_vertex(format_tableau(Tableau{}), 0);
  for (int n = 1; n <= max_rank; ++n)
    for (const auto& t : all_syt(n)) {
      g.add_vertex(format_tableau(t), n);
      gp.add_vertex(format_tableau(t), n);
    }
  for (int n = 1; n <= max_rank; ++n) {
    for (const auto& s : all_syt(n - 1))
      for (int k = 1; k <= n; ++k) {
        Tableau sk = s;
        for (auto& row : sk.rows)
          for (int& v : row)
            if (v >= k) ++v;
        g.add_weight(format_tableau(s), format_tableau(row_insert(sk, k)), LaurentPoly::monomial(n - k));
      }
    for (const auto& t : all_syt(n)) {
      auto rows = t.rows;
      for (auto& row : rows) row.erase(std::remove(row.begin(), row.end(), n), row.end());
      gp.add_weight(format_tableau(Tableau(rows)), format_tableau(t), 1);
    }
  }
  return {g, gp};
}

GraphPair build_named_pair(const std::string& name, int max_rank) {
  if (name == "young") return build_signed_young(max_rank);
  if (name == "comp") return build_composition_poset_pair(max_rank);
  if (name == "perm") return build_perm_pair(max_rank);
  if (name == "tab") return build_tab_pair(max_rank);
  throw std::invalid_argument("unknown graph: " + name);
}

GraphPair from_dual_hopf(const DualHopfData& data, int max_rank) {
  GradedGraph g, gp;
  g.name = data.name;
  gp.name = data.name + "'";
  for (int n = 0; n <= max_rank; ++n)
    for (const auto& v : data.basis(n)) {
      g.add_vertex(v, n);
      gp.add_vertex(v, n);
    }
  for (int n = 0; n < max_rank; ++n)
    for (const auto& la : data.basis(n))
      for (const auto& [mu, w] : data.right_mul_beta(la)) g.add_weight(la, mu, w);
  for (int n = 1; n <= max_rank; ++n)
    for (const auto& mu : data.basis(n))
      for (const auto& [la, w] : data.alpha_pairing(mu)) gp.add_weight(la, mu, w);
  return {g, gp};
}

namespace {

std::vector<Vertex> labels(const std::vector<Composition>& xs) {
  std::vector<Vertex> out;
  for (const auto& x : xs) out.push_back(format_composition(x));
  return out;
}

}  // namespace

DualHopfData osym_dual_data() {
  DualHopfData d;
  d.name = "osym";
  d.basis = [](int n) { return labels(partitions_of(n)); };
  d.right_mul_beta = [](const Vertex& v) {
    std::map<Vertex, LaurentPoly> r;
    for (const auto& [mu, c] : odd_lr_row(parse_composition(v), {1})) r[format_composition(mu)] = c;
    return r;
  };
  // p_λ = (-1)^{C(λᵀ,2)} s_λ is the dual basis under (s_λ, s_μ) = (-1)^{C(λᵀ,2)} δ
  d.alpha_pairing = [](const Vertex& v) {
    Partition mu = parse_composition(v);
    std::map<Vertex, LaurentPoly> r;
    if (mu.empty()) return r;
    for (const auto& la : partitions_of(weight(mu) - 1)) {
      long long oc = odd_lr(la, {1}, mu);
      if (oc) r[format_composition(la)] = oc * sign_pow(binom2_sum(transpose(la)) + binom2_sum(transpose(mu)));
    }
    return r;
  };
  return d;
}

DualHopfData young_noncommutative_data() {
  DualHopfData d;
  d.name = "ync";
  d.basis = [](int n) { return labels(compositions_of(n)); };
  d.right_mul_beta = [](const Vertex& v) {
    std::map<Vertex, LaurentPoly> r;
    for (const auto& [g, c] : oc_row(parse_composition(v), {1})) r[format_composition(g)] = c;
    return r;
  };
  d.alpha_pairing = [](const Vertex& v) {
    Composition eta = parse_composition(v);
    std::map<Vertex, LaurentPoly> r;
    if (eta.empty()) return r;
    for (const auto& g : compositions_of(weight(eta) - 1)) {
      long long c = oqs_pieri(g, 1, Strip::horizontal).coefficient_of(eta);
      if (c) r[format_composition(g)] = c;
    }
    return r;
  };
  return d;
}

bool gauge_equivalent(const GraphPair& a, const GraphPair& b, int max_rank) {
  std::map<Vertex, long long> eps;
  for (int k = 0; k <= max_rank; ++k) {
    if (k > a.first.max_rank() || k > b.first.max_rank()) return false;
    auto x = a.first.ranks[k], y = b.first.ranks[k];
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  eps[a.first.root()] = 1;
  const GradedGraph* graphs[2][2] = {{&a.first, &b.first}, {&a.second, &b.second}};
  for (int k = 0; k < max_rank; ++k)
    for (const auto& u : a.first.ranks[k])
      for (auto& pair : graphs) {
        const GradedGraph& ga = *pair[0];
        const GradedGraph& gb = *pair[1];
        std::map<Vertex, bool> targets;
        if (ga.out.count(u))
          for (const auto& kv : ga.out.at(u)) targets[kv.first] = true;
        if (gb.out.count(u))
          for (const auto& kv : gb.out.at(u)) targets[kv.first] = true;
        for (const auto& [v, unused] : targets) {
          LaurentPoly wa = ga.weight(u, v), wb = gb.weight(u, v);
          long long s;
          if (wa == wb) s = 1;
          else if (wa == -wb) s = -1;
          else return false;
          if (wa.is_zero()) return false;
          auto it = eps.find(v);
          if (it == eps.end()) eps[v] = s * eps.at(u);
          else if (it->second != s * eps.at(u)) return false;
        }
      }
  return true;
}

std::vector<std::string> edge_lines(const GradedGraph& g, int max_rank) {
  std::vector<std::string> lines;
  for (const auto& [u, outs] : g.out)
    for (const auto& [v, w] : outs)
      if (g.rank_of.at(v) <= max_rank) lines.push_back(u + " -> " + v + " : " + w.to_string());
  std::sort(lines.begin(), lines.end());
  return lines;
}

std::string to_dot(const GradedGraph& g) {
  std::ostringstream os;
  os << "digraph \"" << g.name << "\" {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < g.ranks.size(); ++k) {
    os << "  { rank=same;";
    for (const auto& v : g.ranks[k]) os << " \"" << v << "\";";
    os << " }\n";
  }
  for (const auto& rank : g.ranks)
    for (const auto& u : rank) {
      auto it = g.out.find(u);
      if (it == g.out.end()) continue;
      for (const auto& [v, w] : it->second) os << "  \"" << u << "\" -> \"" << v << "\" [label=\"" << w.to_string() << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const GradedGraph& g) {
  nlohmann::json j;
  j["name"] = g.name;
  j["ranks"] = g.ranks;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& rank : g.ranks)
    for (const auto& u : rank) {
      auto it = g.out.find(u);
      if (it == g.out.end()) continue;
      for (const auto& [v, w] : it->second)
        edges.push_back({{"from", u}, {"to", v}, {"weight", w.to_json()}, {"label", w.to_string()}});
    }
  j["edges"] = edges;
  return j;
}

}  // namespace qhopf
