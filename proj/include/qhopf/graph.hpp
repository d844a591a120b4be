#pragma once

#include "qhopf/laurent.hpp"
#include "qhopf/module.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qhopf {

// Vertices are identified by their canonical text encodings.
using Vertex = std::string;
using VertexLin = ModuleElement<Vertex, LaurentPoly>;

struct GradedGraph {
  std::string name;
  std::vector<std::vector<Vertex>> ranks;  // ranks[0] = {root}
  std::map<Vertex, int> rank_of;
  std::map<Vertex, std::map<Vertex, LaurentPoly>> out;  // out[u][v] = m(u, v)
  std::map<Vertex, std::map<Vertex, LaurentPoly>> in;   // in[v][u] = m(u, v)

  void add_vertex(const Vertex& v, int rank);
  void add_weight(const Vertex& u, const Vertex& v, const LaurentPoly& w);
  LaurentPoly weight(const Vertex& u, const Vertex& v) const;
  const Vertex& root() const { return ranks.at(0).at(0); }
  int max_rank() const { return static_cast<int>(ranks.size()) - 1; }
};

using GraphPair = std::pair<GradedGraph, GradedGraph>;

VertexLin up(const GradedGraph& g, const VertexLin& x);
VertexLin down(const GradedGraph& g, const VertexLin& x);

struct DualityReport {
  bool ok = true;
  int checked = 0;
  Vertex vertex;
  std::string lhs, rhs;
};
// D_{g'} U_g - q U_g D_{g'} = r·id on every vertex of rank < max_rank.
DualityReport check_duality(const GradedGraph& g, const GradedGraph& gp, const LaurentPoly& q, const LaurentPoly& r,
                            int max_rank);

// f^v = <U^n root, v> for every vertex.
std::map<Vertex, LaurentPoly> path_weights(const GradedGraph& g);
LaurentPoly path_weight_gf(const GradedGraph& g, const Vertex& v);
// Product of edge weights along a chain of vertices.
LaurentPoly path_weight(const GradedGraph& g, const std::vector<Vertex>& path);

// Signed Young pair (Γ, Γ'), the composition pair (𝓛, 𝓟), Perm/Perm', Tab/Tab'.
GraphPair build_signed_young(int max_rank);
GraphPair build_composition_poset_pair(int max_rank);
GraphPair build_perm_pair(int max_rank);
GraphPair build_tab_pair(int max_rank);
GraphPair build_named_pair(const std::string& name, int max_rank);  // young, comp, perm, tab

// Data for the graphs of a pair of dual graded Hopf algebras with bases {p}, {s}.
struct DualHopfData {
  std::string name;
  std::function<std::vector<Vertex>(int)> basis;  // labels of s in degree n
  // s_λ β expanded in s: μ ↦ <p_μ, s_λ β>
  std::function<std::map<Vertex, LaurentPoly>(const Vertex&)> right_mul_beta;
  // λ ↦ <p_λ α, s_μ> for fixed μ
  std::function<std::map<Vertex, LaurentPoly>(const Vertex&)> alpha_pairing;
};
GraphPair from_dual_hopf(const DualHopfData& data, int max_rank);
DualHopfData osym_dual_data();          // odd Schur functions, α = β = s_1
DualHopfData young_noncommutative_data();  // 𝒮* and 𝒮 with α = 𝒮_1, β = 𝒮*_1

// Equal up to vertex signs ε with m'(u,v) = ε_u ε_v m(u,v), applied to both graphs.
bool gauge_equivalent(const GraphPair& a, const GraphPair& b, int max_rank);

// "u -> v : w" for every edge with target rank ≤ max_rank, sorted.
std::vector<std::string> edge_lines(const GradedGraph& g, int max_rank);
std::string to_dot(const GradedGraph& g);
nlohmann::json to_json(const GradedGraph& g);

}  // namespace qhopf
