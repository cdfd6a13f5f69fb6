#pragma once

// Seeded instance generators: a random family for fuzzing, plus three
// reductions that plant a known combinatorial question inside an instance.
// Each reduction's output is a yes-instance exactly when the planted question
// answers yes, which gives the test suite large structured cases with
// independently computable answers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "sca/connectivity.hpp"
#include "sca/instance.hpp"

namespace sca {

struct GenParams {
  int n_g = 8;
  int n_h = 4;
  double edge_prob = 0.3;
  Weight weight_max = 3;
  int k = 1;
  bool connected_g = false;
};

// Reproducible per seed: the same (params, seed) pair always yields the same
// instance.  Isolated overlay vertices are stripped (they never constrain a
// superposition), and connected_g patches the host with one extra edge per
// surplus component.
inline Instance gen_random(const GenParams& p, std::uint64_t seed) {
  if (p.k != 1 && p.k != 2) throw std::invalid_argument("gen: connectivity target must be 1 or 2");
  if (p.n_g < 1) throw std::invalid_argument("gen: host needs at least one vertex");
  if (p.n_h < 0 || p.n_h > p.n_g)
    throw std::invalid_argument("gen: overlay size must lie in [0, host size]");
  if (!(p.edge_prob >= 0.0 && p.edge_prob <= 1.0))
    throw std::invalid_argument("gen: edge probability outside [0, 1]");
  if (p.weight_max >= kInfiniteWeight)
    throw std::invalid_argument("gen: weight bound too large");

  std::mt19937_64 rng(seed);
  // Top 53 bits as a uniform double in [0,1); avoids std::uniform_real_distribution,
  // whose output is implementation-defined and would break seed reproducibility.
  auto coin = [&rng](double prob) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < prob;
  };
  auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  std::vector<VertexPair> g_edges;
  for (Vertex u = 0; u < p.n_g; ++u)
    for (Vertex v = u + 1; v < p.n_g; ++v)
      if (coin(p.edge_prob)) g_edges.push_back({u, v});
  Graph g(p.n_g, std::move(g_edges));

  if (p.connected_g) {
    ComponentInfo info = components(g);
    if (info.count > 1) {
      std::vector<std::vector<Vertex>> members(info.count);
      for (Vertex v = 0; v < g.n(); ++v) members[info.id[v]].push_back(v);
      std::vector<VertexPair> extra = g.edges();
      for (int c = 1; c < info.count; ++c) {
        Vertex inside = members[c][pick(members[c].size())];
        const auto& other = members[pick(static_cast<std::size_t>(c))];
        Vertex outside = other[pick(other.size())];
        extra.push_back(ordered(inside, outside));
      }
      g = Graph(p.n_g, std::move(extra));
    }
  }

  std::vector<VertexPair> h_edges;
  for (Vertex u = 0; u < p.n_h; ++u)
    for (Vertex v = u + 1; v < p.n_h; ++v)
      if (coin(p.edge_prob)) h_edges.push_back({u, v});
  std::vector<int> h_degree(static_cast<std::size_t>(p.n_h), 0);
  for (const auto& [u, v] : h_edges) {
    ++h_degree[u];
    ++h_degree[v];
  }
  std::vector<Vertex> keep_as(static_cast<std::size_t>(p.n_h), -1);
  int kept = 0;
  for (Vertex v = 0; v < p.n_h; ++v)
    if (h_degree[v] > 0) keep_as[v] = kept++;
  std::vector<VertexPair> kept_edges;
  kept_edges.reserve(h_edges.size());
  for (const auto& [u, v] : h_edges) kept_edges.push_back({keep_as[u], keep_as[v]});
  Graph h(kept, std::move(kept_edges));

  Instance inst;
  inst.k = p.k;
  inst.g = std::move(g);
  inst.h = std::move(h);
  inst.omega = WeightFn(rng() % (p.weight_max + 1));
  for (Vertex u = 0; u < inst.g.n(); ++u)
    for (Vertex v = u + 1; v < inst.g.n(); ++v)
      if (coin(0.5)) inst.omega.set(u, v, rng() % (p.weight_max + 1));
  return inst;
}

// Plants subgraph-isomorphism: the output asks for a zero-weight placement of
// `pattern` into the complete host whose free (weight-0) pairs are exactly the
// edges of `target`.  The instance is a yes-instance iff `target` contains a
// subgraph isomorphic to `pattern`.
inline Instance reduce_subgraph_isomorphism(const Graph& target, const Graph& pattern, int k) {
  if (k != 1 && k != 2) throw std::invalid_argument("reduce: connectivity target must be 1 or 2");
  if (target.n() <= k)
    throw std::invalid_argument("reduce: target graph needs more than k vertices");
  std::vector<VertexPair> complete;
  for (Vertex u = 0; u < target.n(); ++u)
    for (Vertex v = u + 1; v < target.n(); ++v) complete.push_back({u, v});
  Instance inst;
  inst.k = k;
  inst.g = Graph(target.n(), std::move(complete));
  inst.h = pattern;
  inst.omega = WeightFn(1);
  for (const auto& [u, v] : target.edges()) inst.omega.set(u, v, 0);
  inst.budget = 0;
  return inst;
}

namespace detail {

inline void require_cubic(const Graph& g) {
  if (g.n() < 4) throw std::invalid_argument("reduce: cubic graph needs at least 4 vertices");
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) != 3) throw std::invalid_argument("reduce: graph is not cubic");
}

// Vertex layout shared by the Hamiltonian-path reduction and its witness:
// originals 0..n-1, then for the j-th edge {u,v} (in sorted edge order) the
// u-side copy n+2j and the v-side copy n+2j+1.
inline Vertex edge_copy(const Graph& g0, int edge_index, Vertex endpoint) {
  const VertexPair& e = g0.edges()[edge_index];
  return g0.n() + 2 * edge_index + (endpoint == e.first ? 0 : 1);
}

}  // namespace detail

// Plants Hamiltonian path (k = 1).  The host splits every edge {u,v} of the
// cubic input into two pendant copies hanging off u and v; the overlay is a
// matching with 2n-1 edges.  Connecting the host within budget n-1 forces
// n-1 matching edges to bridge consecutive edge-gadgets (weight 1 each) while
// the other n collapse onto existing host edges (weight 0), which is possible
// iff the input has a Hamiltonian path.
inline Instance reduce_hamiltonian_path(const Graph& g0) {
  detail::require_cubic(g0);
  const int n = g0.n();
  const int m = static_cast<int>(g0.edges().size());
  std::vector<VertexPair> host_edges;
  host_edges.reserve(2 * static_cast<std::size_t>(m));
  Instance inst;
  inst.omega = WeightFn(2);
  for (int j = 0; j < m; ++j) {
    const auto& [u, v] = g0.edges()[j];
    Vertex cu = detail::edge_copy(g0, j, u);
    Vertex cv = detail::edge_copy(g0, j, v);
    host_edges.push_back(ordered(u, cu));
    host_edges.push_back(ordered(v, cv));
    inst.omega.set(u, cu, 0);
    inst.omega.set(v, cv, 0);
    inst.omega.set(cu, cv, 1);
  }
  inst.k = 1;
  inst.g = Graph(n + 2 * m, std::move(host_edges));
  std::vector<VertexPair> matching;
  for (int i = 0; i < 2 * n - 1; ++i) matching.push_back({2 * i, 2 * i + 1});
  inst.h = Graph(2 * (2 * n - 1), std::move(matching));
  inst.budget = static_cast<Weight>(n - 1);
  return inst;
}

// Turns a Hamiltonian path of the cubic graph into an optimal mapping for
// reduce_hamiltonian_path(g0): matching edge i < n-1 joins the two copies of
// the i-th path edge (weight 1); the remaining n matching edges collapse onto
// the host edge between each path vertex and the copy for its smallest-index
// unused incident edge (weight 0).
inline Mapping witness_from_ham_path(const Graph& g0, const std::vector<Vertex>& path) {
  detail::require_cubic(g0);
  const int n = g0.n();
  if (static_cast<int>(path.size()) != n)
    throw std::invalid_argument("witness: path must visit every vertex");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Vertex v : path) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("witness: not a path");
    seen[v] = true;
  }
  std::map<VertexPair, int> edge_index;
  for (int j = 0; j < static_cast<int>(g0.edges().size()); ++j)
    edge_index.emplace(g0.edges()[j], j);
  std::vector<bool> on_path(g0.edges().size(), false);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int i = 0; i + 1 < n; ++i) {
    auto it = edge_index.find(ordered(path[i], path[i + 1]));
    if (it == edge_index.end()) throw std::invalid_argument("witness: consecutive vertices not adjacent");
    on_path[it->second] = true;
    pairs.emplace_back(2 * i, detail::edge_copy(g0, it->second, path[i]));
    pairs.emplace_back(2 * i + 1, detail::edge_copy(g0, it->second, path[i + 1]));
  }
  for (int i = 0; i < n; ++i) {
    Vertex v = path[i];
    int free_edge = -1;
    for (Vertex w : g0.neighbors(v)) {
      int j = edge_index.at(ordered(v, w));
      if (!on_path[j] && (free_edge == -1 || j < free_edge)) free_edge = j;
    }
    // Every cubic vertex touches at most two path edges, so one incident edge
    // is always left over.
    pairs.emplace_back(2 * (n - 1 + i), v);
    pairs.emplace_back(2 * (n - 1 + i) + 1, detail::edge_copy(g0, free_edge, v));
  }
  return Mapping(std::move(pairs));
}

// Plants biconnectivity augmentation (k = 2): given a tree, a cost in {1,2}
// for each candidate non-tree edge, and a budget, decide whether the tree can
// be made 2-edge-connected by adding candidate edges of total cost at most
// the budget.  The host replaces each tree edge {u,v} by a subdivision path
// u-q-v and hangs a clique of 2r spare vertices x_1..x_r, y_1..y_r off every
// tree vertex; the overlay is a matching with `budget` edges.  A matching
// edge placed across the spare cliques of u and v (cost c(uv)) plays the role
// of adding the candidate edge uv, and unused matching edges park on the free
// intra-clique pairs x_i y_i (cost 0).  Every other pair costs budget+1, so a
// within-budget 2-edge-connected superposition exists iff the augmentation
// question answers yes.
inline Instance reduce_biconnectivity_augmentation(
    const Graph& tree, const std::map<VertexPair, Weight>& cost, Weight budget, int k) {
  if (k != 2) throw std::invalid_argument("reduce: only the 2-edge-connected target is supported");
  if (!is_connected(tree) || static_cast<int>(tree.edges().size()) != tree.n() - 1)
    throw std::invalid_argument("reduce: input graph is not a tree");
  if (budget < 1) throw std::invalid_argument("reduce: budget must be positive");
  if (budget > 1000) throw std::invalid_argument("reduce: budget too large to embed");
  for (Vertex u = 0; u < tree.n(); ++u)
    for (Vertex v = u + 1; v < tree.n(); ++v) {
      if (tree.has_edge(u, v)) continue;
      auto it = cost.find({u, v});
      if (it == cost.end())
        throw std::invalid_argument("reduce: missing cost for a candidate edge");
      if (it->second < 1 || it->second > 2)
        throw std::invalid_argument("reduce: candidate edge costs must be 1 or 2");
    }

  const int nt = tree.n();
  const int mt = static_cast<int>(tree.edges().size());
  const int r = static_cast<int>(std::max<Weight>(k, budget));
  const int sub = k - 1;  // subdivision vertices per tree edge
  auto q_vertex = [&](int edge_index, int i) { return nt + edge_index * sub + i; };
  auto x_vertex = [&](Vertex u, int i) { return nt + mt * sub + u * 2 * r + i; };
  auto y_vertex = [&](Vertex u, int i) { return nt + mt * sub + u * 2 * r + r + i; };

  std::vector<VertexPair> host_edges;
  for (int j = 0; j < mt; ++j) {
    const auto& [u, v] = tree.edges()[j];
    for (int i = 0; i < sub; ++i) {
      host_edges.push_back(ordered(u, q_vertex(j, i)));
      host_edges.push_back(ordered(v, q_vertex(j, i)));
      for (int i2 = i + 1; i2 < sub; ++i2)
        host_edges.push_back(ordered(q_vertex(j, i), q_vertex(j, i2)));
    }
  }
  for (Vertex u = 0; u < nt; ++u) {
    for (int i = 0; i < 2 * r; ++i) {
      host_edges.push_back(ordered(u, x_vertex(u, i)));
      for (int i2 = i + 1; i2 < 2 * r; ++i2)
        host_edges.push_back(ordered(x_vertex(u, i), x_vertex(u, i2)));
    }
  }

  Instance inst;
  inst.k = k;
  inst.g = Graph(nt + mt * sub + nt * 2 * r, std::move(host_edges));
  std::vector<VertexPair> matching;
  for (int i = 0; i < static_cast<int>(budget); ++i) matching.push_back({2 * i, 2 * i + 1});
  inst.h = Graph(2 * static_cast<int>(budget), std::move(matching));
  inst.omega = WeightFn(budget + 1);
  for (Vertex u = 0; u < nt; ++u)
    for (int i = 0; i < r; ++i) inst.omega.set(x_vertex(u, i), y_vertex(u, i), 0);
  for (Vertex u = 0; u < nt; ++u)
    for (Vertex v = u + 1; v < nt; ++v) {
      if (tree.has_edge(u, v)) continue;
      Weight c = cost.at({u, v});
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          inst.omega.set(x_vertex(u, i), y_vertex(v, j), c);
          inst.omega.set(x_vertex(v, i), y_vertex(u, j), c);
        }
    }
  inst.budget = budget;
  return inst;
}

}  // namespace sca
