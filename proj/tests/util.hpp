#pragma once

// Shared helpers for the test suites: small graph factories, seeded random
// graphs, and tiny reference implementations used as oracles.

#include <numeric>
#include <random>

#include "sca/graph.hpp"
#include "sca/mapping.hpp"

namespace testutil {

inline sca::Graph make_graph(int n, std::vector<sca::VertexPair> edges) {
  return sca::Graph(n, std::move(edges));
}

inline sca::Graph make_path(int n) {
  std::vector<sca::VertexPair> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return sca::Graph(n, std::move(e));
}

inline sca::Graph make_cycle(int n) {
  std::vector<sca::VertexPair> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  if (n >= 3) e.push_back({0, n - 1});
  return sca::Graph(n, std::move(e));
}

inline sca::Graph make_complete(int n) {
  std::vector<sca::VertexPair> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return sca::Graph(n, std::move(e));
}

// Star K_{1,n}: center 0, leaves 1..n.
inline sca::Graph make_star(int leaves) {
  std::vector<sca::VertexPair> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return sca::Graph(leaves + 1, std::move(e));
}

// Perfect matching on 2m vertices: edges (0,1), (2,3), ...
inline sca::Graph make_matching(int m) {
  std::vector<sca::VertexPair> e;
  for (int i = 0; i < m; ++i) e.push_back({2 * i, 2 * i + 1});
  return sca::Graph(2 * m, std::move(e));
}

inline sca::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<sca::VertexPair> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.push_back({u, v});
  return sca::Graph(n, std::move(e));
}

inline sca::Graph random_tree(int n, std::mt19937_64& rng) {
  std::vector<sca::VertexPair> e;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    e.push_back({pick(rng), v});
  }
  return sca::Graph(n, std::move(e));
}

inline sca::Graph strip_isolated(const sca::Graph& g, std::vector<int>* old_index = nullptr) {
  std::vector<int> keep;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0) keep.push_back(v);
  std::vector<int> new_of(g.n(), -1);
  for (size_t i = 0; i < keep.size(); ++i) new_of[keep[i]] = static_cast<int>(i);
  std::vector<sca::VertexPair> e;
  for (auto [u, v] : g.edges()) e.push_back({new_of[u], new_of[v]});
  if (old_index) *old_index = keep;
  return sca::Graph(static_cast<int>(keep.size()), std::move(e));
}

inline sca::Mapping identity_mapping(int n) {
  std::vector<sca::VertexPair> pairs;
  for (int i = 0; i < n; ++i) pairs.push_back({i, i});
  return sca::Mapping(std::move(pairs));
}

// Minimum assignment cost over all ways to pick a distinct column per row,
// by explicit enumeration; kInfiniteWeight when rows cannot be saturated.
inline sca::Weight brute_force_assignment(const std::vector<std::vector<sca::Weight>>& cost) {
  const int rows = static_cast<int>(cost.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(cost[0].size());
  if (rows > cols) return sca::kInfiniteWeight;
  std::vector<int> cols_idx(cols);
  std::iota(cols_idx.begin(), cols_idx.end(), 0);
  sca::Weight best = sca::kInfiniteWeight;
  std::vector<int> pick(rows, -1);
  std::vector<char> used(cols, 0);
  auto rec = [&](auto&& self, int r, sca::Weight acc) -> void {
    if (r == rows) {
      best = std::min(best, acc);
      return;
    }
    for (int c = 0; c < cols; ++c) {
      if (used[c]) continue;
      used[c] = 1;
      self(self, r + 1, acc + cost[r][c]);
      used[c] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace testutil
