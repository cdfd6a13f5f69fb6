#pragma once

// Connectivity structure: components, bridges, 2-edge-connected blocks and
// the pendant blocks of a connected graph. A block is "pendant" when exactly
// one bridge is incident to its vertex set; a single vertex counts as a
// (trivial) 2-edge-connected block. All traversals are iterative so deep
// path-like graphs do not overflow the stack.

#include <optional>

#include "sca/graph.hpp"

namespace sca {

struct ComponentInfo {
  int count = 0;
  std::vector<int> id;  // per vertex, numbered by first-seen order from vertex 0
};

inline ComponentInfo components(const Graph& g) {
  ComponentInfo info;
  info.id.assign(g.n(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (info.id[s] >= 0) continue;
    int c = info.count++;
    info.id[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (info.id[w] < 0) {
          info.id[w] = c;
          stack.push_back(w);
        }
    }
  }
  return info;
}

inline bool is_connected(const Graph& g) { return components(g).count <= 1; }

struct GraphStats {
  int components = 0;
  int isolated = 0;
  std::optional<int> pendants;  // defined only for connected graphs
};

// Component labels after deleting the given (sorted) edge set.
inline std::vector<int> components_without(const Graph& g,
                                           const std::vector<VertexPair>& removed) {
  std::vector<int> id(g.n(), -1);
  std::vector<Vertex> stack;
  int count = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (id[s] >= 0) continue;
    id[s] = count++;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (id[w] >= 0) continue;
        if (std::binary_search(removed.begin(), removed.end(), ordered(v, w))) continue;
        id[w] = id[s];
        stack.push_back(w);
      }
    }
  }
  return id;
}

// Bridges in sorted (u < v) order, via iterative lowpoint DFS.
inline std::vector<VertexPair> bridges(const Graph& g) {
  const int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), it(n, 0);
  std::vector<VertexPair> out;
  std::vector<Vertex> stack;
  int timer = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    stack.push_back(s);
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Vertex v = stack.back();
      if (it[v] < static_cast<int>(g.neighbors(v).size())) {
        Vertex w = g.neighbors(v)[it[v]++];
        if (disc[w] < 0) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          stack.push_back(w);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (parent[v] >= 0) {
          low[parent[v]] = std::min(low[parent[v]], low[v]);
          if (low[v] > disc[parent[v]]) out.push_back(ordered(parent[v], v));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline GraphStats stats(const Graph& g) {
  GraphStats s;
  s.components = components(g).count;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) ++s.isolated;
  if (s.components <= 1 && g.n() > 0) {
    auto br = bridges(g);
    // pendant blocks = leaves of the bridge tree; count blocks with exactly
    // one incident bridge
    std::vector<int> block = components_without(g, br);
    int nblocks = block.empty() ? 0 : *std::max_element(block.begin(), block.end()) + 1;
    std::vector<int> incident(nblocks, 0);
    for (const auto& [u, v] : br) {
      ++incident[block[u]];
      ++incident[block[v]];
    }
    int p = 0;
    for (int c : incident)
      if (c == 1) ++p;
    s.pendants = p;
  }
  return s;
}

struct BlockDecomposition {
  std::vector<VertexPair> bridges;           // sorted
  std::vector<int> block_of;                 // per vertex
  std::vector<std::vector<Vertex>> blocks;   // vertex sets, ordered by min vertex
  std::vector<int> incident_bridges;         // per block
  // attaching bridge of a pendant block as (inside, outside); empty otherwise
  std::vector<std::optional<VertexPair>> attach;
  std::vector<int> pendant_blocks;           // block indices, ascending

  bool is_pendant(int b) const { return incident_bridges[b] == 1; }
};

inline BlockDecomposition block_decomposition(const Graph& g) {
  if (components(g).count > 1)
    throw std::invalid_argument("block_decomposition: graph is disconnected");
  BlockDecomposition d;
  d.bridges = bridges(g);
  d.block_of = components_without(g, d.bridges);
  int nblocks = g.n() == 0 ? 0 : *std::max_element(d.block_of.begin(), d.block_of.end()) + 1;
  d.blocks.resize(nblocks);
  for (Vertex v = 0; v < g.n(); ++v) d.blocks[d.block_of[v]].push_back(v);
  d.incident_bridges.assign(nblocks, 0);
  d.attach.assign(nblocks, std::nullopt);
  for (const auto& [u, v] : d.bridges) {
    int bu = d.block_of[u], bv = d.block_of[v];
    ++d.incident_bridges[bu];
    ++d.incident_bridges[bv];
    d.attach[bu] = VertexPair{u, v};  // (inside, outside) seen from bu
    d.attach[bv] = VertexPair{v, u};
  }
  for (int b = 0; b < nblocks; ++b) {
    if (d.incident_bridges[b] == 1)
      d.pendant_blocks.push_back(b);
    else
      d.attach[b] = std::nullopt;  // keep attach only for pendant blocks
  }
  return d;
}

inline bool is_k_edge_connected(const Graph& g, int k) {
  if (k != 1 && k != 2) throw std::invalid_argument("is_k_edge_connected: k must be 1 or 2");
  if (g.n() <= 1) return true;
  if (components(g).count != 1) return false;
  if (k == 1) return true;
  return bridges(g).empty();
}

}  // namespace sca
