#pragma once

// Simple undirected graphs on vertices 0..n-1, stored as a sorted edge list
// plus adjacency lists. Construction validates the "simple" invariants.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sca {

using Vertex = int;
using VertexPair = std::pair<Vertex, Vertex>;

inline VertexPair ordered(Vertex u, Vertex v) {
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    adj_.resize(static_cast<size_t>(n));
  }

  Graph(int n, std::vector<VertexPair> edges) : Graph(n) {
    for (auto& e : edges) {
      if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
        throw std::invalid_argument("graph: edge endpoint out of range");
      if (e.first == e.second)
        throw std::invalid_argument("graph: self-loop " + std::to_string(e.first));
      e = ordered(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("graph: duplicate edge");
    edges_ = std::move(edges);
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexPair>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

}  // namespace sca
