#pragma once

// Exact minimum vertex cover by size-then-lex subset search (intended for the
// small pattern graphs H), and the partition of an independent set into
// false-twin classes (equal neighborhoods).

#include "sca/graph.hpp"

namespace sca {

namespace detail {

inline bool covers(const Graph& g, const std::vector<char>& in_cover) {
  for (const auto& [u, v] : g.edges())
    if (!in_cover[u] && !in_cover[v]) return false;
  return true;
}

inline bool extend_cover(const Graph& g, std::vector<Vertex>& chosen,
                         std::vector<char>& in_cover, Vertex start, int slots) {
  // Any edge whose endpoints both precede `start` can no longer be covered.
  for (const auto& [u, v] : g.edges())
    if (v < start && !in_cover[u] && !in_cover[v]) return false;
  if (slots == 0) return covers(g, in_cover);
  for (Vertex v = start; v < g.n(); ++v) {
    chosen.push_back(v);
    in_cover[v] = 1;
    if (extend_cover(g, chosen, in_cover, v + 1, slots - 1)) return true;
    in_cover[v] = 0;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

// Lexicographically smallest vertex cover of minimum size, or nullopt when no
// cover with at most t_max vertices exists.
inline std::optional<std::vector<Vertex>> minimum_vertex_cover(const Graph& g, int t_max = -1) {
  if (t_max < 0) t_max = g.n();
  int bound = std::min(t_max, g.n());
  std::vector<Vertex> chosen;
  std::vector<char> in_cover(g.n(), 0);
  for (int size = 0; size <= bound; ++size) {
    chosen.clear();
    if (detail::extend_cover(g, chosen, in_cover, 0, size)) return chosen;
  }
  return std::nullopt;
}

// Classes of equal neighborhood among the vertices of z (which must be
// independent in g). Classes and members both ascend by vertex index.
inline std::vector<std::vector<Vertex>> false_twin_classes(const Graph& g,
                                                           std::vector<Vertex> z) {
  std::sort(z.begin(), z.end());
  for (Vertex u : z)
    for (Vertex v : z)
      if (u < v && g.has_edge(u, v))
        throw std::invalid_argument("false_twin_classes: set is not independent");
  std::vector<std::vector<Vertex>> classes;
  for (Vertex v : z) {
    bool placed = false;
    for (auto& cls : classes)
      if (g.neighbors(cls.front()) == g.neighbors(v)) {
        cls.push_back(v);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({v});
  }
  return classes;
}

}  // namespace sca
