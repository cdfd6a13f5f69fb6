#pragma once

// Injective partial maps from H-vertices to G-vertices, pair weights, and the
// superposition G "+" phi(H): same vertex set as G, edge set E(G) united with
// the phi-images of E(H). Images that coincide with existing edges collapse,
// so the result is always simple.

#include <map>

#include "sca/graph.hpp"

namespace sca {

using Weight = std::uint64_t;
inline constexpr Weight kInfiniteWeight = ~Weight{0};

inline Weight checked_add(Weight a, Weight b) {
  Weight r = a + b;
  if (r < a) throw std::overflow_error("weight sum exceeds 64-bit range");
  return r;
}

class Mapping {
 public:
  Mapping() = default;

  explicit Mapping(std::vector<VertexPair> hg_pairs) {
    std::sort(hg_pairs.begin(), hg_pairs.end());
    for (size_t i = 0; i < hg_pairs.size(); ++i) {
      if (hg_pairs[i].first < 0 || hg_pairs[i].second < 0)
        throw std::invalid_argument("mapping: negative vertex");
      if (i > 0 && hg_pairs[i].first == hg_pairs[i - 1].first)
        throw std::invalid_argument("mapping: vertex mapped twice");
    }
    auto images = hg_pairs;
    std::sort(images.begin(), images.end(),
              [](const VertexPair& a, const VertexPair& b) { return a.second < b.second; });
    for (size_t i = 1; i < images.size(); ++i)
      if (images[i].second == images[i - 1].second)
        throw std::invalid_argument("mapping: not injective");
    pairs_ = std::move(hg_pairs);
  }

  int size() const { return static_cast<int>(pairs_.size()); }
  const std::vector<VertexPair>& pairs() const { return pairs_; }

  std::optional<Vertex> image(Vertex h) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), VertexPair{h, -1});
    if (it != pairs_.end() && it->first == h) return it->second;
    return std::nullopt;
  }

  std::vector<Vertex> image() const {
    std::vector<Vertex> out;
    out.reserve(pairs_.size());
    for (const auto& [h, g] : pairs_) out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
  }

  Vertex at(Vertex h) const {
    auto g = image(h);
    if (!g) throw std::invalid_argument("mapping: vertex has no image");
    return *g;
  }

  bool total_on(int n_h) const {
    if (size() != n_h) return false;
    for (int h = 0; h < n_h; ++h)
      if (pairs_[h].first != h) return false;
    return true;
  }

  // Lexicographic order on the sorted (h, g) pair list; total orders the
  // candidates a solver produces for one instance.
  bool operator<(const Mapping& o) const { return pairs_ < o.pairs_; }
  bool operator==(const Mapping& o) const { return pairs_ == o.pairs_; }

 private:
  std::vector<VertexPair> pairs_;  // sorted by h
};

class WeightFn {
 public:
  WeightFn() = default;
  explicit WeightFn(Weight default_weight) : default_(default_weight) {}

  Weight default_weight() const { return default_; }
  const std::map<VertexPair, Weight>& overrides() const { return overrides_; }

  void set(Vertex u, Vertex v, Weight w) {
    if (u == v) throw std::invalid_argument("weight: self pair");
    if (u < 0 || v < 0) throw std::invalid_argument("weight: negative vertex");
    overrides_[ordered(u, v)] = w;
  }

  Weight operator()(Vertex u, Vertex v) const {
    auto it = overrides_.find(ordered(u, v));
    return it == overrides_.end() ? default_ : it->second;
  }

 private:
  Weight default_ = 0;
  std::map<VertexPair, Weight> overrides_;
};

inline void require_injection_into(const Mapping& phi, const Graph& h, const Graph& g) {
  if (!phi.total_on(h.n()))
    throw std::invalid_argument("mapping: not total on V(H)");
  for (const auto& [hv, gv] : phi.pairs())
    if (gv >= g.n()) throw std::invalid_argument("mapping: image out of range");
}

inline Graph superpose(const Graph& g, const Graph& h, const Mapping& phi) {
  require_injection_into(phi, h, g);
  std::vector<VertexPair> edges = g.edges();
  for (const auto& [u, v] : h.edges()) edges.push_back(ordered(phi.at(u), phi.at(v)));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(g.n(), std::move(edges));
}

inline Weight mapping_weight(const Graph& h, const Mapping& phi, const WeightFn& omega) {
  Weight total = 0;
  for (const auto& [u, v] : h.edges()) total = checked_add(total, omega(phi.at(u), phi.at(v)));
  return total;
}

struct Solution {
  Mapping phi;
  Weight weight = 0;
};

}  // namespace sca
