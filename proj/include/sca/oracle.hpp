#pragma once

// Reference answers by exhaustive search. The brute-force optimum enumerates
// every injection of V(H) into V(G) in lexicographic order, so the reported
// mapping is the lexicographically smallest optimal one; an explicit cap
// bounds the number of injections up front. Edge connectivity uses the
// Stoer-Wagner global minimum cut.

#include <limits>

#include "sca/connectivity.hpp"
#include "sca/mapping.hpp"

namespace sca {

struct OracleOptions {
  std::uint64_t cap = 100'000'000;
};

struct OracleCapExceeded : std::runtime_error {
  explicit OracleCapExceeded(std::uint64_t needed, std::uint64_t cap)
      : std::runtime_error("oracle: " + std::to_string(needed) +
                           " injections exceed cap " + std::to_string(cap)) {}
};

namespace detail {

inline void check_cap(const Graph& g, const Graph& h, const OracleOptions& opts) {
  std::uint64_t total = 1;
  for (int i = 0; i < h.n(); ++i) {
    total *= static_cast<std::uint64_t>(g.n() - i);
    if (total > opts.cap) throw OracleCapExceeded(total, opts.cap);
  }
}

// Union-find over the components of G with rollback, so the search can undo
// the unions contributed by one assignment when it backtracks.
struct RollbackDsu {
  std::vector<int> parent, size;
  std::vector<int> trail;
  int live;

  explicit RollbackDsu(int n) : parent(n), size(n, 1), live(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  int unite(int a, int b) {  // returns number of unions recorded (0 or 1)
    a = find(a);
    b = find(b);
    if (a == b) return 0;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    trail.push_back(b);
    --live;
    return 1;
  }
  void rollback(int count) {
    while (count-- > 0) {
      int b = trail.back();
      trail.pop_back();
      size[parent[b]] -= size[b];
      parent[b] = b;
      ++live;
    }
  }
};

struct BruteState {
  const Graph& g;
  const Graph& h;
  const WeightFn* omega;
  int k;
  bool find_any;  // stop at the first k-edge-connected superposition

  std::vector<int> image;     // per h-vertex, -1 while unassigned
  std::vector<char> used;     // per g-vertex
  std::vector<int> comp_of;   // component id per g-vertex
  RollbackDsu dsu;
  Weight partial = 0;

  std::optional<Solution> best;

  BruteState(const Graph& g_, const Graph& h_, const WeightFn* w, int k_, bool any)
      : g(g_), h(h_), omega(w), k(k_), find_any(any),
        image(h_.n(), -1), used(g_.n(), 0),
        comp_of(components(g_).id), dsu(components(g_).count) {}

  bool leaf() {
    if (k == 1) {
      if (dsu.live != 1 && g.n() > 0) return false;
    } else {
      std::vector<VertexPair> edges = g.edges();
      for (const auto& [x, y] : h.edges()) edges.push_back(ordered(image[x], image[y]));
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
      if (!is_k_edge_connected(Graph(g.n(), std::move(edges)), 2)) return false;
    }
    if (find_any) {
      best = Solution{Mapping{}, 0};
      return true;
    }
    if (!best || partial < best->weight) {
      std::vector<VertexPair> pairs;
      for (int x = 0; x < h.n(); ++x) pairs.emplace_back(x, image[x]);
      best = Solution{Mapping(std::move(pairs)), partial};
    }
    return false;
  }

  bool search(int x) {
    if (x == h.n()) return leaf();
    for (Vertex v = 0; v < g.n(); ++v) {
      if (used[v]) continue;
      Weight added = 0;
      bool overflow = false;
      for (Vertex y : h.neighbors(x)) {
        if (y >= x || image[y] < 0) continue;
        Weight w = omega ? (*omega)(v, image[y]) : 0;
        if (added > kInfiniteWeight - w) { overflow = true; break; }
        added += w;
      }
      if (overflow) continue;  // every completion would overflow the weight sum
      if (best && !find_any && partial + added >= best->weight) continue;
      int unions = 0;
      if (k == 1)
        for (Vertex y : h.neighbors(x))
          if (y < x && image[y] >= 0) unions += dsu.unite(comp_of[v], comp_of[image[y]]);
      image[x] = v;
      used[v] = 1;
      partial += added;
      bool done = search(x + 1);
      partial -= added;
      used[v] = 0;
      image[x] = -1;
      if (k == 1) dsu.rollback(unions);
      if (done) return true;
    }
    return false;
  }
};

}  // namespace detail

inline std::optional<Solution> brute_force_optimum(const Graph& g, const Graph& h,
                                                   const WeightFn& omega, int k,
                                                   const OracleOptions& opts = {}) {
  if (k != 1 && k != 2) throw std::invalid_argument("oracle: k must be 1 or 2");
  if (h.n() > g.n()) return std::nullopt;
  detail::check_cap(g, h, opts);
  detail::BruteState state(g, h, &omega, k, false);
  state.search(0);
  return state.best;
}

inline bool brute_force_feasible(const Graph& g, const Graph& h, int k,
                                 const OracleOptions& opts = {}) {
  if (k != 1 && k != 2) throw std::invalid_argument("oracle: k must be 1 or 2");
  if (h.n() > g.n()) return false;
  detail::check_cap(g, h, opts);
  detail::BruteState state(g, h, nullptr, k, true);
  return state.search(0);
}

// Global minimum edge cut; 0 for disconnected graphs and INT_MAX when no cut
// exists (fewer than two vertices).
inline int edge_connectivity(const Graph& g) {
  const int n = g.n();
  if (n <= 1) return std::numeric_limits<int>::max();
  if (components(g).count > 1) return 0;
  std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
  for (const auto& [u, v] : g.edges()) w[u][v] = w[v][u] = 1;
  std::vector<char> merged(n, 0);
  long long best = std::numeric_limits<long long>::max();
  for (int phase = 0; phase < n - 1; ++phase) {
    std::vector<long long> gain(n, 0);
    std::vector<char> added = merged;
    int prev = -1, last = -1;
    int remaining = 0;
    for (int v = 0; v < n; ++v)
      if (!merged[v]) ++remaining;
    for (int step = 0; step < remaining; ++step) {
      int sel = -1;
      for (int v = 0; v < n; ++v)
        if (!added[v] && (sel < 0 || gain[v] > gain[sel])) sel = v;
      added[sel] = 1;
      prev = last;
      last = sel;
      if (step == remaining - 1) best = std::min(best, gain[sel]);
      for (int v = 0; v < n; ++v)
        if (!added[v]) gain[v] += w[sel][v];
    }
    merged[last] = 1;
    for (int v = 0; v < n; ++v) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
  }
  return static_cast<int>(best);
}

}  // namespace sca
