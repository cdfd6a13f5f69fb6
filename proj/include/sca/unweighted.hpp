#pragma once

// Feasibility tests and constructive mappings for the unweighted problems:
// place the overlay H injectively onto the host G so the superposition is
// connected (k = 1) or 2-edge-connected (k = 2). Feasibility is a counting
// characterization; the constructions realize it and verify the result before
// returning, so a bug can never produce a wrong mapping silently.

#include <optional>

#include "sca/connectivity.hpp"
#include "sca/mapping.hpp"

namespace sca {

namespace detail {

inline void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(what);
}

// Overlay vertices that carry edges, plus the isolated leftovers. The solvers
// place the core; isolated overlay vertices are slotted afterwards since they
// cannot change the superposition.
struct OverlayCore {
  Graph core;
  std::vector<Vertex> to_orig;   // core index -> original overlay vertex
  std::vector<Vertex> isolated;  // original overlay vertices of degree 0
};

inline OverlayCore split_overlay(const Graph& h) {
  OverlayCore oc;
  std::vector<Vertex> new_of(h.n(), -1);
  for (Vertex v = 0; v < h.n(); ++v) {
    if (h.degree(v) == 0) {
      oc.isolated.push_back(v);
    } else {
      new_of[v] = static_cast<Vertex>(oc.to_orig.size());
      oc.to_orig.push_back(v);
    }
  }
  std::vector<VertexPair> edges;
  edges.reserve(h.edges().size());
  for (auto [u, v] : h.edges()) edges.push_back({new_of[u], new_of[v]});
  oc.core = Graph(static_cast<int>(oc.to_orig.size()), std::move(edges));
  return oc;
}

// Turn a total placement of the core into a mapping on all of V(H); isolated
// overlay vertices take the smallest unused host vertices in ascending order.
inline Mapping reattach(const OverlayCore& oc, const std::vector<Vertex>& core_image, int n_g) {
  std::vector<char> used(n_g, 0);
  std::vector<VertexPair> pairs;
  pairs.reserve(oc.to_orig.size() + oc.isolated.size());
  for (size_t i = 0; i < oc.to_orig.size(); ++i) {
    require(core_image[i] >= 0, "reattach: core placement incomplete");
    pairs.push_back({oc.to_orig[i], core_image[i]});
    used[core_image[i]] = 1;
  }
  Vertex next = 0;
  for (Vertex v : oc.isolated) {
    while (next < n_g && used[next]) ++next;
    require(next < n_g, "reattach: ran out of host vertices");
    pairs.push_back({v, next});
    used[next] = 1;
  }
  return Mapping(std::move(pairs));
}

// Assign every still-unplaced core vertex the smallest free host vertex.
inline void fill_rest(std::vector<Vertex>& image, int n_g) {
  std::vector<char> used(n_g, 0);
  for (Vertex im : image)
    if (im >= 0) used[im] = 1;
  Vertex next = 0;
  for (auto& im : image) {
    if (im >= 0) continue;
    while (next < n_g && used[next]) ++next;
    require(next < n_g, "placement ran out of host vertices");
    im = next;
    used[next] = 1;
  }
}

inline std::vector<std::vector<Vertex>> component_members(const Graph& g) {
  ComponentInfo info = components(g);
  std::vector<std::vector<Vertex>> out(info.count);
  for (Vertex v = 0; v < g.n(); ++v) out[info.id[v]].push_back(v);
  return out;
}

inline Graph with_extra_edges(const Graph& g, std::vector<VertexPair> extra) {
  for (auto& e : extra) e = ordered(e.first, e.second);
  std::vector<VertexPair> edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(g.n(), std::move(edges));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// k = 1
// ---------------------------------------------------------------------------

// Counting characterization: writing H~ for the overlay with isolated
// vertices dropped, a placement making the superposition connected exists iff
// |V(H)| <= |V(G)|, c(G) <= |V(H~)| - c(H~) + 1, and additionally
// i(G) <= |V(H~)| - c(H~) when H~ is disconnected. An edgeless overlay
// requires G to be connected already.
inline bool feasible_connect(const Graph& g, const Graph& h) {
  if (h.n() > g.n()) return false;
  detail::OverlayCore oc = detail::split_overlay(h);
  GraphStats gs = stats(g);
  if (oc.core.n() == 0) return gs.components <= 1;
  int ch = components(oc.core).count;
  if (gs.components > oc.core.n() - ch + 1) return false;
  if (ch == 1) return true;
  return gs.isolated <= oc.core.n() - ch;
}

inline std::optional<Mapping> construct_connect(const Graph& g, const Graph& h) {
  if (!feasible_connect(g, h)) return std::nullopt;
  detail::OverlayCore oc = detail::split_overlay(h);
  const Graph& hc = oc.core;
  std::vector<Vertex> image(hc.n(), -1);

  auto gcomp = detail::component_members(g);
  if (hc.n() > 0) {
    auto hcomp = detail::component_members(hc);
    const int r = static_cast<int>(hcomp.size());
    std::vector<Vertex> iso;
    for (Vertex v = 0; v < g.n(); ++v)
      if (g.degree(v) == 0) iso.push_back(v);
    const int ig = static_cast<int>(iso.size());

    if (r == 1) {
      // One core vertex anchors each host component; the rest are slotted by
      // fill_rest. The core is connected, so the anchors tie everything up.
      for (size_t c = 0; c < gcomp.size(); ++c) image[c] = gcomp[c][0];
    } else if (ig == hc.n() - r) {
      // Every non-anchor core vertex is needed on an isolated host vertex.
      // Feasibility forces the host to be "one real component plus isolated
      // vertices"; anchors go into the real component.
      int big = -1;
      for (size_t c = 0; c < gcomp.size(); ++c) {
        if (gcomp[c].size() < 2) continue;
        detail::require(big < 0, "connect: several non-trivial host components");
        big = static_cast<int>(c);
      }
      detail::require(big >= 0, "connect: no non-trivial host component");
      size_t big_at = 0, iso_at = 0;
      for (int j = 0; j < r; ++j) {
        image[hcomp[j][0]] = gcomp[big][big_at++];
        for (size_t idx = 1; idx < hcomp[j].size(); ++idx)
          image[hcomp[j][idx]] = iso[iso_at++];
      }
      detail::require(iso_at == iso.size(), "connect: isolated host saturation mismatch");
    } else {
      // ig < |V(core)| - r. Saturate the isolated host vertices with whole
      // overlay components (keeping one anchor spare each) up to a pivot
      // component that still has >= 2 free vertices, then chain the
      // non-trivial host components through the remaining overlay components.
      int pivot = -1;
      long long prefix = 0;
      for (int j = 0; j < r; ++j) {
        prefix += static_cast<long long>(hcomp[j].size());
        if (prefix - (j + 1) > ig) {
          pivot = j;
          break;
        }
      }
      detail::require(pivot >= 0, "connect: no saturating overlay prefix");
      size_t iso_at = 0;
      for (int j = 0; j < pivot; ++j)
        for (size_t idx = 1; idx < hcomp[j].size(); ++idx)
          image[hcomp[j][idx]] = iso[iso_at++];
      size_t pivot_used = 0;
      while (iso_at < iso.size()) image[hcomp[pivot][pivot_used++]] = iso[iso_at++];
      detail::require(hcomp[pivot].size() - pivot_used >= 2,
                      "connect: pivot component exhausted");

      std::vector<int> bigs;
      for (size_t c = 0; c < gcomp.size(); ++c)
        if (gcomp[c].size() >= 2) bigs.push_back(static_cast<int>(c));
      const int s = static_cast<int>(bigs.size());
      detail::require(s >= 1, "connect: no non-trivial host component");

      // Next two free vertices of an overlay component, in ascending order.
      auto take_two = [&](int j) {
        std::pair<Vertex, Vertex> out{-1, -1};
        for (Vertex x : hcomp[j]) {
          if (image[x] >= 0) continue;
          if (out.first < 0)
            out.first = x;
          else if (out.second < 0) {
            out.second = x;
            break;
          }
        }
        detail::require(out.second >= 0, "connect: chain component too small");
        return out;
      };

      if (s - 1 <= r - pivot - 1) {
        // Enough overlay components from the pivot onwards to link the
        // non-trivial host components into one chain.
        for (int i = 0; i + 1 < s; ++i) {
          auto [a, b] = take_two(pivot + i);
          image[a] = gcomp[bigs[i]][0];
          image[b] = gcomp[bigs[i + 1]][1];
        }
      } else {
        // Chain as many host components as overlay components allow, then
        // hook each remaining host component with a single leftover vertex
        // (its overlay component is already anchored on the chain).
        for (int j = pivot; j < r; ++j) {
          int t = j - pivot;
          auto [a, b] = take_two(j);
          image[a] = gcomp[bigs[t]][0];
          image[b] = gcomp[bigs[t + 1]][1];
        }
        int next_big = r - pivot + 1;
        for (int j = pivot; j < r && next_big < s; ++j) {
          for (Vertex x : hcomp[j]) {
            if (image[x] >= 0) continue;
            image[x] = gcomp[bigs[next_big]][0];
            if (++next_big >= s) break;
          }
        }
        detail::require(next_big == s, "connect: not enough spare overlay vertices");
      }
    }
  }

  detail::fill_rest(image, g.n());
  Mapping phi = detail::reattach(oc, image, g.n());
  detail::require(is_k_edge_connected(superpose(g, h, phi), 1),
                  "constructed superposition is not connected");
  return phi;
}

// ---------------------------------------------------------------------------
// k = 2
// ---------------------------------------------------------------------------

// G = K_{1,n}: one center of degree n, n vertices of degree 1 and no other
// edges. K_2 counts as K_{1,1}.
inline bool is_star(const Graph& g) {
  int n = g.n() - 1;
  if (n < 1 || g.m() != n) return false;
  int centers = 0, leaves = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == n)
      ++centers;
    else if (g.degree(v) == 1)
      ++leaves;
  }
  if (n == 1) return centers == 2;  // K_2: both endpoints qualify as center
  return centers == 1 && leaves == n;
}

inline bool is_matching_graph(const Graph& g) {
  if (g.n() == 0) return false;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) != 1) return false;
  return true;
}

// One representative per pendant block, pairwise nonadjacent: the smallest
// vertex not incident to the attaching bridge, or the only vertex of a
// trivial block. Ascending order.
inline std::vector<Vertex> pendant_representatives(const Graph& g) {
  if (g.n() == 2 && g.m() == 1)
    throw std::invalid_argument("pendant_representatives: host is a single edge");
  BlockDecomposition d = block_decomposition(g);  // rejects disconnected hosts
  if (d.pendant_blocks.empty())
    throw std::invalid_argument("pendant_representatives: host is 2-edge-connected");
  std::vector<Vertex> reps;
  for (int b : d.pendant_blocks) {
    const auto& blk = d.blocks[b];
    if (blk.size() == 1) {
      reps.push_back(blk[0]);
      continue;
    }
    Vertex inside = d.attach[b]->first;
    for (Vertex v : blk)
      if (v != inside) {
        reps.push_back(v);
        break;
      }
  }
  std::sort(reps.begin(), reps.end());
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j)
      detail::require(!g.has_edge(reps[i], reps[j]), "pendant representatives are adjacent");
  return reps;
}

// Writing H~ for the overlay with isolated vertices dropped: feasible iff
// |V(H)| <= |V(G)| and either G is already 2-edge-connected, or
// p(G) <= |V(H~)| and the instance is not the exceptional family
// "G = K_{1,n} with n odd and H~ a disjoint union of single edges".
inline bool feasible_2connect(const Graph& g, const Graph& h) {
  if (!is_connected(g)) throw std::invalid_argument("feasible_2connect: host is disconnected");
  if (h.n() > g.n()) return false;
  if (is_k_edge_connected(g, 2)) return true;
  detail::OverlayCore oc = detail::split_overlay(h);
  int p = static_cast<int>(block_decomposition(g).pendant_blocks.size());
  if (p > oc.core.n()) return false;
  if (is_star(g) && (g.n() - 1) % 2 == 1 && is_matching_graph(oc.core)) return false;
  return true;
}

namespace detail {

// One inductive placement step: choose |take| representatives so that mapping
// a connected overlay component onto them merges exactly their pendant blocks
// and leaves every other pendant block pendant. Requires take == l or
// take <= l - 2 where l = reps.size(). Returns the chosen targets ascending.
inline std::vector<Vertex> choose_targets(const Graph& g_cur, const std::vector<Vertex>& reps,
                                          int take) {
  const int l = static_cast<int>(reps.size());
  if (take == l) return reps;
  require(take <= l - 2 && take >= 2, "placement step: bad target count");

  // Tree of blocks joined by bridges; pendant blocks are its leaves.
  BlockDecomposition d = block_decomposition(g_cur);
  const int nb = static_cast<int>(d.blocks.size());
  std::vector<std::vector<int>> tree(nb);
  for (const auto& [u, v] : d.bridges) {
    tree[d.block_of[u]].push_back(d.block_of[v]);
    tree[d.block_of[v]].push_back(d.block_of[u]);
  }
  std::vector<int> leaf_of_rep(l);
  for (int i = 0; i < l; ++i) {
    leaf_of_rep[i] = d.block_of[reps[i]];
    require(d.is_pendant(leaf_of_rep[i]), "placement step: representative lost its pendant block");
  }

  // Try endpoint pairs (s, t) ascending; accept when two other representative
  // leaves end up in distinct components after deleting the (s, t) tree path.
  for (int si = 0; si < l; ++si) {
    for (int ti = si + 1; ti < l; ++ti) {
      std::vector<int> parent(nb, -2);
      std::vector<int> queue{leaf_of_rep[si]};
      parent[leaf_of_rep[si]] = -1;
      for (size_t qi = 0; qi < queue.size(); ++qi)
        for (int nb2 : tree[queue[qi]])
          if (parent[nb2] == -2) {
            parent[nb2] = queue[qi];
            queue.push_back(nb2);
          }
      std::vector<char> on_path(nb, 0);
      for (int b = leaf_of_rep[ti]; b >= 0; b = parent[b]) on_path[b] = 1;

      // Component labels of the tree minus the path.
      std::vector<int> comp(nb, -1);
      int ncomp = 0;
      for (int b = 0; b < nb; ++b) {
        if (on_path[b] || comp[b] >= 0) continue;
        comp[b] = ncomp++;
        std::vector<int> q2{b};
        for (size_t qi = 0; qi < q2.size(); ++qi)
          for (int nb2 : tree[q2[qi]])
            if (!on_path[nb2] && comp[nb2] < 0) {
              comp[nb2] = comp[b];
              q2.push_back(nb2);
            }
      }
      int wi = -1, wj = -1;
      for (int i = 0; i < l && wj < 0; ++i) {
        if (i == si || i == ti || on_path[leaf_of_rep[i]]) continue;
        if (wi < 0)
          wi = i;
        else if (comp[leaf_of_rep[i]] != comp[leaf_of_rep[wi]])
          wj = i;
      }
      if (wj < 0) continue;

      std::vector<Vertex> targets{reps[si], reps[ti]};
      for (int i = 0; i < l && static_cast<int>(targets.size()) < take; ++i)
        if (i != si && i != ti && i != wi && i != wj) targets.push_back(reps[i]);
      require(static_cast<int>(targets.size()) == take, "placement step: not enough targets");
      std::sort(targets.begin(), targets.end());
      return targets;
    }
  }
  throw std::logic_error("placement step: no separating endpoint pair exists");
}

// Map the given overlay components (vertex lists ascending, every size >= 2,
// total size == reps.size()) onto the representatives one component at a
// time, checking after each step that exactly the consumed pendant blocks
// disappeared. Fills `image` (core-indexed) and returns the final host.
inline Graph map_components_onto_reps(const Graph& g, const Graph& hc,
                                      std::vector<Vertex> reps,
                                      const std::vector<std::vector<Vertex>>& comps,
                                      std::vector<Vertex>& image) {
  Graph cur = g;
  for (const auto& comp : comps) {
    std::vector<Vertex> targets = choose_targets(cur, reps, static_cast<int>(comp.size()));
    for (size_t i = 0; i < comp.size(); ++i) image[comp[i]] = targets[i];

    std::vector<VertexPair> extra;
    for (size_t i = 0; i < comp.size(); ++i)
      for (size_t j = i + 1; j < comp.size(); ++j)
        if (hc.has_edge(comp[i], comp[j])) extra.push_back({image[comp[i]], image[comp[j]]});
    cur = with_extra_edges(cur, std::move(extra));

    std::vector<Vertex> survivors;
    for (Vertex r : reps)
      if (!std::binary_search(targets.begin(), targets.end(), r)) survivors.push_back(r);

    if (survivors.empty()) {
      require(is_k_edge_connected(cur, 2), "superposition failed to become 2-edge-connected");
    } else {
      BlockDecomposition dd = block_decomposition(cur);
      require(dd.pendant_blocks.size() == survivors.size(),
              "pendant blocks deviated after a placement step");
      std::vector<int> seen;
      for (Vertex r : survivors) {
        require(dd.is_pendant(dd.block_of[r]), "surviving representative lost its pendant block");
        seen.push_back(dd.block_of[r]);
      }
      std::sort(seen.begin(), seen.end());
      require(std::adjacent_find(seen.begin(), seen.end()) == seen.end(),
              "surviving representatives share a block");
    }
    reps = std::move(survivors);
  }
  require(reps.empty(), "placement left representatives unconsumed");
  return cur;
}

// Connected prefix of a component: DFS from its smallest vertex, neighbors
// ascending, first `take` visited vertices; returned ascending.
inline std::vector<Vertex> connected_prefix(const Graph& hc, const std::vector<Vertex>& comp,
                                            int take) {
  std::vector<char> in_comp(hc.n(), 0), visited(hc.n(), 0);
  for (Vertex v : comp) in_comp[v] = 1;
  std::vector<Vertex> out, stack{comp[0]};
  visited[comp[0]] = 1;
  while (!stack.empty() && static_cast<int>(out.size()) < take) {
    Vertex v = stack.back();
    stack.pop_back();
    out.push_back(v);
    const auto& nb = hc.neighbors(v);
    for (auto it = nb.rbegin(); it != nb.rend(); ++it)
      if (in_comp[*it] && !visited[*it]) {
        visited[*it] = 1;
        stack.push_back(*it);
      }
  }
  require(static_cast<int>(out.size()) == take, "connected prefix: component too small");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline std::optional<Mapping> construct_2connect(const Graph& g, const Graph& h) {
  if (!feasible_2connect(g, h)) return std::nullopt;
  detail::OverlayCore oc = detail::split_overlay(h);
  const Graph& hc = oc.core;
  std::vector<Vertex> image(hc.n(), -1);

  if (!is_k_edge_connected(g, 2)) {
    std::vector<Vertex> reps = pendant_representatives(g);
    const int l = static_cast<int>(reps.size());
    Graph cur = g;

    if (is_matching_graph(hc)) {
      std::vector<VertexPair> edges = hc.edges();
      size_t next_edge = 0;
      if (l % 2 == 1) {
        // Odd pendant count: spend one overlay edge on a (representative,
        // interior vertex) pair. The interior vertex must avoid every pendant
        // block and must not already be adjacent to the representative, so
        // the added edge strictly merges blocks; one exists for every
        // connected non-star host (searched exhaustively below).
        BlockDecomposition d = block_decomposition(g);
        Vertex vstar = -1, u = -1;
        for (int c = 0; c < l && vstar < 0; ++c) {
          for (int a = 0; a < l && vstar < 0; ++a) {
            if (a == c) continue;
            for (int b = a + 1; b < l && vstar < 0; ++b) {
              if (b == c) continue;
              // Shortest path between two other representatives, BFS with
              // ascending neighbor order for determinism.
              std::vector<int> parent(g.n(), -2);
              std::vector<Vertex> queue{reps[a]};
              parent[reps[a]] = -1;
              for (size_t qi = 0; qi < queue.size(); ++qi)
                for (Vertex w : g.neighbors(queue[qi]))
                  if (parent[w] == -2) {
                    parent[w] = queue[qi];
                    queue.push_back(w);
                  }
              std::vector<Vertex> path;
              for (Vertex w = reps[b]; w >= 0; w = parent[w]) path.push_back(w);
              std::reverse(path.begin(), path.end());  // runs reps[a] -> reps[b]
              for (Vertex w : path) {
                if (d.is_pendant(d.block_of[w]) || g.has_edge(reps[c], w)) continue;
                vstar = reps[c];
                u = w;
                break;
              }
            }
          }
        }
        detail::require(vstar >= 0, "matching overlay: no interior attachment point");
        auto [x, y] = edges[next_edge++];
        image[x] = vstar;
        image[y] = u;
        cur = detail::with_extra_edges(cur, {{vstar, u}});
        reps.erase(std::find(reps.begin(), reps.end(), vstar));

        BlockDecomposition dd = block_decomposition(cur);
        detail::require(dd.pendant_blocks.size() == reps.size(),
                        "matching overlay: pendant blocks deviated");
        for (Vertex rcheck : reps)
          detail::require(dd.is_pendant(dd.block_of[rcheck]),
                          "matching overlay: representative lost its pendant block");
      }
      std::vector<std::vector<Vertex>> comps;
      for (size_t i = 0; i < reps.size() / 2; ++i) {
        auto [x, y] = edges[next_edge++];
        comps.push_back({x, y});
      }
      detail::map_components_onto_reps(cur, hc, reps, comps, image);
    } else {
      // General overlay: select induced pieces with exactly l vertices, every
      // piece of size >= 2, preferring whole components size-ascending.
      auto members = detail::component_members(hc);
      std::sort(members.begin(), members.end(),
                [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a[0] < b[0];
                });
      int s = -1;
      long long prefix = 0;
      for (size_t i = 0; i < members.size(); ++i) {
        prefix += static_cast<long long>(members[i].size());
        if (prefix >= l) {
          s = static_cast<int>(i);
          break;
        }
      }
      detail::require(s >= 0, "general overlay: not enough vertices");
      long long q = prefix - static_cast<long long>(members[s].size());

      std::vector<std::vector<Vertex>> comps(members.begin(), members.begin() + s);
      if (prefix == l) {
        comps.push_back(members[s]);
      } else if (l - q >= 2) {
        comps.push_back(detail::connected_prefix(hc, members[s], static_cast<int>(l - q)));
      } else {
        // l - q == 1: the prefix overshoots by one. Rebalance with a piece of
        // a component that has >= 3 vertices.
        detail::require(s >= 1, "general overlay: unexpected prefix split");
        if (members[s - 1].size() == 2) {
          int i3 = -1;
          for (size_t i = 0; i < members.size(); ++i)
            if (members[i].size() >= 3) {
              i3 = static_cast<int>(i);
              break;
            }
          detail::require(i3 >= 0, "general overlay: no component with 3 vertices");
          comps.pop_back();  // drop the last whole size-2 component
          comps.push_back(detail::connected_prefix(hc, members[i3], 3));
        } else {
          int t = static_cast<int>(members[s - 1].size());
          comps.pop_back();
          comps.push_back(detail::connected_prefix(hc, members[s - 1], t - 1));
          comps.push_back(detail::connected_prefix(hc, members[s], 2));
        }
      }
      detail::map_components_onto_reps(cur, hc, reps, comps, image);
    }
  }

  detail::fill_rest(image, g.n());
  Mapping phi = detail::reattach(oc, image, g.n());
  detail::require(is_k_edge_connected(superpose(g, h, phi), 2),
                  "constructed superposition is not 2-edge-connected");
  return phi;
}

}  // namespace sca
