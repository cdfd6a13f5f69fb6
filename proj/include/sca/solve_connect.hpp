#pragma once

// Exact minimum-weight placement making the superposition connected. The
// search fixes the lexicographically smallest minimum vertex cover X of the
// overlay core, tries every anchor extension Y with |Y| <= 2(|X|-1) and every
// anchored placement psi whose image lands in a single component of the
// partial superposition, then finishes each branch with one saturating
// assignment. Branches are independent pure computations; the global winner
// is the (weight, mapping) minimum, so the result does not depend on
// evaluation order or thread count.

#include <atomic>
#include <thread>

#include "sca/connectivity.hpp"
#include "sca/cover.hpp"
#include "sca/matching.hpp"
#include "sca/unweighted.hpp"

namespace sca {

enum class AnchorMode { kComponent, kBlock };

// A branch of the search: the cover X, the extension Y, the leftover
// independent set Z, and the anchored placement psi of X u Y together with
// the weight its internal overlay edges already pay.
struct AnchorContext {
  std::vector<Vertex> x;
  std::vector<Vertex> y;
  std::vector<Vertex> z;
  Mapping psi;
  Weight anchor_weight = 0;

  std::vector<Vertex> anchors() const {
    std::vector<Vertex> a = x;
    a.insert(a.end(), y.begin(), y.end());
    std::sort(a.begin(), a.end());
    return a;
  }
};

// Components of the partial superposition: f0 holds the anchor images,
// others are the remaining components in ascending order of smallest vertex.
struct ComponentSplit {
  std::vector<Vertex> f0;
  std::vector<std::vector<Vertex>> others;
};

// Every Y subseteq V(H)\X with |Y| <= max(0, 2(|X|-1)), empty set first,
// then by size and lexicographically within one size.
inline std::vector<std::vector<Vertex>> enumerate_anchor_sets(const Graph& h,
                                                              const std::vector<Vertex>& x) {
  std::vector<char> in_x(h.n(), 0);
  for (Vertex v : x) in_x[v] = 1;
  if (!detail::covers(h, in_x)) throw std::invalid_argument("anchor sets: not a vertex cover");

  std::vector<Vertex> rest;
  for (Vertex v = 0; v < h.n(); ++v)
    if (!in_x[v]) rest.push_back(v);

  int limit = std::max(0, 2 * (static_cast<int>(x.size()) - 1));
  limit = std::min<int>(limit, static_cast<int>(rest.size()));

  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> pick;
  auto combine = [&](auto&& self, int size, size_t from) -> void {
    if (static_cast<int>(pick.size()) == size) {
      out.push_back(pick);
      return;
    }
    for (size_t i = from; i < rest.size(); ++i) {
      pick.push_back(rest[i]);
      self(self, size, i + 1);
      pick.pop_back();
    }
  };
  for (int size = 0; size <= limit; ++size) combine(combine, size, 0);
  return out;
}

namespace detail {

// G plus the psi-images of the overlay edges inside the anchor set; `image`
// is aligned with the sorted anchor list.
inline Graph anchored_superposition(const Graph& g, const Graph& h,
                                    const std::vector<Vertex>& anchors,
                                    const std::vector<Vertex>& image) {
  std::vector<int> pos(h.n(), -1);
  for (size_t i = 0; i < anchors.size(); ++i) pos[anchors[i]] = static_cast<int>(i);
  std::vector<VertexPair> extra;
  for (auto [u, v] : h.edges())
    if (pos[u] >= 0 && pos[v] >= 0) extra.push_back({image[pos[u]], image[pos[v]]});
  return with_extra_edges(g, std::move(extra));
}

inline bool anchors_together(const Graph& f_prime, const std::vector<Vertex>& image,
                             AnchorMode mode) {
  if (image.empty()) return true;
  std::vector<int> id;
  if (mode == AnchorMode::kComponent) {
    id = components(f_prime).id;
  } else {
    id = components_without(f_prime, bridges(f_prime));
  }
  for (Vertex v : image)
    if (id[v] != id[image[0]]) return false;
  return true;
}

// Enumerates injective image tuples for the sorted anchor list in ascending
// lexicographic order, from `depth` on, and reports the candidates whose
// partial superposition keeps all anchor images together. The filter
// recomputes the component structure of F' for each candidate.
template <typename Fn>
void enumerate_images(const Graph& g, const Graph& h, const std::vector<Vertex>& anchors,
                      AnchorMode mode, std::vector<Vertex>& image, std::vector<char>& used,
                      size_t depth, Fn&& fn) {
  if (depth == anchors.size()) {
    Graph f_prime = anchored_superposition(g, h, anchors, image);
    if (anchors_together(f_prime, image, mode)) fn(image, f_prime);
    return;
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (used[v]) continue;
    used[v] = 1;
    image[depth] = v;
    enumerate_images(g, h, anchors, mode, image, used, depth + 1, fn);
    used[v] = 0;
  }
}

}  // namespace detail

// Every injective psi: anchors -> V(G) keeping psi(anchors) inside one
// connected component (kComponent) or one bridgeless block (kBlock) of
// G "+" psi(H[anchors]), in ascending mapping order.
inline std::vector<Mapping> enumerate_anchor_embeddings(const Graph& g, const Graph& h,
                                                        std::vector<Vertex> anchors,
                                                        AnchorMode mode) {
  std::sort(anchors.begin(), anchors.end());
  if (static_cast<int>(anchors.size()) > g.n()) return {};
  std::vector<Mapping> out;
  std::vector<Vertex> image(anchors.size(), -1);
  std::vector<char> used(g.n(), 0);
  detail::enumerate_images(g, h, anchors, mode, image, used, 0,
                           [&](const std::vector<Vertex>& img, const Graph&) {
                             std::vector<VertexPair> pairs;
                             for (size_t i = 0; i < anchors.size(); ++i)
                               pairs.push_back({anchors[i], img[i]});
                             out.emplace_back(std::move(pairs));
                           });
  return out;
}

inline AnchorContext build_anchor_context(const Graph& h, const std::vector<Vertex>& x,
                                          const std::vector<Vertex>& y, const Mapping& psi,
                                          const WeightFn& omega) {
  AnchorContext ctx;
  ctx.x = x;
  ctx.y = y;
  std::sort(ctx.x.begin(), ctx.x.end());
  std::sort(ctx.y.begin(), ctx.y.end());
  ctx.psi = psi;

  std::vector<char> in_x(h.n(), 0);
  for (Vertex v : ctx.x) in_x[v] = 1;
  if (!detail::covers(h, in_x)) throw std::invalid_argument("anchor context: X is not a cover");

  if (static_cast<int>(ctx.y.size()) > std::max(0, 2 * (static_cast<int>(ctx.x.size()) - 1)))
    throw std::invalid_argument("anchor context: extension larger than 2(|X|-1)");
  std::vector<char> anchored = in_x;
  int n_anchor = static_cast<int>(ctx.x.size());
  for (Vertex v : ctx.y) {
    if (anchored[v]) throw std::invalid_argument("anchor context: X and Y overlap");
    anchored[v] = 1;
    ++n_anchor;
  }
  if (psi.size() != n_anchor)
    throw std::invalid_argument("anchor context: psi domain is not X u Y");
  for (Vertex v = 0; v < h.n(); ++v) {
    if (anchored[v])
      psi.at(v);  // throws when psi misses an anchor
    else
      ctx.z.push_back(v);
  }

  for (auto [u, v] : h.edges())
    if (anchored[u] && anchored[v])
      ctx.anchor_weight = checked_add(ctx.anchor_weight, omega(psi.at(u), psi.at(v)));
  return ctx;
}

inline ComponentSplit split_components(const Graph& f_prime,
                                       const std::vector<Vertex>& anchor_images) {
  detail::require(!anchor_images.empty(), "component split: no anchors");
  ComponentInfo info = components(f_prime);
  int id0 = info.id[anchor_images[0]];
  for (Vertex v : anchor_images)
    detail::require(info.id[v] == id0, "component split: anchors not together");

  ComponentSplit split;
  std::vector<int> slot(info.count, -1);
  for (Vertex v = 0; v < f_prime.n(); ++v) {
    int c = info.id[v];
    if (c == id0) {
      split.f0.push_back(v);
      continue;
    }
    if (slot[c] < 0) {
      slot[c] = static_cast<int>(split.others.size());
      split.others.emplace_back();
    }
    split.others[slot[c]].push_back(v);
  }
  return split;
}

namespace detail {

// The auxiliary assignment instance of one branch. Side A holds the host
// vertices outside the anchor image and must be saturated; side B holds Z
// followed by padding slots, |F_0| - |anchors| of them wired to the anchor
// component and |F_i| - 1 to each other component, all at cost `big`.
struct BranchAux {
  AuxBipartite aux;
  std::vector<Vertex> a_vertex;  // side A index -> host vertex
  std::vector<Vertex> z_vertex;  // first |Z| side-B indices -> overlay vertex
  std::vector<int> comp_of_a;    // side A index -> 0 for F_0, i for F_i
  int r = 0;
};

// Weight paid when z goes to host vertex v: omega between v and the image of
// every overlay neighbor of z, whether or not the host already has that edge.
inline Weight cost_of_placing(const Graph& h, const Mapping& psi, Vertex z, Vertex v,
                              const WeightFn& omega) {
  Weight w = 0;
  for (Vertex x : h.neighbors(z)) w = checked_add(w, omega(psi.at(x), v));
  return w;
}

// nullopt when more components than free overlay vertices remain: no
// extension of psi can connect them all.
inline std::optional<BranchAux> build_branch_aux(const Graph& g, const Graph& h,
                                                 const Graph& f_prime, const AnchorContext& ctx,
                                                 const WeightFn& omega) {
  std::vector<Vertex> anchor_images = ctx.psi.image();
  for (Vertex v : anchor_images)
    if (v >= g.n()) throw std::invalid_argument("extension: psi image outside the host");
  ComponentSplit split = split_components(f_prime, anchor_images);
  BranchAux b;
  b.r = static_cast<int>(split.others.size());
  if (b.r > static_cast<int>(ctx.z.size())) return std::nullopt;

  std::vector<char> is_anchor_image(g.n(), 0);
  for (Vertex v : anchor_images) is_anchor_image[v] = 1;
  std::vector<int> comp_of(g.n(), 0);
  for (int i = 0; i < b.r; ++i)
    for (Vertex v : split.others[i]) comp_of[v] = i + 1;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (is_anchor_image[v]) continue;
    b.a_vertex.push_back(v);
    b.comp_of_a.push_back(comp_of[v]);
  }
  b.z_vertex = ctx.z;

  int na = static_cast<int>(b.a_vertex.size());
  int nz = static_cast<int>(b.z_vertex.size());
  std::vector<Weight> cost(static_cast<size_t>(nz) * std::max(na, 1), 0);
  Weight max_cost = 0;
  for (int zi = 0; zi < nz; ++zi)
    for (int ai = 0; ai < na; ++ai) {
      Weight w = cost_of_placing(h, ctx.psi, b.z_vertex[zi], b.a_vertex[ai], omega);
      cost[static_cast<size_t>(zi) * na + ai] = w;
      max_cost = std::max(max_cost, w);
    }
  Weight big = checked_add(max_cost, 1);

  auto pad_size = [&](int i) {
    return i == 0 ? static_cast<int>(split.f0.size()) - static_cast<int>(anchor_images.size())
                  : static_cast<int>(split.others[i - 1].size()) - 1;
  };
  int pad = 0;
  for (int i = 0; i <= b.r; ++i) pad += pad_size(i);

  b.aux = AuxBipartite(na, nz + pad, big);
  for (int ai = 0; ai < na; ++ai)
    for (int zi = 0; zi < nz; ++zi)
      b.aux.add(ai, zi, cost[static_cast<size_t>(zi) * na + ai]);
  int next = nz;
  for (int i = 0; i <= b.r; ++i)
    for (int s = 0; s < pad_size(i); ++s, ++next)
      for (int ai = 0; ai < na; ++ai)
        if (b.comp_of_a[ai] == i) b.aux.add(ai, next, big);
  return b;
}

// Both saturation claims the reduction rests on, checked on every branch:
// each z ends up matched, and each component beyond the anchor one receives
// at least one z.
inline void check_saturation(const BranchAux& b, const std::vector<int>& match_of_a) {
  int nz = static_cast<int>(b.z_vertex.size());
  std::vector<char> z_hit(nz, 0);
  std::vector<char> comp_hit(b.r + 1, 0);
  for (size_t ai = 0; ai < b.a_vertex.size(); ++ai) {
    int col = match_of_a[ai];
    if (col >= 0 && col < nz) {
      z_hit[col] = 1;
      comp_hit[b.comp_of_a[ai]] = 1;
    }
  }
  for (int zi = 0; zi < nz; ++zi) require(z_hit[zi], "extension: an overlay vertex went unmatched");
  for (int i = 1; i <= b.r; ++i)
    require(comp_hit[i], "extension: a component received no overlay vertex");
}

// Optimal branch value R + f(M') without the lexicographic refinement; used
// in the first pass where only values compete. kInfiniteWeight when the
// branch cannot connect everything.
inline Weight branch_value(const Graph& g, const Graph& h, const Graph& f_prime,
                           const AnchorContext& ctx, const WeightFn& omega) {
  auto b = build_branch_aux(g, h, f_prime, ctx, omega);
  if (!b) return kInfiniteWeight;
  DenseAssignment d = densify(b->aux, Saturate::kLeft);
  std::vector<char> row_active(d.rows, 1), col_active(d.cols, 1);
  auto match = hungarian(d, row_active, col_active);
  if (!match) return kInfiniteWeight;
  check_saturation(*b, *match);

  Weight total = ctx.anchor_weight;
  int nz = static_cast<int>(b->z_vertex.size());
  for (int ai = 0; ai < d.rows; ++ai)
    if ((*match)[ai] < nz)
      total = checked_add(total, static_cast<Weight>(d.at(ai, (*match)[ai])));
  return total;
}

}  // namespace detail

// Completes one branch: solves the auxiliary assignment, reads the matched
// z placements off the matching, and returns psi extended by them together
// with the branch weight R + f(M'). nullopt when the branch cannot connect
// everything.
inline std::optional<Solution> extend_by_matching(const Graph& g, const Graph& h,
                                                  const AnchorContext& ctx,
                                                  const WeightFn& omega) {
  std::vector<Vertex> anchors = ctx.anchors();
  detail::require(!anchors.empty(), "extension: empty anchor set");
  std::vector<Vertex> image;
  for (Vertex a : anchors) image.push_back(ctx.psi.at(a));
  Graph f_prime = detail::anchored_superposition(g, h, anchors, image);

  auto b = detail::build_branch_aux(g, h, f_prime, ctx, omega);
  if (!b) return std::nullopt;
  auto m = min_weight_saturating_matching(b->aux, Saturate::kLeft);
  if (!m) return std::nullopt;

  std::vector<int> match_of_a(b->a_vertex.size(), -1);
  for (auto [l, r] : m->pairs) match_of_a[l] = r;
  detail::check_saturation(*b, match_of_a);

  Weight total = ctx.anchor_weight;
  std::vector<VertexPair> pairs = ctx.psi.pairs();
  int nz = static_cast<int>(b->z_vertex.size());
  for (size_t ai = 0; ai < b->a_vertex.size(); ++ai) {
    int col = match_of_a[ai];
    if (col < 0 || col >= nz) continue;
    total = checked_add(
        total, detail::cost_of_placing(h, ctx.psi, b->z_vertex[col], b->a_vertex[ai], omega));
    pairs.push_back({b->z_vertex[col], b->a_vertex[ai]});
  }
  return Solution{Mapping(std::move(pairs)), total};
}

namespace detail {

// Runs fn(job, slot) for job = 0..jobs-1 across workers with stable slot
// ids; fn must be safe to call concurrently for distinct slots.
template <typename Fn>
void run_jobs(int jobs, int workers, Fn&& fn) {
  if (workers <= 1) {
    for (int j = 0; j < jobs; ++j) fn(j, 0);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&](int slot) {
    for (int j = next.fetch_add(1); j < jobs; j = next.fetch_add(1)) fn(j, slot);
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker, i);
  for (auto& t : pool) t.join();
}

// Lowers a shared upper bound. It only ever holds realized branch values, so
// pruning strictly above it cannot drop a branch that ties the optimum.
inline void relax_bound(std::atomic<Weight>& bound, Weight value) {
  Weight cur = bound.load();
  while (value < cur && !bound.compare_exchange_weak(cur, value)) {
  }
}

struct BranchKey {
  int y_index = 0;
  std::vector<Vertex> image;
  bool operator<(const BranchKey& o) const {
    return y_index != o.y_index ? y_index < o.y_index : image < o.image;
  }
};

}  // namespace detail

// Minimum-weight injection phi with G "+" phi(H) connected, or nullopt when
// none exists. Isolated overlay vertices ride along onto the smallest free
// host vertices. Deterministic: among minimum-weight branch solutions the
// lexicographically smallest mapping wins, independent of thread count.
inline std::optional<Solution> solve_connect(const Graph& g, const Graph& h,
                                             const WeightFn& omega, int threads = 1) {
  if (h.n() > g.n()) return std::nullopt;

  detail::OverlayCore oc = detail::split_overlay(h);
  const Graph& hc = oc.core;
  if (hc.n() == 0) {
    if (!is_connected(g)) return std::nullopt;
    return Solution{detail::reattach(oc, {}, g.n()), 0};
  }

  auto x = minimum_vertex_cover(hc);
  detail::require(x.has_value(), "cover search failed");
  std::vector<std::vector<Vertex>> ys = enumerate_anchor_sets(hc, *x);

  std::vector<std::vector<Vertex>> anchors_of(ys.size());
  for (size_t yi = 0; yi < ys.size(); ++yi) {
    anchors_of[yi] = *x;
    anchors_of[yi].insert(anchors_of[yi].end(), ys[yi].begin(), ys[yi].end());
    std::sort(anchors_of[yi].begin(), anchors_of[yi].end());
  }

  // Pass one: price every (Y, psi) branch with a plain assignment solve.
  // Jobs split by the image of the first anchor; each worker keeps the
  // branches achieving its local best so the global tie set survives.
  int jobs = static_cast<int>(ys.size()) * g.n();
  int workers = std::max(1, std::min(threads, jobs));
  std::vector<Weight> local_best(workers, kInfiniteWeight);
  std::vector<std::vector<detail::BranchKey>> local_ties(workers);
  std::atomic<Weight> bound{kInfiniteWeight};

  detail::run_jobs(jobs, workers, [&](int job, int slot) {
    int yi = job / g.n();
    Vertex first = static_cast<Vertex>(job % g.n());
    const std::vector<Vertex>& anchors = anchors_of[yi];
    std::vector<Vertex> image(anchors.size(), -1);
    std::vector<char> used(g.n(), 0);
    image[0] = first;
    used[first] = 1;
    detail::enumerate_images(
        g, hc, anchors, AnchorMode::kComponent, image, used, 1,
        [&](const std::vector<Vertex>& img, const Graph& f_prime) {
          std::vector<VertexPair> psi_pairs;
          for (size_t i = 0; i < anchors.size(); ++i) psi_pairs.push_back({anchors[i], img[i]});
          AnchorContext ctx =
              build_anchor_context(hc, *x, ys[yi], Mapping(std::move(psi_pairs)), omega);
          if (ctx.anchor_weight > bound.load()) return;
          Weight value = detail::branch_value(g, hc, f_prime, ctx, omega);
          if (value == kInfiniteWeight) return;
          detail::relax_bound(bound, value);
          if (value > local_best[slot]) return;
          if (value < local_best[slot]) {
            local_best[slot] = value;
            local_ties[slot].clear();
          }
          local_ties[slot].push_back({yi, img});
        });
  });

  Weight best_value = kInfiniteWeight;
  for (Weight v : local_best) best_value = std::min(best_value, v);
  if (best_value == kInfiniteWeight) return std::nullopt;

  std::vector<detail::BranchKey> ties;
  for (int s = 0; s < workers; ++s)
    if (local_best[s] == best_value)
      ties.insert(ties.end(), local_ties[s].begin(), local_ties[s].end());
  std::sort(ties.begin(), ties.end());

  // Pass two: only tied branches get the full lexicographic matching
  // refinement; the smallest lifted mapping wins.
  std::optional<Solution> best;
  for (const detail::BranchKey& key : ties) {
    const std::vector<Vertex>& anchors = anchors_of[key.y_index];
    std::vector<VertexPair> psi_pairs;
    for (size_t i = 0; i < anchors.size(); ++i) psi_pairs.push_back({anchors[i], key.image[i]});
    AnchorContext ctx =
        build_anchor_context(hc, *x, ys[key.y_index], Mapping(std::move(psi_pairs)), omega);
    auto sol = extend_by_matching(g, hc, ctx, omega);
    detail::require(sol.has_value() && sol->weight == best_value,
                    "refinement lost the branch optimum");
    std::vector<Vertex> core_image(hc.n(), -1);
    for (auto [hv, gv] : sol->phi.pairs()) core_image[hv] = gv;
    Mapping full = detail::reattach(oc, core_image, g.n());
    if (!best || full < best->phi) best = Solution{std::move(full), best_value};
  }

  detail::require(is_connected(superpose(g, h, best->phi)),
                  "solver produced a disconnected superposition");
  detail::require(mapping_weight(h, best->phi, omega) == best->weight,
                  "solver weight certificate mismatch");
  return best;
}

// Budget form: true iff some phi with G "+" phi(H) connected costs at most
// `budget`. Monotone in the budget by construction.
inline bool decide_connect(const Graph& g, const Graph& h, const WeightFn& omega, Weight budget,
                           int threads = 1) {
  auto sol = solve_connect(g, h, omega, threads);
  return sol.has_value() && sol->weight <= budget;
}

}  // namespace sca
