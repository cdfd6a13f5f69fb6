#pragma once

// Exact minimum-weight placement making the superposition 2-edge-connected.
// The search mirrors the connectivity solver: fix the lexicographically
// smallest minimum cover X of the overlay core, try every extension Y and
// every anchored placement psi, now required to land inside one bridgeless
// block of the partial superposition F'. The leftover overlay vertices form
// an independent set whose members fall into false-twin classes with equal
// placement costs, so a dynamic program indexed by per-class counts spreads
// them over the pendant blocks of F'. A pendant block is safe once it
// receives a placement, except that a lone placement on the inner end of
// its attaching bridge collapses into an existing edge when the only
// anchored neighbour of that overlay vertex sits on the outer end; that
// single combination is excluded.

#include "sca/solve_connect.hpp"

namespace sca {

// Pendant-block view of the partial superposition F': f0 is the block
// holding the anchor images, pendants are the pendant blocks away from f0
// (ascending by smallest vertex) with their attaching bridges as
// (inside, outside), and free_zone is every non-anchor host vertex outside
// the pendants. Free-zone placements are unconstrained; each pendant must
// end up with at least one placement.
struct PendantSplit {
  std::vector<Vertex> f0;
  std::vector<std::vector<Vertex>> pendants;
  std::vector<VertexPair> attach;
  std::vector<Vertex> free_zone;
};

inline PendantSplit pendant_split(const Graph& f_prime,
                                  const std::vector<Vertex>& anchor_images) {
  detail::require(!anchor_images.empty(), "pendant split: no anchors");
  BlockDecomposition d = block_decomposition(f_prime);
  int b0 = d.block_of[anchor_images[0]];
  for (Vertex v : anchor_images)
    detail::require(d.block_of[v] == b0, "pendant split: anchors not in one block");

  PendantSplit split;
  split.f0 = d.blocks[b0];
  std::vector<char> in_pendant(f_prime.n(), 0);
  for (int pb : d.pendant_blocks) {
    if (pb == b0) continue;
    split.pendants.push_back(d.blocks[pb]);
    split.attach.push_back(*d.attach[pb]);
    for (Vertex v : d.blocks[pb]) in_pendant[v] = 1;
  }
  std::vector<char> is_anchor_image(f_prime.n(), 0);
  for (Vertex v : anchor_images) is_anchor_image[v] = 1;
  for (Vertex v = 0; v < f_prime.n(); ++v)
    if (!in_pendant[v] && !is_anchor_image[v]) split.free_zone.push_back(v);
  return split;
}

namespace detail {

inline size_t dp_size(const std::vector<int>& radix) {
  size_t n = 1;
  for (int r : radix) n *= static_cast<size_t>(r);
  return n;
}

inline size_t dp_encode(const std::vector<int>& radix, const std::vector<int>& q) {
  size_t idx = 0;
  for (size_t i = 0; i < radix.size(); ++i) idx = idx * radix[i] + q[i];
  return idx;
}

inline std::vector<int> dp_decode(const std::vector<int>& radix, size_t idx) {
  std::vector<int> q(radix.size(), 0);
  for (size_t i = radix.size(); i-- > 0;) {
    q[i] = static_cast<int>(idx % radix[i]);
    idx /= radix[i];
  }
  return q;
}

}  // namespace detail

// One dynamic-programming stage, indexed by how many members of each twin
// class the stage may place. Mixed radix with the leftmost class most
// significant, so ascending index is ascending lexicographic tuple and the
// last entry belongs to the full tuple. back holds the encoded sub-tuple
// the last combine granted to its right operand, -1 before any combine.
struct DpTable {
  std::vector<int> radix;
  std::vector<Weight> value;
  std::vector<int> back;
};

// A branch of the 2-edge-connectivity search with its placement costs
// grouped by false-twin class: twins cost the same everywhere, so tables
// need one cost row per class. class_pin is the psi-image of the class's
// only anchored neighbour, or -1 when the class has several neighbours;
// a pinned class is the one that can collide with an attaching bridge.
struct BlockBranch {
  AnchorContext ctx;
  PendantSplit split;
  std::vector<std::vector<Vertex>> twin_classes;
  std::vector<std::vector<Weight>> class_cost;
  std::vector<Vertex> class_pin;
};

// nullopt when more pendant blocks than free overlay vertices remain: no
// extension of psi can reach them all.
inline std::optional<BlockBranch> build_block_branch(const Graph& g, const Graph& h,
                                                     const Graph& f_prime,
                                                     const AnchorContext& ctx,
                                                     const WeightFn& omega) {
  std::vector<Vertex> anchor_images = ctx.psi.image();
  for (Vertex v : anchor_images)
    if (v >= g.n()) throw std::invalid_argument("block branch: psi image outside the host");

  BlockBranch b;
  b.ctx = ctx;
  b.split = pendant_split(f_prime, anchor_images);
  if (b.split.pendants.size() > ctx.z.size()) return std::nullopt;

  b.twin_classes = false_twin_classes(h, ctx.z);
  std::vector<Vertex> hosts = b.split.free_zone;
  for (const auto& block : b.split.pendants) hosts.insert(hosts.end(), block.begin(), block.end());

  b.class_cost.assign(b.twin_classes.size(), std::vector<Weight>(g.n(), kInfiniteWeight));
  b.class_pin.assign(b.twin_classes.size(), -1);
  for (size_t i = 0; i < b.twin_classes.size(); ++i) {
    Vertex rep = b.twin_classes[i][0];
    for (Vertex v : hosts)
      b.class_cost[i][v] = detail::cost_of_placing(h, ctx.psi, rep, v, omega);
    const auto& nbrs = h.neighbors(rep);
    if (nbrs.size() == 1) b.class_pin[i] = ctx.psi.at(nbrs[0]);
  }
  return b;
}

// The two conditions that make the full superposition 2-edge-connected once
// the anchors share a block: every pendant block receives a placement, and
// a pendant whose only placement sits on the inner end of its attaching
// bridge needs some anchored neighbour of that overlay vertex away from the
// outer end — otherwise the would-be covering edge collapses into the
// bridge itself. Validation helper for candidates produced elsewhere.
inline bool feasibility_conditions(const Graph& h, const AnchorContext& ctx,
                                   const PendantSplit& split, const Mapping& phi) {
  for (size_t i = 0; i < split.pendants.size(); ++i) {
    const auto& block = split.pendants[i];
    auto [inside, outside] = split.attach[i];
    std::vector<Vertex> placed;
    for (Vertex z : ctx.z)
      if (std::find(block.begin(), block.end(), phi.at(z)) != block.end()) placed.push_back(z);
    if (placed.empty()) return false;
    if (placed.size() == 1 && phi.at(placed[0]) == inside) {
      bool covered = false;
      for (Vertex x : h.neighbors(placed[0]))
        if (phi.at(x) != outside) covered = true;
      if (!covered) return false;
    }
  }
  return true;
}

namespace detail {

// Assignment value of placing counts[i] members of each twin class onto
// hosts, all slots of one class sharing its cost row.
inline Weight class_slots_value(const BlockBranch& b, const std::vector<int>& counts,
                                const std::vector<Vertex>& hosts) {
  int slots = 0;
  for (int c : counts) slots += c;
  if (slots == 0) return 0;
  if (slots > static_cast<int>(hosts.size())) return kInfiniteWeight;
  AuxBipartite aux(slots, static_cast<int>(hosts.size()));
  int row = 0;
  for (size_t i = 0; i < counts.size(); ++i)
    for (int s = 0; s < counts[i]; ++s, ++row)
      for (size_t col = 0; col < hosts.size(); ++col)
        aux.add(row, static_cast<int>(col), b.class_cost[i][hosts[col]]);
  return min_weight_saturating_value(aux, Saturate::kLeft);
}

}  // namespace detail

// Cheapest placement of the chosen class members into the free zone; no
// structural condition applies there.
inline Weight alpha0(const BlockBranch& b, const std::vector<int>& q) {
  detail::require(q.size() == b.twin_classes.size(), "alpha0: tuple arity mismatch");
  return detail::class_slots_value(b, q, b.split.free_zone);
}

// Cheapest placement of the chosen class members into pendant block `stage`
// (1-based) that leaves it safely attached: at least one member must land
// there, and a lone member whose only anchored neighbour sits on the outer
// bridge end may not take the inner end.
inline Weight alpha_prime(const BlockBranch& b, int stage, const std::vector<int>& q) {
  detail::require(stage >= 1 && stage <= static_cast<int>(b.split.pendants.size()),
                  "alpha_prime: stage out of range");
  detail::require(q.size() == b.twin_classes.size(), "alpha_prime: tuple arity mismatch");
  const std::vector<Vertex>& block = b.split.pendants[stage - 1];
  int slots = 0;
  for (int c : q) slots += c;
  if (slots == 0 || slots > static_cast<int>(block.size())) return kInfiniteWeight;
  if (slots == 1) {
    size_t cls = 0;
    while (q[cls] == 0) ++cls;
    auto [inside, outside] = b.split.attach[stage - 1];
    bool pinned = b.class_pin[cls] == outside;
    Weight best = kInfiniteWeight;
    for (Vertex v : block) {
      if (pinned && v == inside) continue;
      best = std::min(best, b.class_cost[cls][v]);
    }
    return best;
  }
  // Two or more placements inside one block always cover its bridge.
  return detail::class_slots_value(b, q, block);
}

inline DpTable alpha0_table(const BlockBranch& b) {
  DpTable t;
  for (const auto& cls : b.twin_classes) t.radix.push_back(static_cast<int>(cls.size()) + 1);
  size_t n = detail::dp_size(t.radix);
  t.value.resize(n);
  t.back.assign(n, -1);
  for (size_t idx = 0; idx < n; ++idx) t.value[idx] = alpha0(b, detail::dp_decode(t.radix, idx));
  return t;
}

inline DpTable alpha_prime_table(const BlockBranch& b, int stage) {
  DpTable t;
  for (const auto& cls : b.twin_classes) t.radix.push_back(static_cast<int>(cls.size()) + 1);
  size_t n = detail::dp_size(t.radix);
  t.value.resize(n);
  t.back.assign(n, -1);
  for (size_t idx = 0; idx < n; ++idx)
    t.value[idx] = alpha_prime(b, stage, detail::dp_decode(t.radix, idx));
  return t;
}

// prev covers the stages seen so far, prime the next pendant block; the
// result grants every sub-tuple q'' of q to the new block and keeps the
// cheapest split, ties resolved toward the lexicographically smallest q''.
inline DpTable dp_combine(const DpTable& prev, const DpTable& prime) {
  detail::require(prev.radix == prime.radix, "dp_combine: radix mismatch");
  DpTable out;
  out.radix = prev.radix;
  size_t n = detail::dp_size(out.radix);
  out.value.assign(n, kInfiniteWeight);
  out.back.assign(n, -1);
  for (size_t qi = 0; qi < n; ++qi) {
    std::vector<int> q = detail::dp_decode(out.radix, qi);
    for (size_t pi = 0; pi < n; ++pi) {
      if (prime.value[pi] == kInfiniteWeight) continue;
      std::vector<int> granted = detail::dp_decode(out.radix, pi);
      std::vector<int> rest(q.size());
      bool fits = true;
      for (size_t i = 0; i < q.size(); ++i) {
        rest[i] = q[i] - granted[i];
        if (rest[i] < 0) fits = false;
      }
      if (!fits) continue;
      Weight left = prev.value[detail::dp_encode(out.radix, rest)];
      if (left == kInfiniteWeight) continue;
      Weight total = checked_add(left, prime.value[pi]);
      if (total < out.value[qi]) {
        out.value[qi] = total;
        out.back[qi] = static_cast<int>(pi);
      }
    }
  }
  return out;
}

// Recovers one optimal placement from the combined tables by walking the
// recorded splits from the last pendant block down, re-solving each stage's
// small assignment with concrete class members. Members are consumed
// smallest-first per class; every stage must reproduce its table value.
// alpha holds the combined tables 0..r, prime the per-block tables 1..r.
inline Mapping reconstruct(const BlockBranch& b, const std::vector<DpTable>& alpha,
                           const std::vector<DpTable>& prime) {
  int r = static_cast<int>(b.split.pendants.size());
  detail::require(static_cast<int>(alpha.size()) == r + 1 &&
                      static_cast<int>(prime.size()) == r,
                  "reconstruct: table count mismatch");
  const std::vector<int>& radix = alpha[0].radix;
  std::vector<int> full(radix.size());
  for (size_t i = 0; i < radix.size(); ++i) full[i] = radix[i] - 1;
  size_t qi = detail::dp_encode(radix, full);
  Weight want = alpha[r].value[qi];
  detail::require(want != kInfiniteWeight, "reconstruct: infeasible branch");

  std::vector<size_t> next_member(b.twin_classes.size(), 0);
  std::vector<VertexPair> pairs = b.ctx.psi.pairs();
  Weight placed_weight = 0;

  auto place = [&](const std::vector<int>& counts, const std::vector<Vertex>& hosts,
                   Vertex banned) -> Weight {
    std::vector<size_t> member_class;
    for (size_t i = 0; i < counts.size(); ++i)
      for (int s = 0; s < counts[i]; ++s) member_class.push_back(i);
    if (member_class.empty()) return 0;
    std::vector<Vertex> cols;
    for (Vertex v : hosts)
      if (v != banned) cols.push_back(v);
    AuxBipartite aux(static_cast<int>(member_class.size()), static_cast<int>(cols.size()));
    for (size_t row = 0; row < member_class.size(); ++row)
      for (size_t col = 0; col < cols.size(); ++col)
        aux.add(static_cast<int>(row), static_cast<int>(col),
                b.class_cost[member_class[row]][cols[col]]);
    auto m = min_weight_saturating_matching(aux, Saturate::kLeft);
    detail::require(m.has_value(), "reconstruct: stage lost its matching");
    std::vector<int> host_of_row(member_class.size(), -1);
    for (auto [row, col] : m->pairs) host_of_row[row] = col;
    for (size_t row = 0; row < member_class.size(); ++row) {
      size_t cls = member_class[row];
      detail::require(next_member[cls] < b.twin_classes[cls].size(),
                      "reconstruct: class ran out of members");
      Vertex z = b.twin_classes[cls][next_member[cls]++];
      pairs.push_back({z, cols[host_of_row[row]]});
    }
    return m->weight;
  };

  for (int stage = r; stage >= 1; --stage) {
    int bk = alpha[stage].back[qi];
    detail::require(bk >= 0, "reconstruct: missing split");
    std::vector<int> granted = detail::dp_decode(radix, static_cast<size_t>(bk));
    int slots = 0;
    for (int c : granted) slots += c;
    Vertex banned = -1;
    if (slots == 1) {
      size_t cls = 0;
      while (granted[cls] == 0) ++cls;
      if (b.class_pin[cls] == b.split.attach[stage - 1].second)
        banned = b.split.attach[stage - 1].first;
    }
    Weight got = place(granted, b.split.pendants[stage - 1], banned);
    detail::require(got == prime[stage - 1].value[static_cast<size_t>(bk)],
                    "reconstruct: stage value drifted");
    placed_weight = checked_add(placed_weight, got);
    std::vector<int> rest = detail::dp_decode(radix, qi);
    for (size_t i = 0; i < rest.size(); ++i) rest[i] -= granted[i];
    qi = detail::dp_encode(radix, rest);
  }

  Weight got0 = place(detail::dp_decode(radix, qi), b.split.free_zone, -1);
  detail::require(got0 == alpha[0].value[qi], "reconstruct: stage value drifted");
  placed_weight = checked_add(placed_weight, got0);
  detail::require(placed_weight == want, "reconstruct: assembled weight drifted");
  for (size_t i = 0; i < next_member.size(); ++i)
    detail::require(next_member[i] == b.twin_classes[i].size(), "reconstruct: unplaced member");
  return Mapping(std::move(pairs));
}

// Minimum-weight injection phi with G "+" phi(H) 2-edge-connected, or
// nullopt when none exists. The host must be connected. Isolated overlay
// vertices ride along onto the smallest free host vertices. Deterministic
// like solve_connect: minimum weight first, lexicographically smallest
// lifted mapping second, independent of thread count.
inline std::optional<Solution> solve_2connect(const Graph& g, const Graph& h,
                                              const WeightFn& omega, int threads = 1) {
  if (!is_connected(g)) throw std::invalid_argument("solve_2connect: host is disconnected");
  if (h.n() > g.n()) return std::nullopt;

  detail::OverlayCore oc = detail::split_overlay(h);
  const Graph& hc = oc.core;
  if (hc.n() == 0) {
    if (!is_k_edge_connected(g, 2)) return std::nullopt;
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

  // Pass one: price every (Y, psi) branch by folding the per-block tables;
  // the full-tuple entry of the fold is the branch's placement cost.
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
        g, hc, anchors, AnchorMode::kBlock, image, used, 1,
        [&](const std::vector<Vertex>& img, const Graph& f_prime) {
          std::vector<VertexPair> psi_pairs;
          for (size_t i = 0; i < anchors.size(); ++i) psi_pairs.push_back({anchors[i], img[i]});
          AnchorContext ctx =
              build_anchor_context(hc, *x, ys[yi], Mapping(std::move(psi_pairs)), omega);
          if (ctx.anchor_weight > bound.load()) return;
          auto branch = build_block_branch(g, hc, f_prime, ctx, omega);
          if (!branch) return;
          DpTable t = alpha0_table(*branch);
          for (int stage = 1; stage <= static_cast<int>(branch->split.pendants.size()); ++stage)
            t = dp_combine(t, alpha_prime_table(*branch, stage));
          if (t.value.back() == kInfiniteWeight) return;
          Weight value = checked_add(ctx.anchor_weight, t.value.back());
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

  // Pass two: only tied branches are rebuilt with back-pointers and walked
  // into a concrete placement; the smallest lifted mapping wins.
  std::optional<Solution> best;
  for (const detail::BranchKey& key : ties) {
    const std::vector<Vertex>& anchors = anchors_of[key.y_index];
    std::vector<VertexPair> psi_pairs;
    for (size_t i = 0; i < anchors.size(); ++i) psi_pairs.push_back({anchors[i], key.image[i]});
    AnchorContext ctx =
        build_anchor_context(hc, *x, ys[key.y_index], Mapping(std::move(psi_pairs)), omega);
    Graph f_prime = detail::anchored_superposition(g, hc, anchors, key.image);
    auto branch = build_block_branch(g, hc, f_prime, ctx, omega);
    detail::require(branch.has_value(), "reconstruction lost the branch");

    int r = static_cast<int>(branch->split.pendants.size());
    std::vector<DpTable> alpha;
    alpha.push_back(alpha0_table(*branch));
    std::vector<DpTable> prime;
    for (int stage = 1; stage <= r; ++stage) {
      prime.push_back(alpha_prime_table(*branch, stage));
      alpha.push_back(dp_combine(alpha[stage - 1], prime.back()));
    }
    detail::require(checked_add(ctx.anchor_weight, alpha[r].value.back()) == best_value,
                    "reconstruction lost the branch optimum");

    Mapping core_phi = reconstruct(*branch, alpha, prime);
    detail::require(feasibility_conditions(hc, ctx, branch->split, core_phi),
                    "reconstruction violated a pendant condition");
    std::vector<Vertex> core_image(hc.n(), -1);
    for (auto [hv, gv] : core_phi.pairs()) core_image[hv] = gv;
    Mapping full = detail::reattach(oc, core_image, g.n());
    if (!best || full < best->phi) best = Solution{std::move(full), best_value};
  }

  detail::require(is_k_edge_connected(superpose(g, h, best->phi), 2),
                  "solver produced a superposition that is not 2-edge-connected");
  detail::require(mapping_weight(h, best->phi, omega) == best->weight,
                  "solver weight certificate mismatch");
  return best;
}

// Budget form: true iff some phi with G "+" phi(H) 2-edge-connected costs
// at most `budget`. Monotone in the budget by construction.
inline bool decide_2connect(const Graph& g, const Graph& h, const WeightFn& omega, Weight budget,
                            int threads = 1) {
  auto sol = solve_2connect(g, h, omega, threads);
  return sol.has_value() && sol->weight <= budget;
}

}  // namespace sca
