#pragma once

// Minimum-weight bipartite matchings that saturate one side. The cost table
// is sparse: absent pairs are genuine non-edges, while `big` is an ordinary
// cost a caller may use as an over-budget padding value. Among all
// minimum-weight saturating matchings the lexicographically smallest pair
// list is returned, so results are reproducible bit for bit.

#include <limits>

#include "sca/mapping.hpp"

namespace sca {

struct AuxBipartite {
  int n_left = 0;
  int n_right = 0;
  Weight big = 0;  // sentinel strictly greater than any real cost
  std::vector<std::vector<std::pair<int, Weight>>> cost;  // per left: (right, cost)

  AuxBipartite() = default;
  AuxBipartite(int nl, int nr, Weight big_value = 0)
      : n_left(nl), n_right(nr), big(big_value), cost(static_cast<size_t>(std::max(nl, 0))) {
    if (nl < 0 || nr < 0) throw std::invalid_argument("aux bipartite: negative side");
  }

  void add(int l, int r, Weight c) {
    if (l < 0 || l >= n_left || r < 0 || r >= n_right)
      throw std::invalid_argument("aux bipartite: endpoint out of range");
    for (const auto& [rr, cc] : cost[l])
      if (rr == r) throw std::invalid_argument("aux bipartite: duplicate pair");
    cost[l].emplace_back(r, c);
  }
};

enum class Saturate { kLeft, kRight };

struct MatchingResult {
  std::vector<std::pair<int, int>> pairs;  // (left, right), sorted
  Weight weight = 0;
};

namespace detail {

constexpr std::int64_t kNoEdge = std::numeric_limits<std::int64_t>::max();

// Dense row-major view with rows = the side to saturate.
struct DenseAssignment {
  int rows = 0, cols = 0;
  std::vector<std::int64_t> a;
  std::int64_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  std::int64_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

inline DenseAssignment densify(const AuxBipartite& aux, Saturate side) {
  bool transpose = side == Saturate::kRight;
  DenseAssignment d;
  d.rows = transpose ? aux.n_right : aux.n_left;
  d.cols = transpose ? aux.n_left : aux.n_right;
  d.a.assign(static_cast<size_t>(d.rows) * d.cols, kNoEdge);
  const std::uint64_t limit =
      static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) /
      (static_cast<std::uint64_t>(d.rows) + 2);
  for (int l = 0; l < aux.n_left; ++l)
    for (const auto& [r, c] : aux.cost[l]) {
      if (c > limit) throw std::overflow_error("aux bipartite: cost too large to sum safely");
      if (transpose)
        d.at(r, l) = static_cast<std::int64_t>(c);
      else
        d.at(l, r) = static_cast<std::int64_t>(c);
    }
  return d;
}

// Kuhn-Munkres with potentials; rows are inserted one by one. Returns per-row
// matched column, or nullopt when no row-saturating matching exists. Rows may
// be restricted via `row_active`, columns via `col_active`.
inline std::optional<std::vector<int>> hungarian(const DenseAssignment& d,
                                                 const std::vector<char>& row_active,
                                                 const std::vector<char>& col_active) {
  const int n = d.rows, m = d.cols;
  std::vector<std::int64_t> u(n + 1, 0), v(m + 1, 0), minv(m + 1);
  std::vector<int> p(m + 1, 0), way(m + 1, 0);
  std::vector<int> rows;
  for (int i = 0; i < n; ++i)
    if (row_active[i]) rows.push_back(i + 1);
  int active_cols = 0;
  for (int j = 0; j < m; ++j)
    if (col_active[j]) ++active_cols;
  if (static_cast<int>(rows.size()) > active_cols) return std::nullopt;

  for (int i : rows) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kNoEdge);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = -1;
      std::int64_t delta = kNoEdge;
      for (int j = 1; j <= m; ++j) {
        if (used[j] || !col_active[j - 1]) continue;
        std::int64_t cell = d.at(i0 - 1, j - 1);
        if (cell != kNoEdge) {
          std::int64_t cur = cell - u[i0] - v[j];
          if (cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (j1 < 0) return std::nullopt;  // no augmenting path: unsaturable
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else if (minv[j] != kNoEdge) {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    while (j0) {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    }
  }

  std::vector<int> match_of_row(n, -1);
  for (int j = 1; j <= m; ++j)
    if (p[j] != 0) match_of_row[p[j] - 1] = j - 1;
  return match_of_row;
}

inline std::optional<std::uint64_t> solve_value(const DenseAssignment& d,
                                                const std::vector<char>& row_active,
                                                const std::vector<char>& col_active) {
  auto match = hungarian(d, row_active, col_active);
  if (!match) return std::nullopt;
  std::uint64_t total = 0;
  for (int i = 0; i < d.rows; ++i)
    if (row_active[i]) total += static_cast<std::uint64_t>(d.at(i, (*match)[i]));
  return total;
}

}  // namespace detail

// Value-only variant for hot paths; kInfiniteWeight when unsaturable.
inline Weight min_weight_saturating_value(const AuxBipartite& aux, Saturate side) {
  auto d = detail::densify(aux, side);
  std::vector<char> row_active(d.rows, 1), col_active(d.cols, 1);
  auto value = detail::solve_value(d, row_active, col_active);
  return value ? *value : kInfiniteWeight;
}

inline std::optional<MatchingResult> min_weight_saturating_matching(const AuxBipartite& aux,
                                                                    Saturate side) {
  auto d = detail::densify(aux, side);
  std::vector<char> row_active(d.rows, 1), col_active(d.cols, 1);
  auto best = detail::solve_value(d, row_active, col_active);
  if (!best) return std::nullopt;

  // Fix rows in ascending order to the smallest column that still allows an
  // optimal completion; this realizes the lexicographically smallest pair
  // list among minimum-weight matchings.
  MatchingResult res;
  std::uint64_t prefix = 0;
  std::vector<int> fixed_col(d.rows, -1);
  for (int i = 0; i < d.rows; ++i) {
    row_active[i] = 0;
    bool placed = false;
    for (int c = 0; c < d.cols; ++c) {
      if (!col_active[c] || d.at(i, c) == detail::kNoEdge) continue;
      col_active[c] = 0;
      auto rest = detail::solve_value(d, row_active, col_active);
      if (rest && prefix + static_cast<std::uint64_t>(d.at(i, c)) + *rest == *best) {
        prefix += static_cast<std::uint64_t>(d.at(i, c));
        fixed_col[i] = c;
        placed = true;
        break;
      }
      col_active[c] = 1;
    }
    if (!placed) throw std::logic_error("matching refinement lost the optimum");
  }

  bool transpose = side == Saturate::kRight;
  for (int i = 0; i < d.rows; ++i) {
    int l = transpose ? fixed_col[i] : i;
    int r = transpose ? i : fixed_col[i];
    res.pairs.emplace_back(l, r);
  }
  std::sort(res.pairs.begin(), res.pairs.end());
  res.weight = prefix;
  return res;
}

}  // namespace sca
