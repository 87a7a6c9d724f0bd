#pragma once

// Test-only reference computations. Deliberately naive and independent of the
// library's search code: they use only the exact predicates.

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "kpart/geometry.hpp"

namespace oracle {

// Largest set of pairwise crossing edges by plain recursive enumeration of all
// cliques (no bounding, no ordering tricks).
inline std::size_t naive_max_crossing_family(const kpart::PointSet& points,
                                             const std::vector<kpart::Edge>& edges) {
  const std::size_t m = edges.size();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const auto& e = edges[a];
      const auto& f = edges[b];
      adj[a][b] = kpart::segments_cross(points[e.u], points[e.v], points[f.u], points[f.v]);
    }
  }
  std::size_t best = 0;
  std::vector<std::size_t> clique;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    best = std::max(best, clique.size());
    for (std::size_t v = from; v < m; ++v) {
      bool ok = true;
      for (std::size_t c : clique) ok = ok && adj[c][v];
      if (!ok) continue;
      clique.push_back(v);
      extend(v + 1);
      clique.pop_back();
    }
  };
  extend(0);
  return best;
}

inline bool interleave(int i, int j, int k, int l) {
  if (i == k || i == l || j == k || j == l) return false;
  return (i < k && k < j) != (i < l && l < j);
}

// Largest convex k-plane graph on n vertices by enumerating every subset of the
// diagonals. Feasible for n <= 8 (2^20 subsets).
inline std::size_t brute_max_k_plane(int n, std::size_t k) {
  std::vector<std::pair<int, int>> diag;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (!(i == 0 && j == n - 1)) diag.push_back({i, j});
    }
  }
  const std::size_t m = diag.size();
  std::vector<std::uint32_t> cross(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (interleave(diag[a].first, diag[a].second, diag[b].first, diag[b].second)) {
        cross[a] |= 1U << b;
      }
    }
  }
  std::size_t best = 0;
  for (std::uint32_t set = 0; set < (1U << m); ++set) {
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a) {
      if ((set >> a) & 1U) ok = static_cast<std::size_t>(__builtin_popcount(cross[a] & set)) <= k;
    }
    if (ok) best = std::max<std::size_t>(best, __builtin_popcount(set));
  }
  return best + static_cast<std::size_t>(n);
}

// Frozen results of brute_max_k_plane (and of a separate script enumerating all
// diagonal subsets), rows n = 4..9, columns k = 0..4.
inline constexpr int kMaxKPlane[6][5] = {
    {5, 6, 6, 6, 6},       // n=4
    {7, 8, 10, 10, 10},    // n=5
    {9, 11, 12, 14, 15},   // n=6
    {11, 13, 15, 16, 18},  // n=7
    {13, 16, 19, 19, 21},  // n=8
    {15, 18, 21, 23, 24},  // n=9
};

// Random convex realization in index order: sorted random angles on a circle of
// random radius, rounded to integers. Retried by the caller if degenerate.
inline std::vector<kpart::Point> random_convex_points(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::vector<double> angles(n);
  for (double& a : angles) a = angle(rng);
  std::sort(angles.begin(), angles.end(), std::greater<>());
  std::vector<kpart::Point> pts;
  for (double a : angles) {
    pts.push_back({std::llround(1e8 * std::cos(a)), std::llround(1e8 * std::sin(a))});
  }
  return pts;
}

inline std::size_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

}  // namespace oracle
