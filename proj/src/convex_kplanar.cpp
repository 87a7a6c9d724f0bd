#include "kpart/convex_kplanar.hpp"

#include <type_traits>

#include "kpart/error.hpp"

namespace kpart {

namespace {

void check_edge(std::size_t n, ConvexEdge e) {
  if (e.i < 0 || e.i >= e.j || static_cast<std::size_t>(e.j) >= n) {
    throw InvalidInput("invalid convex edge {" + std::to_string(e.i) + "," +
                       std::to_string(e.j) + "} for n=" + std::to_string(n));
  }
}

template <typename E, typename Crosses>
KPlanarCheck check_k_planar(std::span<const E> edges, std::size_t k, Crosses&& crosses) {
  KPlanarCheck result;
  std::vector<std::size_t> count(edges.size(), 0);
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      if (crosses(edges[a], edges[b])) {
        ++count[a];
        ++count[b];
      }
    }
  }
  for (std::size_t a = 0; a < edges.size(); ++a) {
    if (count[a] > k && count[a] > result.witness_crossings) {
      result.ok = false;
      if constexpr (std::is_same_v<E, ConvexEdge>) {
        result.witness = edges[a].to_edge();
      } else {
        result.witness = edges[a];
      }
      result.witness_crossings = count[a];
    }
  }
  return result;
}

}  // namespace

SlopeClass slope_class(std::size_t n, ConvexEdge e) {
  check_edge(n, e);
  return {static_cast<int>((static_cast<std::size_t>(e.i) + e.j) % n)};
}

bool convex_edges_cross(std::size_t n, ConvexEdge e, ConvexEdge f) {
  check_edge(n, e);
  check_edge(n, f);
  if (e.i == f.i || e.i == f.j || e.j == f.i || e.j == f.j) return false;
  const bool fi_inside = e.i < f.i && f.i < e.j;
  const bool fj_inside = e.i < f.j && f.j < e.j;
  return fi_inside != fj_inside;
}

Coloring slope_partition(std::size_t n, std::size_t s) {
  if (n < 3) throw InvalidInput("slope_partition needs n >= 3");
  if (s < 1) throw InvalidInput("slope_partition needs s >= 1");
  const auto colors = static_cast<int>((n + s - 1) / s);
  Coloring coloring(n, colors);
  for (const Edge& e : all_edges(n)) {
    coloring.set(e, slope_class(n, ConvexEdge::from(e)).value / static_cast<int>(s));
  }
  return coloring;
}

std::size_t slope_position(std::size_t n, std::size_t s, ConvexEdge e) {
  return static_cast<std::size_t>(slope_class(n, e).value) % s + 1;
}

ClassCrossings max_crossings_in_class(const Coloring& coloring, int color) {
  if (color < 0 || color >= coloring.num_colors()) {
    throw InvalidInput("color " + std::to_string(color) + " out of range");
  }
  const std::size_t n = coloring.n();
  const auto edges = coloring.class_edges(color);
  ClassCrossings result;
  for (const Edge& e : edges) {
    std::size_t count = 0;
    for (const Edge& f : edges) {
      if (convex_edges_cross(n, ConvexEdge::from(e), ConvexEdge::from(f))) ++count;
    }
    if (!result.witness || count > result.max_per_edge) {
      result.max_per_edge = count;
      result.witness = ConvexEdge::from(e);
    }
  }
  return result;
}

KPlanarCheck verify_k_planar(std::size_t n, std::span<const ConvexEdge> edges, std::size_t k) {
  return check_k_planar(edges, k, [n](ConvexEdge e, ConvexEdge f) {
    return convex_edges_cross(n, e, f);
  });
}

KPlanarCheck verify_k_planar(const PointSet& points, std::span<const Edge> edges, std::size_t k) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= e.v || static_cast<std::size_t>(e.v) >= points.size()) {
      throw InvalidInput("edge " + to_string(e) + " out of range");
    }
  }
  return check_k_planar(edges, k,
                        [&points](const Edge& e, const Edge& f) { return points.cross(e, f); });
}

std::size_t choose_block_size(std::size_t k) {
  if (k == 0) return 2;
  std::size_t s = 3;
  // Grow while block size s+1 still satisfies s(s-1)/2 <= k.
  while (s * (s - 1) / 2 <= k) ++s;
  return s;
}

}  // namespace kpart
