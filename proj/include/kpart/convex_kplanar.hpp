#pragma once

// Combinatorial k-planar machinery for point sets in convex position. Vertices
// are cyclic indices 0..n-1; no coordinates are involved, since the crossing
// structure of a convex drawing depends only on the cyclic order.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kpart/coloring.hpp"
#include "kpart/geometry.hpp"

namespace kpart {

// Chord of a convex n-gon between cyclic positions i < j.
struct ConvexEdge {
  int i = 0;
  int j = 0;

  static constexpr ConvexEdge make(int a, int b) noexcept {
    return a < b ? ConvexEdge{a, b} : ConvexEdge{b, a};
  }
  constexpr Edge to_edge() const noexcept { return {i, j}; }
  static constexpr ConvexEdge from(const Edge& e) noexcept { return {e.u, e.v}; }

  friend constexpr auto operator<=>(const ConvexEdge&, const ConvexEdge&) = default;
};

// Direction class of a chord on the regular n-gon: chords {i,j} and {k,l} are
// parallel iff i+j = k+l (mod n).
struct SlopeClass {
  int value = 0;
  friend constexpr auto operator<=>(const SlopeClass&, const SlopeClass&) = default;
};

SlopeClass slope_class(std::size_t n, ConvexEdge e);

// Interleaving test: no shared endpoint and exactly one endpoint of f strictly
// inside the arc (e.i, e.j).
bool convex_edges_cross(std::size_t n, ConvexEdge e, ConvexEdge f);

// Color = slope / s, giving ceil(n/s) classes of at most s consecutive slopes.
// Every class is (s-1)(s-2)/2-planar.
Coloring slope_partition(std::size_t n, std::size_t s);

// 1-based position of the edge's slope inside its interval of slope_partition(n, s).
std::size_t slope_position(std::size_t n, std::size_t s, ConvexEdge e);

struct ClassCrossings {
  std::size_t max_per_edge = 0;
  std::optional<ConvexEdge> witness;  // empty only for an empty class
};

// Largest number of same-class crossings over the edges of one class.
ClassCrossings max_crossings_in_class(const Coloring& coloring, int color);

struct KPlanarCheck {
  bool ok = true;
  std::optional<Edge> witness;  // an edge with more than k crossings
  std::size_t witness_crossings = 0;
};

KPlanarCheck verify_k_planar(std::size_t n, std::span<const ConvexEdge> edges, std::size_t k);

// Same check with exact geometric predicates on arbitrary points.
KPlanarCheck verify_k_planar(const PointSet& points, std::span<const Edge> edges, std::size_t k);

// Largest s with (s-1)(s-2)/2 <= k, so that slope_partition(n, s) is k-planar.
// k = 0 gives 2 (adjacent slopes never cross); k = 1 and 2 give 3.
std::size_t choose_block_size(std::size_t k);

}  // namespace kpart
