#pragma once

// Crossing graphs, exact crossing-family search, and k-quasi-planar partitions
// of complete geometric graphs on point sets in general position.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kpart/clique.hpp"
#include "kpart/coloring.hpp"
#include "kpart/geometry.hpp"

namespace kpart {

inline constexpr std::uint64_t kDefaultCliqueBudget = 100'000'000;

// One vertex per edge of a geometric graph; two vertices are adjacent iff the
// segments properly cross.
class CrossingGraph {
 public:
  CrossingGraph() = default;
  CrossingGraph(const PointSet& points, std::vector<Edge> edges);

  const PointSet& points() const noexcept { return points_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool adjacent(std::size_t a, std::size_t b) const noexcept { return graph_.adjacent(a, b); }
  std::size_t adjacency_count() const noexcept { return graph_.edge_count(); }
  const BitGraph& graph() const noexcept { return graph_; }

 private:
  PointSet points_;
  std::vector<Edge> edges_;
  BitGraph graph_;
};

// Crossing graph of K(P).
CrossingGraph build_crossing_graph(const PointSet& points);

struct CrossingFamily {
  std::vector<Edge> edges;
  bool proven_optimal = false;
  std::uint64_t nodes = 0;

  std::size_t size() const noexcept { return edges.size(); }
};

// Largest set of pairwise crossing edges. When the budget runs out the best
// family found so far is returned with proven_optimal == false. The returned
// certificate is re-checked with segments_cross before returning.
CrossingFamily max_crossing_family(const CrossingGraph& graph,
                                   std::uint64_t budget = kDefaultCliqueBudget);

// True iff the edges pairwise cross.
bool is_crossing_family(const PointSet& points, std::span<const Edge> edges);

struct QuasiPlanarCheck {
  bool ok = true;
  std::vector<Edge> witness;  // k pairwise crossing edges when !ok
};

// No k pairwise crossing edges among `edges`. Throws BudgetExceeded if the
// search cannot decide within the budget.
QuasiPlanarCheck is_k_quasi_planar(const PointSet& points, std::span<const Edge> edges,
                                   std::size_t k, std::uint64_t budget = kDefaultCliqueBudget);

// n edge-disjoint spanning trees whose union is K(P), |P| = 2n.
struct TreeDecomposition {
  std::vector<std::vector<Edge>> trees;

  // Tree i becomes color i.
  Coloring to_coloring(std::size_t point_count) const;
};

// Sort the points lexicographically as p_1..p_2n and pair p_{2i-1}, p_{2i} as
// the centers of double star T_i. Every double star is 3-quasi-planar.
TreeDecomposition double_star_partition(const PointSet& points);

struct HalvingLine {
  Edge edge;
  int p = 0;  // forward endpoint along the normalized direction; on the left side
  int q = 0;  // rear endpoint; on the right side
  std::vector<int> left_side;
  std::vector<int> right_side;
};

// Lines ordered by direction angle in [0, pi).
struct HalvingLineSystem {
  std::vector<HalvingLine> lines;
};

// Requires a perfect crossing family: n pairwise crossing edges covering all
// 2n points once. Each side of a line holds exactly n points.
HalvingLineSystem halving_line_system(const PointSet& points, std::span<const Edge> family);

// ceil(n/(k-1)) k-quasi-planar classes for a 2n-point set with a perfect
// crossing family. Class l is K(X_l) plus the two complete bipartite graphs
// between X_l and the rest on either side of the first line of group l; an
// edge covered by several classes goes to the smallest one.
Coloring halving_line_partition(const PointSet& points, std::span<const Edge> family,
                                std::size_t k);

struct Theorem7Result {
  Coloring coloring;
  std::size_t m = 0;  // size of a largest crossing family
  std::vector<Edge> family;
  std::size_t colors_used = 0;
  bool single_color = false;  // k > m: K(P) itself is k-quasi-planar
};

// Colors K(P') with the halving-line partition, where P' are the endpoints of
// a maximum crossing family, then groups the remaining points into sets of
// k-1 and gives every edge leaving P' the color of its first group. Throws
// BudgetExceeded if the maximum family is not proven optimal.
Theorem7Result theorem7_partition(const PointSet& points, std::size_t k,
                                  std::uint64_t budget = kDefaultCliqueBudget);

// Every edge of K(P) carries exactly one valid color.
bool verify_partition(const PointSet& points, const Coloring& coloring);
bool verify_partition(const Coloring& coloring);

// |edges| = n-1 and the edges connect all n vertices.
bool verify_spanning_tree(std::size_t n, std::span<const Edge> edges);

}  // namespace kpart
