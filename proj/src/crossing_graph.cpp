#include "kpart/error.hpp"
#include "kpart/quasi_planar.hpp"

namespace kpart {

CrossingGraph::CrossingGraph(const PointSet& points, std::vector<Edge> edges)
    : points_(points), edges_(std::move(edges)), graph_(edges_.size()) {
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= e.v || static_cast<std::size_t>(e.v) >= points_.size()) {
      throw InvalidInput("edge " + to_string(e) + " out of range for " +
                         std::to_string(points_.size()) + " points");
    }
  }
  for (std::size_t a = 0; a < edges_.size(); ++a) {
    for (std::size_t b = a + 1; b < edges_.size(); ++b) {
      if (points_.cross(edges_[a], edges_[b])) graph_.add_edge(a, b);
    }
  }
}

CrossingGraph build_crossing_graph(const PointSet& points) {
  return CrossingGraph(points, all_edges(points.size()));
}

bool is_crossing_family(const PointSet& points, std::span<const Edge> edges) {
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const Edge& e = edges[a];
      const Edge& f = edges[b];
      if (!segments_cross(points[e.u], points[e.v], points[f.u], points[f.v])) return false;
    }
  }
  return true;
}

CrossingFamily max_crossing_family(const CrossingGraph& graph, std::uint64_t budget) {
  const auto clique = max_clique(graph.graph(), budget);
  CrossingFamily family;
  family.proven_optimal = clique.complete;
  family.nodes = clique.nodes;
  for (int v : clique.vertices) family.edges.push_back(graph.edges()[v]);
  if (!is_crossing_family(graph.points(), family.edges)) {
    throw InternalFailure("clique search returned a family that does not pairwise cross");
  }
  return family;
}

QuasiPlanarCheck is_k_quasi_planar(const PointSet& points, std::span<const Edge> edges,
                                   std::size_t k, std::uint64_t budget) {
  if (k < 2) throw InvalidInput("k-quasi-planarity needs k >= 2");
  QuasiPlanarCheck check;
  if (edges.size() < k) return check;
  const CrossingGraph graph(points, {edges.begin(), edges.end()});
  const auto clique = max_clique(graph.graph(), budget, k);
  if (clique.reached_target) {
    check.ok = false;
    for (std::size_t t = 0; t < k; ++t) check.witness.push_back(graph.edges()[clique.vertices[t]]);
    return check;
  }
  if (!clique.complete) {
    throw BudgetExceeded("k-quasi-planarity undecided after " + std::to_string(clique.nodes) +
                         " search nodes");
  }
  return check;
}

}  // namespace kpart
