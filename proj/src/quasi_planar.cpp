#include "kpart/quasi_planar.hpp"

#include <algorithm>
#include <numeric>

#include "kpart/error.hpp"

namespace kpart {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

void check_perfect_family(const PointSet& points, std::span<const Edge> family) {
  const std::size_t n = family.size();
  if (n == 0 || points.size() != 2 * n) {
    throw InvalidInput("a perfect crossing family needs |P| = 2 * |family| > 0 (got " +
                       std::to_string(points.size()) + " points, " + std::to_string(n) +
                       " edges)");
  }
  std::vector<int> hits(points.size(), 0);
  for (const Edge& e : family) {
    if (e.u < 0 || e.u >= e.v || static_cast<std::size_t>(e.v) >= points.size()) {
      throw InvalidInput("family edge " + to_string(e) + " out of range");
    }
    ++hits[e.u];
    ++hits[e.v];
  }
  for (std::size_t v = 0; v < hits.size(); ++v) {
    if (hits[v] != 1) {
      throw InvalidInput("family does not cover point " + std::to_string(v) + " exactly once");
    }
  }
  if (!is_crossing_family(points, family)) {
    throw InvalidInput("family edges do not pairwise cross");
  }
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

Coloring TreeDecomposition::to_coloring(std::size_t point_count) const {
  Coloring coloring(point_count, static_cast<int>(trees.size()));
  for (std::size_t t = 0; t < trees.size(); ++t) {
    for (const Edge& e : trees[t]) coloring.set(e, static_cast<int>(t));
  }
  return coloring;
}

TreeDecomposition double_star_partition(const PointSet& points) {
  if (points.size() < 2 || points.size() % 2 != 0) {
    throw InvalidInput("double_star_partition needs an even number of points >= 2 (got " +
                       std::to_string(points.size()) + ")");
  }
  // Lexicographic order is a projection onto a direction rotated infinitesimally
  // off the x-axis, so ties in x are broken consistently.
  std::vector<int> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return points[a] < points[b]; });
  // p(t) for 1-based t.
  auto p = [&](std::size_t t) { return order[t - 1]; };

  const std::size_t n = points.size() / 2;
  TreeDecomposition result;
  result.trees.resize(n);
  for (std::size_t i = 1; i <= n; ++i) {
    auto& tree = result.trees[i - 1];
    const int odd = p(2 * i - 1);
    const int even = p(2 * i);
    for (std::size_t j = 1; j < i; ++j) tree.push_back(Edge::make(odd, p(2 * j)));
    for (std::size_t j = i + 1; j <= n; ++j) tree.push_back(Edge::make(odd, p(2 * j - 1)));
    for (std::size_t j = 1; j <= i; ++j) tree.push_back(Edge::make(even, p(2 * j - 1)));
    for (std::size_t j = i + 1; j <= n; ++j) tree.push_back(Edge::make(even, p(2 * j)));
    std::sort(tree.begin(), tree.end());
  }
  return result;
}

HalvingLineSystem halving_line_system(const PointSet& points, std::span<const Edge> family) {
  check_perfect_family(points, family);
  const std::size_t n = family.size();

  HalvingLineSystem system;
  std::vector<Point> direction;
  for (const Edge& e : family) {
    int tail = e.u;
    int head = e.v;
    Point d{points[head].x - points[tail].x, points[head].y - points[tail].y};
    if (d.y < 0 || (d.y == 0 && d.x < 0)) {
      std::swap(tail, head);
      d = {-d.x, -d.y};
    }
    HalvingLine line{e, head, tail, {}, {}};
    for (int v = 0; v < static_cast<int>(points.size()); ++v) {
      if (v == head) {
        line.left_side.push_back(v);
      } else if (v == tail) {
        line.right_side.push_back(v);
      } else if (orientation(points[tail], points[head], points[v]) > 0) {
        line.left_side.push_back(v);
      } else {
        line.right_side.push_back(v);
      }
    }
    if (line.left_side.size() != n || line.right_side.size() != n) {
      throw InternalFailure("family edge " + to_string(e) + " does not support a halving line");
    }
    system.lines.push_back(std::move(line));
    direction.push_back(d);
  }

  // Directions lie in [0, pi) and pairwise crossing segments are never
  // parallel, so the cross product orders them strictly by angle.
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  const Point origin{0, 0};
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return orientation(origin, direction[a], direction[b]) > 0;
  });
  HalvingLineSystem sorted;
  for (std::size_t i : idx) sorted.lines.push_back(std::move(system.lines[i]));
  return sorted;
}

Coloring halving_line_partition(const PointSet& points, std::span<const Edge> family,
                                std::size_t k) {
  if (k < 3) throw InvalidInput("halving_line_partition needs k >= 3");
  const auto system = halving_line_system(points, family);
  const std::size_t n = system.lines.size();
  const std::size_t group_size = k - 1;
  const std::size_t groups = ceil_div(n, group_size);
  const std::size_t count = points.size();

  // in_group[g][v]: v is an endpoint of a line of group g (v in X_g).
  // on_left[g][v]: v is on the left side of the first line of group g.
  std::vector<std::vector<bool>> in_group(groups, std::vector<bool>(count, false));
  std::vector<std::vector<bool>> on_left(groups, std::vector<bool>(count, false));
  for (std::size_t g = 0; g < groups; ++g) {
    for (std::size_t i = g * group_size; i < std::min(n, (g + 1) * group_size); ++i) {
      in_group[g][system.lines[i].edge.u] = true;
      in_group[g][system.lines[i].edge.v] = true;
    }
    for (int v : system.lines[g * group_size].left_side) on_left[g][v] = true;
  }

  Coloring coloring(count, static_cast<int>(groups));
  for (const Edge& e : all_edges(count)) {
    int color = Coloring::kUnassigned;
    for (std::size_t g = 0; g < groups && color == Coloring::kUnassigned; ++g) {
      const bool inside_u = in_group[g][e.u];
      const bool inside_v = in_group[g][e.v];
      const bool complete_part = inside_u && inside_v;
      const bool bipartite_part = inside_u != inside_v && on_left[g][e.u] == on_left[g][e.v];
      if (complete_part || bipartite_part) color = static_cast<int>(g);
    }
    if (color == Coloring::kUnassigned) {
      throw InternalFailure("halving-line classes do not cover edge " + to_string(e));
    }
    coloring.set(e, color);
  }
  return coloring;
}

Theorem7Result theorem7_partition(const PointSet& points, std::size_t k, std::uint64_t budget) {
  if (k < 3) throw InvalidInput("theorem7_partition needs k >= 3");
  const std::size_t count = points.size();
  Theorem7Result result;

  const auto family = max_crossing_family(build_crossing_graph(points), budget);
  if (!family.proven_optimal) {
    throw BudgetExceeded("maximum crossing family not proven within " + std::to_string(budget) +
                         " search nodes; the color bound would be unsound");
  }
  result.m = family.size();
  result.family = family.edges;

  if (k > result.m) {
    result.single_color = true;
    result.colors_used = 1;
    result.coloring = Coloring(count, 1);
    for (const Edge& e : all_edges(count)) result.coloring.set(e, 0);
    return result;
  }

  // K(P') on the family endpoints, reindexed 0..2m-1 in increasing order.
  std::vector<int> local(count, -1);
  std::vector<int> endpoints;
  for (const Edge& e : family.edges) {
    endpoints.push_back(e.u);
    endpoints.push_back(e.v);
  }
  std::sort(endpoints.begin(), endpoints.end());
  std::vector<Point> sub_points;
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    local[endpoints[i]] = static_cast<int>(i);
    sub_points.push_back(points[endpoints[i]]);
  }
  std::vector<Edge> sub_family;
  for (const Edge& e : family.edges) sub_family.push_back(Edge::make(local[e.u], local[e.v]));
  const auto sub = PointSet::from_points(std::move(sub_points));
  const Coloring inner = halving_line_partition(sub, sub_family, k);

  // Remaining points in index order, k-1 per group.
  const int inner_colors = inner.num_colors();
  std::vector<int> group(count, -1);
  std::size_t rest = 0;
  for (std::size_t v = 0; v < count; ++v) {
    if (local[v] < 0) group[v] = inner_colors + static_cast<int>(rest++ / (k - 1));
  }
  result.colors_used = static_cast<std::size_t>(inner_colors) + ceil_div(rest, k - 1);
  result.coloring = Coloring(count, static_cast<int>(result.colors_used));
  for (const Edge& e : all_edges(count)) {
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      result.coloring.set(e, inner.color_of(Edge::make(local[e.u], local[e.v])));
    } else if (local[e.u] < 0 && local[e.v] < 0) {
      result.coloring.set(e, std::min(group[e.u], group[e.v]));
    } else {
      result.coloring.set(e, local[e.u] < 0 ? group[e.u] : group[e.v]);
    }
  }
  return result;
}

bool verify_partition(const Coloring& coloring) { return coloring.is_total(); }

bool verify_partition(const PointSet& points, const Coloring& coloring) {
  return coloring.n() == points.size() && coloring.is_total();
}

bool verify_spanning_tree(std::size_t n, std::span<const Edge> edges) {
  if (n == 0 || edges.size() + 1 != n) return false;
  UnionFind uf(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n ||
        static_cast<std::size_t>(e.v) >= n || e.u == e.v) {
      return false;
    }
    if (!uf.unite(e.u, e.v)) return false;  // cycle
  }
  return true;
}

}  // namespace kpart
