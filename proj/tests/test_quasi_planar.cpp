#include <algorithm>
#include <set>

#include "doctest.h"
#include "kpart/error.hpp"
#include "kpart/quasi_planar.hpp"
#include "oracles.hpp"

using namespace kpart;

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

PointSet convex(std::size_t n) { return gen_convex_polygon(n, 0); }

}  // namespace

TEST_CASE("build_crossing_graph") {
  const auto tri = PointSet::from_points({{0, 0}, {4, 0}, {1, 3}});
  const auto g3 = build_crossing_graph(tri);
  CHECK(g3.size() == 3);
  CHECK(g3.adjacency_count() == 0);

  const auto g4 = build_crossing_graph(convex(4));
  CHECK(g4.adjacency_count() == 1);
  CHECK(g4.adjacent(edge_index(4, {0, 2}), edge_index(4, {1, 3})));

  for (std::size_t n = 4; n <= 12; ++n) {
    CHECK(build_crossing_graph(convex(n)).adjacency_count() == oracle::binomial(n, 4));
  }
}

TEST_CASE("crossing graph is irreflexive, symmetric, and never links edges sharing an endpoint") {
  const auto pts = gen_random_pointset(11, 19);
  const auto g = build_crossing_graph(pts);
  for (std::size_t a = 0; a < g.size(); ++a) {
    CHECK_FALSE(g.adjacent(a, a));
    for (std::size_t b = 0; b < g.size(); ++b) {
      CHECK(g.adjacent(a, b) == g.adjacent(b, a));
      if (g.edges()[a].shares_endpoint(g.edges()[b]) && a != b) CHECK_FALSE(g.adjacent(a, b));
    }
  }
}

TEST_CASE("max_crossing_family examples") {
  const auto k6 = max_crossing_family(build_crossing_graph(convex(6)));
  CHECK(k6.size() == 3);
  CHECK(k6.proven_optimal);
  CHECK(k6.edges == std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}});
  CHECK(max_crossing_family(build_crossing_graph(convex(5))).size() == 2);
  const auto inst = gen_perfect_crossing_family_pointset(4, 8);
  CHECK(max_crossing_family(build_crossing_graph(inst.points)).size() >= 4);
}

TEST_CASE("max_crossing_family matches naive enumeration") {
  for (std::size_t n = 4; n <= 8; ++n) {
    const auto pts = convex(n);
    const auto fam = max_crossing_family(build_crossing_graph(pts));
    CHECK(fam.size() == n / 2);
    CHECK(fam.size() == oracle::naive_max_crossing_family(pts, all_edges(n)));
  }
  for (std::size_t n = 9; n <= 12; ++n) CHECK(max_crossing_family(build_crossing_graph(convex(n))).size() == n / 2);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto pts = gen_random_pointset(7 + seed % 3, seed);
    const auto fam = max_crossing_family(build_crossing_graph(pts));
    CHECK(fam.proven_optimal);
    CHECK(is_crossing_family(pts, fam.edges));
    CHECK(fam.size() == oracle::naive_max_crossing_family(pts, all_edges(pts.size())));
  }
}

TEST_CASE("max_crossing_family reports an exhausted budget") {
  const auto fam = max_crossing_family(build_crossing_graph(convex(12)), 3);
  CHECK_FALSE(fam.proven_optimal);
  CHECK(is_crossing_family(convex(12), fam.edges));
}

TEST_CASE("is_k_quasi_planar") {
  const auto k6 = convex(6);
  const auto edges = all_edges(6);
  const auto three = is_k_quasi_planar(k6, edges, 3);
  CHECK_FALSE(three.ok);
  CHECK(three.witness == std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}});
  CHECK(is_k_quasi_planar(k6, edges, 4).ok);

  const auto pts = gen_random_pointset(9, 1);
  std::vector<Edge> star;
  for (int v = 1; v < 9; ++v) star.push_back({0, v});
  CHECK(is_k_quasi_planar(pts, star, 2).ok);
  CHECK_THROWS_AS(is_k_quasi_planar(pts, star, 1), InvalidInput);
}

TEST_CASE("double_star_partition on four points") {
  // Lexicographic order p1..p4 = indices 2, 0, 3, 1.
  const auto pts = PointSet::from_points({{1, 5}, {9, 2}, {0, 0}, {4, 1}});
  const auto trees = double_star_partition(pts);
  REQUIRE(trees.trees.size() == 2);
  const int p1 = 2, p2 = 0, p3 = 3, p4 = 1;
  std::vector<Edge> t1{Edge::make(p1, p2), Edge::make(p1, p3), Edge::make(p2, p4)};
  std::vector<Edge> t2{Edge::make(p2, p3), Edge::make(p1, p4), Edge::make(p3, p4)};
  std::sort(t1.begin(), t1.end());
  std::sort(t2.begin(), t2.end());
  CHECK(trees.trees[0] == t1);
  CHECK(trees.trees[1] == t2);
}

TEST_CASE("double_star_partition edge cases") {
  const auto two = double_star_partition(PointSet::from_points({{0, 0}, {3, 1}}));
  REQUIRE(two.trees.size() == 1);
  CHECK(two.trees[0] == std::vector<Edge>{{0, 1}});
  CHECK_THROWS_AS(double_star_partition(gen_random_pointset(7, 1)), InvalidInput);
  CHECK_THROWS_AS(double_star_partition(gen_random_pointset(1, 1)), InvalidInput);
}

TEST_CASE("double stars are spanning, disjoint, exhaustive, and 3-quasi-planar") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t count = 2 * (1 + seed % 10);
    const auto pts = gen_random_pointset(count, 100 + seed);
    const auto dec = double_star_partition(pts);
    CHECK(dec.trees.size() == count / 2);
    std::set<Edge> seen;
    for (const auto& tree : dec.trees) {
      CHECK(verify_spanning_tree(count, tree));
      CHECK(is_k_quasi_planar(pts, tree, 3).ok);
      for (const auto& e : tree) CHECK(seen.insert(e).second);
    }
    CHECK(seen.size() == edge_count(count));
    CHECK(verify_partition(pts, dec.to_coloring(count)));
  }
}

TEST_CASE("halving_line_system") {
  const auto one = gen_perfect_crossing_family_pointset(1, 5);
  const auto sys1 = halving_line_system(one.points, one.family);
  REQUIRE(sys1.lines.size() == 1);
  CHECK(sys1.lines[0].left_side.size() == 1);
  CHECK(sys1.lines[0].right_side.size() == 1);

  for (std::size_t n = 2; n <= 8; ++n) {
    const auto inst = gen_perfect_crossing_family_pointset(n, 300 + n);
    const auto sys = halving_line_system(inst.points, inst.family);
    REQUIRE(sys.lines.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& line = sys.lines[i];
      CHECK(line.left_side.size() == n);
      CHECK(line.right_side.size() == n);
      CHECK(std::count(line.left_side.begin(), line.left_side.end(), line.p) == 1);
      CHECK(std::count(line.right_side.begin(), line.right_side.end(), line.q) == 1);
      CHECK(Edge::make(line.p, line.q) == line.edge);
      // Every other family edge has one endpoint strictly on each side.
      std::size_t left = 0, right = 0;
      for (const auto& other : sys.lines) {
        if (other.edge == line.edge) continue;
        for (int v : {other.edge.u, other.edge.v}) {
          const int o = orientation(inst.points[line.q], inst.points[line.p], inst.points[v]);
          left += o > 0;
          right += o < 0;
        }
      }
      CHECK(left == n - 1);
      CHECK(right == n - 1);
    }
    // Ascending direction angle.
    for (std::size_t i = 1; i < n; ++i) {
      const auto& a = sys.lines[i - 1];
      const auto& b = sys.lines[i];
      const Point da{inst.points[a.p].x - inst.points[a.q].x, inst.points[a.p].y - inst.points[a.q].y};
      const Point db{inst.points[b.p].x - inst.points[b.q].x, inst.points[b.p].y - inst.points[b.q].y};
      CHECK(orientation({0, 0}, da, db) > 0);
    }
  }
}

TEST_CASE("halving_line_system rejects imperfect families") {
  const auto inst = gen_perfect_crossing_family_pointset(3, 1);
  std::vector<Edge> short_family(inst.family.begin(), inst.family.begin() + 2);
  CHECK_THROWS_AS(halving_line_system(inst.points, short_family), InvalidInput);
  const auto k6 = convex(6);
  CHECK_THROWS_AS(halving_line_system(k6, std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}}), InvalidInput);
  CHECK_NOTHROW(halving_line_system(k6, std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}}));
}

TEST_CASE("halving_line_partition examples") {
  const auto five = gen_perfect_crossing_family_pointset(5, 11);
  const auto c53 = halving_line_partition(five.points, five.family, 3);
  CHECK(c53.num_colors() == 3);
  CHECK(verify_partition(five.points, c53));

  const auto three = gen_perfect_crossing_family_pointset(3, 12);
  const auto c34 = halving_line_partition(three.points, three.family, 4);
  CHECK(c34.num_colors() == 1);
  CHECK(is_k_quasi_planar(three.points, all_edges(6), 4).ok);

  const auto six = gen_perfect_crossing_family_pointset(6, 13);
  const auto c64 = halving_line_partition(six.points, six.family, 4);
  CHECK(c64.num_colors() == 2);
  for (int c = 0; c < 2; ++c) CHECK(is_k_quasi_planar(six.points, c64.class_edges(c), 4).ok);

  CHECK_THROWS_AS(halving_line_partition(six.points, six.family, 2), InvalidInput);
}

TEST_CASE("halving_line_partition on convex position") {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto pts = convex(2 * n);
    std::vector<Edge> family;
    for (int i = 0; i < static_cast<int>(n); ++i) family.push_back({i, i + static_cast<int>(n)});
    for (std::size_t k = 3; k <= n + 1; ++k) {
      const auto col = halving_line_partition(pts, family, k);
      CHECK(col.num_colors() == static_cast<int>(ceil_div(n, k - 1)));
      CHECK(verify_partition(pts, col));
      for (int c = 0; c < col.num_colors(); ++c) CHECK(is_k_quasi_planar(pts, col.class_edges(c), k).ok);
    }
  }
}

TEST_CASE("fewer than ceil(n/(k-1)) classes force k pairwise crossing family edges") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto inst = gen_perfect_crossing_family_pointset(n, 900 + n);
    for (std::size_t k = 3; k <= n; ++k) {
      const std::size_t fewer = ceil_div(n, k - 1) - 1;
      if (fewer == 0) continue;
      // Every assignment of the family edges to `fewer` classes.
      std::vector<std::size_t> assign(n, 0);
      while (true) {
        bool some_class_fails = false;
        for (std::size_t c = 0; c < fewer; ++c) {
          std::vector<Edge> cls;
          for (std::size_t i = 0; i < n; ++i) if (assign[i] == c) cls.push_back(inst.family[i]);
          some_class_fails = some_class_fails || !is_k_quasi_planar(inst.points, cls, k).ok;
        }
        CHECK(some_class_fails);
        std::size_t pos = 0;
        while (pos < n && ++assign[pos] == fewer) assign[pos++] = 0;
        if (pos == n) break;
      }
    }
  }
}

TEST_CASE("theorem7_partition") {
  SUBCASE("random sets, k = 3") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto pts = gen_random_pointset(12, 40 + seed);
      const auto result = theorem7_partition(pts, 3);
      CHECK(verify_partition(pts, result.coloring));
      for (int c = 0; c < result.coloring.num_colors(); ++c) {
        CHECK(is_k_quasi_planar(pts, result.coloring.class_edges(c), 3).ok);
      }
      const std::size_t bound = ceil_div(result.m, 2) + ceil_div(12 - 2 * result.m, 2);
      if (!result.single_color) CHECK(result.colors_used == bound);
      CHECK(static_cast<std::size_t>(result.coloring.num_colors()) == result.colors_used);
    }
  }
  SUBCASE("k > m gives one color") {
    const auto pts = convex(5);  // m = 2
    const auto result = theorem7_partition(pts, 3);
    CHECK(result.m == 2);
    CHECK(result.single_color);
    CHECK(result.colors_used == 1);
    CHECK(verify_partition(pts, result.coloring));
  }
  SUBCASE("non-family classes are unions of at most k-1 stars") {
    const auto pts = gen_random_pointset(14, 5);
    const auto result = theorem7_partition(pts, 4);
    std::set<int> endpoints;
    for (const auto& e : result.family) {
      endpoints.insert(e.u);
      endpoints.insert(e.v);
    }
    const int inner = static_cast<int>(ceil_div(result.m, 3));
    for (int c = inner; c < result.coloring.num_colors(); ++c) {
      std::set<int> centers;
      const auto cls = result.coloring.class_edges(c);
      for (const auto& e : cls) {
        const bool u_out = !endpoints.count(e.u), v_out = !endpoints.count(e.v);
        CHECK((u_out || v_out));
      }
      CHECK(is_k_quasi_planar(pts, cls, 4).ok);
    }
  }
  SUBCASE("refuses when the family is not proven maximum") {
    CHECK_THROWS_AS(theorem7_partition(convex(12), 3, 2), BudgetExceeded);
  }
  SUBCASE("rejects k < 3") {
    CHECK_THROWS_AS(theorem7_partition(convex(6), 2), InvalidInput);
  }
}

TEST_CASE("verify_partition and verify_spanning_tree") {
  Coloring c(4, 2);
  for (const auto& e : all_edges(4)) c.set(e, 0);
  CHECK(verify_partition(c));
  c.set({0, 3}, Coloring::kUnassigned);
  CHECK_FALSE(verify_partition(c));
  c.set({0, 3}, 2);  // out of range
  CHECK_FALSE(verify_partition(c));

  CHECK(verify_spanning_tree(3, std::vector<Edge>{{0, 1}, {1, 2}}));
  CHECK_FALSE(verify_spanning_tree(4, std::vector<Edge>{{0, 1}, {2, 3}}));
  CHECK_FALSE(verify_spanning_tree(4, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}}));
  const auto dec = double_star_partition(gen_random_pointset(10, 3));
  for (const auto& tree : dec.trees) CHECK(verify_spanning_tree(10, tree));
}
