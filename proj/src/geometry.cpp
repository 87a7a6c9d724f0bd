#include "kpart/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "kpart/error.hpp"

namespace kpart {

namespace {

__extension__ typedef __int128 Wide;

Wide cross(const Point& o, const Point& a, const Point& b) noexcept {
  return Wide{a.x - o.x} * Wide{b.y - o.y} - Wide{a.y - o.y} * Wide{b.x - o.x};
}

// Direction from a to b, flipped into the half-open upper half-plane so that
// directions can be totally ordered by angle in [0, pi).
Point canonical_direction(const Point& a, const Point& b) noexcept {
  Point d{b.x - a.x, b.y - a.y};
  if (d.y < 0 || (d.y == 0 && d.x < 0)) d = {-d.x, -d.y};
  return d;
}

std::optional<std::array<int, 2>> find_duplicate(std::span<const Point> pts) {
  std::vector<int> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return pts[a] == pts[b] ? a < b : pts[a] < pts[b];
  });
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (pts[idx[i - 1]] == pts[idx[i]]) return std::array{idx[i - 1], idx[i]};
  }
  return std::nullopt;
}

// O(n^2 log n): around every point, sort the other points by direction and look
// for two with the same direction.
std::optional<std::array<int, 3>> find_collinear_triple(std::span<const Point> pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> others;
  others.reserve(pts.size());
  for (int i = 0; i < n; ++i) {
    others.clear();
    for (int j = 0; j < n; ++j) {
      if (j != i) others.push_back(j);
    }
    const Point origin{0, 0};
    auto dir = [&](int j) { return canonical_direction(pts[i], pts[j]); };
    std::sort(others.begin(), others.end(),
              [&](int a, int b) { return cross(origin, dir(a), dir(b)) > 0; });
    for (std::size_t t = 1; t < others.size(); ++t) {
      if (cross(origin, dir(others[t - 1]), dir(others[t])) == 0) {
        std::array tri{i, others[t - 1], others[t]};
        std::sort(tri.begin(), tri.end());
        return tri;
      }
    }
  }
  return std::nullopt;
}

// Andrew's monotone chain; strict turns only. Returns hull indices clockwise.
std::vector<int> convex_hull_clockwise(std::span<const Point> pts) {
  std::vector<int> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pts[a] < pts[b]; });
  std::vector<int> hull(2 * idx.size());
  std::size_t k = 0;
  for (int i : idx) {
    while (k >= 2 && cross(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
    hull[k++] = i;
  }
  for (std::size_t t = idx.size() - 1, lower = k + 1; t-- > 0;) {
    const int i = idx[t];
    while (k >= lower && cross(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);  // last point repeats the first
  std::reverse(hull.begin(), hull.end());
  return hull;
}

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) noexcept {
  const Wide det = cross(a, b, c);
  return (det > 0) - (det < 0);
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) noexcept {
  if (a == c || a == d || b == c || b == d) return false;
  return orientation(a, b, c) * orientation(a, b, d) < 0 &&
         orientation(c, d, a) * orientation(c, d, b) < 0;
}

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::vector<Edge> all_edges(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(edge_count(n));
  for (int u = 0; u < static_cast<int>(n); ++u) {
    for (int v = u + 1; v < static_cast<int>(n); ++v) edges.push_back({u, v});
  }
  return edges;
}

PointSet PointSet::from_points(std::vector<Point> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (p.x < -kMaxCoordinate || p.x > kMaxCoordinate || p.y < -kMaxCoordinate ||
        p.y > kMaxCoordinate) {
      throw InvalidInput("point " + std::to_string(i) + " exceeds the coordinate cap 2^30");
    }
  }
  if (auto dup = find_duplicate(points)) {
    throw InvalidInput("duplicate points " + std::to_string((*dup)[0]) + " and " +
                       std::to_string((*dup)[1]));
  }
  if (auto tri = find_collinear_triple(points)) {
    throw InvalidInput("collinear points " + std::to_string((*tri)[0]) + ", " +
                       std::to_string((*tri)[1]) + ", " + std::to_string((*tri)[2]));
  }
  return PointSet(std::move(points));
}

PointSetReport validate_pointset(std::span<const Point> points) {
  if (points.size() < 3) throw InvalidInput("validate_pointset needs at least 3 points");
  PointSetReport report;
  report.duplicate_pair = find_duplicate(points);
  if (!report.duplicate_pair) report.collinear_triple = find_collinear_triple(points);
  report.general_position = !report.duplicate_pair && !report.collinear_triple;
  if (!report.general_position) return report;

  auto hull = convex_hull_clockwise(points);
  report.convex_position = hull.size() == points.size();
  if (report.convex_position) {
    std::rotate(hull.begin(), std::min_element(hull.begin(), hull.end()), hull.end());
    report.convex_cyclic_order = std::move(hull);
  }
  return report;
}

}  // namespace kpart
