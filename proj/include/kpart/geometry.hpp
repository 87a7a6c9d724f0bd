#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kpart {

// Coordinates are capped so every orientation determinant is exact in 128-bit.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 30;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

// +1 counter-clockwise, -1 clockwise, 0 collinear. Exact.
int orientation(const Point& a, const Point& b, const Point& c) noexcept;

// Proper crossing of the open segments ab and cd. Segments sharing an endpoint
// never cross; the caller guarantees general position otherwise.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) noexcept;

// An edge of K(P): unordered index pair stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static constexpr Edge make(int a, int b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }
  constexpr bool touches(int w) const noexcept { return u == w || v == w; }
  constexpr bool shares_endpoint(const Edge& o) const noexcept {
    return touches(o.u) || touches(o.v);
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

constexpr std::size_t edge_count(std::size_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

// Position of e in the lexicographic enumeration of the edges of K_n.
constexpr std::size_t edge_index(std::size_t n, const Edge& e) noexcept {
  const auto u = static_cast<std::size_t>(e.u);
  const auto v = static_cast<std::size_t>(e.v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

// All C(n,2) edges in lexicographic order.
std::vector<Edge> all_edges(std::size_t n);

// A validated point set: coordinates within the cap, pairwise distinct, no three
// collinear. Degenerate input is rejected at construction.
class PointSet {
 public:
  PointSet() = default;

  // Throws InvalidInput naming the offending points.
  static PointSet from_points(std::vector<Point> points);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point> points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  bool cross(const Edge& e, const Edge& f) const noexcept {
    return segments_cross(points_[e.u], points_[e.v], points_[f.u], points_[f.v]);
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {}

  std::vector<Point> points_;
};

struct PointSetReport {
  bool general_position = false;
  bool convex_position = false;
  // Clockwise hull order starting at the smallest index; set only when convex.
  std::optional<std::vector<int>> convex_cyclic_order;
  // First degeneracy found, for diagnostics.
  std::optional<std::array<int, 3>> collinear_triple;
  std::optional<std::array<int, 2>> duplicate_pair;
};

// Requires at least three points (InvalidInput otherwise). Accepts raw points,
// so degenerate input is reported rather than thrown.
PointSetReport validate_pointset(std::span<const Point> points);
inline PointSetReport validate_pointset(const PointSet& points) {
  return validate_pointset(points.points());
}

// Instance generators. All are deterministic per (n, seed).

// n points near a circle, in convex position, clockwise in index order.
PointSet gen_convex_polygon(std::size_t n, std::uint64_t seed);

// n points uniform in a fixed box, collinear triples rejected.
PointSet gen_random_pointset(std::size_t n, std::uint64_t seed);

struct CrossingFamilyInstance {
  PointSet points;           // 2n points
  std::vector<Edge> family;  // n pairwise crossing edges covering every point once
};

CrossingFamilyInstance gen_perfect_crossing_family_pointset(std::size_t n, std::uint64_t seed);

}  // namespace kpart
