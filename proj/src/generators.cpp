#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "kpart/error.hpp"
#include "kpart/geometry.hpp"

namespace kpart {

namespace {

constexpr int kMaxAttempts = 64;

// mt19937_64's output sequence is fixed by the standard; the distributions are
// not, so draws are derived from raw outputs to stay bit-reproducible.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  // In [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Radius large enough that rounding to integers keeps consecutive points of an
// n-gon strictly convex.
double circle_radius(std::size_t n) {
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  return std::clamp(4.0 * nn, 1.0e6, static_cast<double>(kMaxCoordinate / 2));
}

Point polar(double radius, double angle) {
  return {std::llround(radius * std::cos(angle)), std::llround(radius * std::sin(angle))};
}

bool clockwise_in_index_order(std::span<const Point> pts) {
  const auto report = validate_pointset(pts);
  if (!report.convex_position) return false;
  const auto& order = *report.convex_cyclic_order;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool collinear_with_any_pair(std::span<const Point> pts, const Point& c) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] == c) return true;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (orientation(pts[i], pts[j], c) == 0) return true;
    }
  }
  return false;
}

}  // namespace

PointSet gen_convex_polygon(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw InvalidInput("gen_convex_polygon needs n >= 3");
  SeededRng rng(seed);
  const double radius = circle_radius(n);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const double phase = rng.unit() * step;
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      Point p = polar(radius, phase - step * static_cast<double>(i));
      p.x += rng.uniform_int(-1, 1);
      p.y += rng.uniform_int(-1, 1);
      pts.push_back(p);
    }
    if (clockwise_in_index_order(pts)) return PointSet::from_points(std::move(pts));
  }
  throw InternalFailure("gen_convex_polygon: no strictly convex realization for n=" +
                        std::to_string(n) + " after " + std::to_string(kMaxAttempts) +
                        " attempts (radius " + std::to_string(radius) + ")");
}

PointSet gen_random_pointset(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("gen_random_pointset needs n >= 1");
  constexpr std::int64_t kBox = 1'000'000;
  SeededRng rng(seed);
  std::vector<Point> pts;
  pts.reserve(n);
  std::size_t rejected = 0;
  const std::size_t retry_budget = 1000 * n;
  while (pts.size() < n) {
    const Point c{rng.uniform_int(-kBox, kBox), rng.uniform_int(-kBox, kBox)};
    if (collinear_with_any_pair(pts, c)) {
      if (++rejected > retry_budget) {
        throw InternalFailure("gen_random_pointset: retry budget exhausted at " +
                              std::to_string(pts.size()) + " of " + std::to_string(n) +
                              " points");
      }
      continue;
    }
    pts.push_back(c);
  }
  return PointSet::from_points(std::move(pts));
}

CrossingFamilyInstance gen_perfect_crossing_family_pointset(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("gen_perfect_crossing_family_pointset needs n >= 1");
  SeededRng rng(seed);
  const std::size_t count = 2 * n;
  const double radius = circle_radius(count);
  const double step = std::numbers::pi / static_cast<double>(n);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    // Slot j and slot j+n are the ends of a near-diametral chord.
    const double phase = rng.unit() * 2.0 * std::numbers::pi;
    std::vector<Point> slots;
    slots.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
      const double jitter = (rng.unit() - 0.5) * 0.5 * step;
      const double shrink = 1.0 - rng.unit() * 0.3 / static_cast<double>(n);
      slots.push_back(polar(radius * shrink, phase + step * static_cast<double>(j) + jitter));
    }

    // Shuffle so that point indices carry no structure.
    std::vector<int> label(count);
    for (std::size_t j = 0; j < count; ++j) label[j] = static_cast<int>(j);
    for (std::size_t j = count; j > 1; --j) {
      std::swap(label[j - 1], label[rng.uniform_int(0, static_cast<std::int64_t>(j) - 1)]);
    }
    std::vector<Point> pts(count);
    for (std::size_t j = 0; j < count; ++j) pts[label[j]] = slots[j];

    std::vector<Edge> family;
    family.reserve(n);
    for (std::size_t j = 0; j < n; ++j) family.push_back(Edge::make(label[j], label[j + n]));
    std::sort(family.begin(), family.end());

    if (count >= 3 && !validate_pointset(pts).general_position) continue;
    bool certified = true;
    for (std::size_t a = 0; a < n && certified; ++a) {
      for (std::size_t b = a + 1; b < n && certified; ++b) {
        certified = segments_cross(pts[family[a].u], pts[family[a].v], pts[family[b].u],
                                   pts[family[b].v]);
      }
    }
    if (certified) return {PointSet::from_points(std::move(pts)), std::move(family)};
  }
  throw InternalFailure("gen_perfect_crossing_family_pointset: no certified instance for n=" +
                        std::to_string(n) + " after " + std::to_string(kMaxAttempts) +
                        " attempts");
}

}  // namespace kpart
