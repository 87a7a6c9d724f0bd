#pragma once

// Closed-form bounds on k-plane graphs and partition sizes, crossing counts,
// and an exact search for the largest convex k-plane graph.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kpart/convex_kplanar.hpp"
#include "kpart/geometry.hpp"

namespace kpart {

// Exact rational with positive denominator, kept in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  std::int64_t floor() const noexcept;
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;  // "17/2" or "10"

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// (k+4)/2 * n - (k+3): edge bound for convex k-plane graphs, k in 0..4.
Rational edge_bound_small_k(std::size_t n, std::size_t k);

// sqrt(243k/40) * n for k >= 5, in double precision.
double edge_bound_general(std::size_t n, std::size_t k);

// Unordered crossing pairs: interleaving on a convex n-gon, or exact predicates.
std::size_t count_crossings(std::size_t n, std::span<const ConvexEdge> edges);
std::size_t count_crossings(const PointSet& points, std::span<const Edge> edges);

// (20/243) e^3 / n^2; requires e >= 9n/2.
double crossing_lemma_bound(std::size_t n, std::size_t e);

// crossings >= (20/243) e^3 / n^2, compared exactly in integers.
bool crossing_lemma_holds(std::size_t n, std::size_t e, std::size_t crossings);

// 5e - 15n + 25; meaningful when e >= 4n - 7.
std::int64_t peeling_bound(std::size_t n, std::size_t e);

inline constexpr std::uint64_t kDefaultOracleBudget = 2'000'000'000;

struct KPlaneSubgraph {
  std::size_t size = 0;              // hull edges included
  std::vector<ConvexEdge> witness;   // the edge set attaining size
  bool proven_optimal = false;
  std::uint64_t nodes = 0;
};

// Largest convex graph on n points in which every edge crosses at most k
// others. Branch and bound over the diagonals; hull edges cross nothing and are
// always included. Supports n <= 12.
KPlaneSubgraph max_k_plane_subgraph(std::size_t n, std::size_t k,
                                    std::uint64_t budget = kDefaultOracleBudget);

struct ColorBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
};

// lower = ceil((n-1) / (2 sqrt(243/40) sqrt(k))), upper = ceil(n / choose_block_size(k)).
ColorBounds kplanar_color_bounds(std::size_t n, std::size_t k);

// ceil(n(n-3) / (3n-8)) colors are needed in any 1-planar partition; n >= 5.
std::size_t one_planar_lower_bound(std::size_t n);

struct QuasiColorBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool single_color = false;  // k > m
};

// (ceil(m/(k-1)), ceil(m/(k-1)) + ceil((n-2m)/(k-1))) for 3 <= k <= m, 2m <= n.
QuasiColorBounds quasi_color_bounds(std::size_t n, std::size_t m, std::size_t k);

// One row of a bound table: a formula evaluated on an instance and compared
// with an observed value.
struct BoundReport {
  std::string name;
  std::string instance;
  std::string relation;  // "<=" or ">=": observed relation formula
  std::string formula_value;
  std::int64_t observed = 0;
  bool satisfied = false;
};

}  // namespace kpart
