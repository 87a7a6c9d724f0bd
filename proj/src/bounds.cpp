#include "kpart/bounds.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numeric>

#include "kpart/error.hpp"

namespace kpart {

namespace {

__extension__ typedef __int128 Wide;

std::int64_t to_i64(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidInput("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::floor() const noexcept {
  const std::int64_t q = num_ / den_;
  return (num_ % den_ != 0 && num_ < 0) ? q - 1 : q;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return Wide{a.num_} * b.den_ <=> Wide{b.num_} * a.den_;
}

Rational edge_bound_small_k(std::size_t n, std::size_t k) {
  if (k > 4) throw InvalidInput("the small-k edge bound holds only for k in 0..4; use edge_bound_general");
  if (n < 2) throw InvalidInput("edge_bound_small_k needs n >= 2");
  const auto kk = to_i64(k);
  return Rational((kk + 4) * to_i64(n) - 2 * (kk + 3), 2);
}

double edge_bound_general(std::size_t n, std::size_t k) {
  if (k < 5) throw InvalidInput("edge_bound_general needs k >= 5; use edge_bound_small_k");
  return std::sqrt(243.0 * static_cast<double>(k) / 40.0) * static_cast<double>(n);
}

std::size_t count_crossings(std::size_t n, std::span<const ConvexEdge> edges) {
  std::size_t total = 0;
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      if (convex_edges_cross(n, edges[a], edges[b])) ++total;
    }
  }
  return total;
}

std::size_t count_crossings(const PointSet& points, std::span<const Edge> edges) {
  std::size_t total = 0;
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      if (points.cross(edges[a], edges[b])) ++total;
    }
  }
  return total;
}

double crossing_lemma_bound(std::size_t n, std::size_t e) {
  if (n == 0 || 2 * e < 9 * n) {
    throw InvalidInput("crossing lemma requires e >= 9n/2 (got n=" + std::to_string(n) +
                       ", e=" + std::to_string(e) + ")");
  }
  const double ed = static_cast<double>(e);
  const double nd = static_cast<double>(n);
  return 20.0 / 243.0 * ed * ed * ed / (nd * nd);
}

bool crossing_lemma_holds(std::size_t n, std::size_t e, std::size_t crossings) {
  crossing_lemma_bound(n, e);  // precondition check
  const Wide lhs = Wide{243} * Wide{to_i64(n)} * to_i64(n) * to_i64(crossings);
  const Wide rhs = Wide{20} * Wide{to_i64(e)} * to_i64(e) * to_i64(e);
  return lhs >= rhs;
}

std::int64_t peeling_bound(std::size_t n, std::size_t e) {
  return 5 * to_i64(e) - 15 * to_i64(n) + 25;
}

namespace {

class KPlaneSearch {
 public:
  KPlaneSearch(std::size_t n, std::size_t k, std::uint64_t budget) : n_(n), k_(k), budget_(budget) {
    for (int i = 0; i < static_cast<int>(n); ++i) {
      for (int j = i + 2; j < static_cast<int>(n); ++j) {
        if (i == 0 && j == static_cast<int>(n) - 1) continue;
        diagonals_.push_back({i, j});
      }
    }
    for (std::size_t a = 0; a < diagonals_.size(); ++a) {
      for (std::size_t b = 0; b < diagonals_.size(); ++b) {
        if (convex_edges_cross(n, diagonals_[a], diagonals_[b])) cross_[a] |= bit(b);
      }
    }
  }

  KPlaneSubgraph run() {
    std::array<std::uint8_t, 64> counts{};
    descend(0, 0, 0, counts);
    KPlaneSubgraph result;
    result.proven_optimal = !stopped_;
    result.nodes = nodes_;
    for (int i = 0; i < static_cast<int>(n_); ++i) {
      result.witness.push_back(ConvexEdge::make(i, (i + 1) % static_cast<int>(n_)));
    }
    for (std::size_t d = 0; d < diagonals_.size(); ++d) {
      if (best_mask_ & bit(d)) result.witness.push_back(diagonals_[d]);
    }
    std::sort(result.witness.begin(), result.witness.end());
    result.size = result.witness.size();
    return result;
  }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  bool addable(std::size_t d, std::uint64_t chosen, std::uint64_t saturated) const {
    return (cross_[d] & saturated) == 0 &&
           static_cast<std::size_t>(std::popcount(cross_[d] & chosen)) <= k_;
  }

  void descend(std::size_t idx, std::uint64_t chosen, std::uint64_t saturated,
               const std::array<std::uint8_t, 64>& counts) {
    if (stopped_) return;
    if (++nodes_ > budget_) {
      stopped_ = true;
      return;
    }
    const auto size = static_cast<std::size_t>(std::popcount(chosen));
    if (size > best_size_) {
      best_size_ = size;
      best_mask_ = chosen;
    }
    std::size_t optimistic = size;
    for (std::size_t d = idx; d < diagonals_.size(); ++d) {
      if (addable(d, chosen, saturated)) ++optimistic;
    }
    if (optimistic <= best_size_) return;

    // Next diagonal that can still be added; skipped ones stay blocked below.
    std::size_t d = idx;
    while (d < diagonals_.size() && !addable(d, chosen, saturated)) ++d;
    if (d == diagonals_.size()) return;

    auto with = counts;
    std::uint64_t with_saturated = saturated;
    const std::uint64_t hit = cross_[d] & chosen;
    with[d] = static_cast<std::uint8_t>(std::popcount(hit));
    if (with[d] == k_) with_saturated |= bit(d);
    for (std::uint64_t rest = hit; rest; rest &= rest - 1) {
      const auto c = static_cast<std::size_t>(std::countr_zero(rest));
      if (++with[c] == k_) with_saturated |= bit(c);
    }
    descend(d + 1, chosen | bit(d), with_saturated, with);
    descend(d + 1, chosen, saturated, counts);
  }

  std::size_t n_;
  std::size_t k_;
  std::uint64_t budget_;
  std::vector<ConvexEdge> diagonals_;
  std::array<std::uint64_t, 64> cross_{};
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  std::size_t best_size_ = 0;
  std::uint64_t best_mask_ = 0;
};

}  // namespace

KPlaneSubgraph max_k_plane_subgraph(std::size_t n, std::size_t k, std::uint64_t budget) {
  if (n < 3 || n > 12) throw InvalidInput("max_k_plane_subgraph supports 3 <= n <= 12");
  return KPlaneSearch(n, k, budget).run();
}

ColorBounds kplanar_color_bounds(std::size_t n, std::size_t k) {
  if (n < 3 || k < 1) throw InvalidInput("kplanar_color_bounds needs n >= 3 and k >= 1");
  // 2 * sqrt(243/40) ~ 4.9295; the exact expression is used, not a rounded constant.
  const double denom = 2.0 * std::sqrt(243.0 / 40.0) * std::sqrt(static_cast<double>(k));
  ColorBounds bounds;
  bounds.lower = static_cast<std::size_t>(std::ceil(static_cast<double>(n - 1) / denom));
  const std::size_t s = choose_block_size(k);
  bounds.upper = (n + s - 1) / s;
  return bounds;
}

std::size_t one_planar_lower_bound(std::size_t n) {
  if (n < 5) throw InvalidInput("one_planar_lower_bound needs n >= 5");
  const std::size_t num = n * (n - 3);
  const std::size_t den = 3 * n - 8;
  return (num + den - 1) / den;
}

QuasiColorBounds quasi_color_bounds(std::size_t n, std::size_t m, std::size_t k) {
  if (k < 3) throw InvalidInput("quasi_color_bounds needs k >= 3");
  if (2 * m > n) throw InvalidInput("a crossing family of size m needs 2m <= n points");
  if (k > m) return {1, 1, true};
  const std::size_t step = k - 1;
  const std::size_t lower = (m + step - 1) / step;
  return {lower, lower + (n - 2 * m + step - 1) / step, false};
}

}  // namespace kpart
