#include <cmath>
#include <cstdio>
#include <sstream>

#include "kpart/error.hpp"
#include "kpart/io.hpp"
#include "kpart/quasi_planar.hpp"

namespace kpart {

namespace {

std::string real(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

BoundReport upper(std::string name, std::string instance, std::int64_t observed,
                  std::string formula, bool satisfied) {
  return {std::move(name), std::move(instance), "<=", std::move(formula), observed, satisfied};
}

BoundReport lower(std::string name, std::string instance, std::int64_t observed,
                  std::string formula, bool satisfied) {
  return {std::move(name), std::move(instance), ">=", std::move(formula), observed, satisfied};
}

std::int64_t i64(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

std::vector<BoundReport> bound_table(std::size_t n, std::size_t k, const PointSet* instance,
                                     std::uint64_t budget) {
  if (n < 3) throw InvalidInput("bound table needs n >= 3");
  std::vector<BoundReport> rows;
  const std::string convex = "convex n=" + std::to_string(n) + " k=" + std::to_string(k);

  // Largest convex k-plane graph against the edge bounds (exact search, small n).
  if (n <= 9) {
    const auto best = max_k_plane_subgraph(n, k, budget);
    if (best.proven_optimal) {
      if (k <= 4) {
        const auto bound = edge_bound_small_k(n, k);
        rows.push_back(upper("kplane_max_edges", convex, i64(best.size), bound.to_string(),
                             i64(best.size) <= bound.floor()));
      } else {
        const double bound = edge_bound_general(n, k);
        rows.push_back(upper("kplane_max_edges", convex, i64(best.size), real(bound),
                             static_cast<double>(best.size) <= bound));
      }
    }
  }

  // Slope partition with the largest block size that is still k-planar.
  if (k >= 1) {
    const std::size_t s = choose_block_size(k);
    const auto coloring = slope_partition(n, s);
    const auto colors = static_cast<std::size_t>(coloring.num_colors());
    const auto bounds = kplanar_color_bounds(n, k);
    const std::string inst = convex + " s=" + std::to_string(s);
    rows.push_back(lower("kplanar_colors_lower", inst, i64(colors), std::to_string(bounds.lower),
                         colors >= bounds.lower));
    // s >= sqrt(2k) gives ceil(n/s) <= ceil(n / sqrt(2k)).
    const auto sqrt_bound = static_cast<std::size_t>(
        std::ceil(static_cast<double>(n) / std::sqrt(2.0 * static_cast<double>(k))));
    rows.push_back(upper("kplanar_colors_upper", inst, i64(colors), std::to_string(sqrt_bound),
                         colors <= sqrt_bound));
    if (k == 1 && n >= 5) {
      const auto lb = one_planar_lower_bound(n);
      rows.push_back(lower("one_planar_lower", inst, i64(colors), std::to_string(lb), colors >= lb));
    }
    // Double counting on every class: cr <= k e / 2.
    std::size_t worst = 0;
    std::size_t worst_edges = 0;
    bool all = true;
    for (int c = 0; c < coloring.num_colors(); ++c) {
      std::vector<ConvexEdge> edges;
      for (const Edge& e : coloring.class_edges(c)) edges.push_back(ConvexEdge::from(e));
      const auto cr = count_crossings(n, edges);
      all = all && 2 * cr <= k * edges.size();
      if (cr >= worst) {
        worst = cr;
        worst_edges = edges.size();
      }
    }
    rows.push_back(upper("class_crossings_double_count", inst, i64(worst),
                         real(static_cast<double>(k * worst_edges) / 2.0), all));
  }

  // Crossing lemma on convex K_n.
  const std::size_t e = edge_count(n);
  const std::size_t cr = n >= 4 ? n * (n - 1) * (n - 2) * (n - 3) / 24 : 0;
  const std::string kn = "convex K_" + std::to_string(n) + " e=" + std::to_string(e);
  if (2 * e >= 9 * n) {
    rows.push_back(lower("crossing_lemma", kn, i64(cr), real(crossing_lemma_bound(n, e)),
                         crossing_lemma_holds(n, e, cr)));
  }
  if (e + 7 >= 4 * n) {
    const auto bound = peeling_bound(n, e);
    rows.push_back(lower("peeling", kn, i64(cr), std::to_string(bound), i64(cr) >= bound));
  }

  if (instance != nullptr && k >= 3) {
    const auto result = theorem7_partition(*instance, k, budget);
    const auto bounds = quasi_color_bounds(instance->size(), result.m, k);
    const std::string inst = "instance n=" + std::to_string(instance->size()) +
                             " m=" + std::to_string(result.m) + " k=" + std::to_string(k);
    const auto used = result.colors_used;
    rows.push_back(upper("quasi_colors_upper", inst, i64(used), std::to_string(bounds.upper),
                         used <= bounds.upper));
    rows.push_back(lower("quasi_colors_lower", inst, i64(used), std::to_string(bounds.lower),
                         used >= bounds.lower));
  }
  return rows;
}

std::string format_bound_table(std::span<const BoundReport> rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    out << "BOUND " << row.name << " instance=" << '"' << row.instance << '"'
        << " observed=" << row.observed << ' ' << row.relation << " formula=" << row.formula_value
        << " status=" << (row.satisfied ? "ok" : "VIOLATED") << '\n';
  }
  return out.str();
}

}  // namespace kpart
