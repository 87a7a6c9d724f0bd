#include "kpart/kpart.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "kpart/bounds.hpp"
#include "kpart/convex_kplanar.hpp"
#include "kpart/error.hpp"
#include "kpart/io.hpp"
#include "kpart/quasi_planar.hpp"

struct kp_pointset {
  kpart::PointSet points;
  std::vector<kpart::Edge> family;
};

struct kp_coloring {
  kpart::Coloring coloring;
};

namespace {

thread_local std::string last_error;

std::uint64_t clique_budget(std::uint64_t budget) { return budget ? budget : kpart::kDefaultCliqueBudget; }
std::uint64_t oracle_budget(std::uint64_t budget) { return budget ? budget : kpart::kDefaultOracleBudget; }

class ArgumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

kp_status fail(kp_status status, const char* what) {
  last_error = what;
  return status;
}

template <typename Fn>
kp_status guarded(Fn&& fn) {
  try {
    fn();
    return KP_OK;
  } catch (const ArgumentError& e) {
    return fail(KP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const kpart::ParseError& e) {
    return fail(KP_ERR_PARSE, e.what());
  } catch (const kpart::InvalidInput& e) {
    return fail(KP_ERR_INVALID_INPUT, e.what());
  } catch (const kpart::BudgetExceeded& e) {
    return fail(KP_ERR_BUDGET_EXCEEDED, e.what());
  } catch (const std::bad_alloc&) {
    return fail(KP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KP_ERR_INTERNAL, e.what());
  }
}

template <typename T>
void require(const T* ptr, const char* name) {
  if (ptr == nullptr) throw ArgumentError(std::string(name) + " is null");
}

char* duplicate(const std::string& text) {
  auto* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

kpart::Edge checked_edge(std::size_t n, int u, int v) {
  if (u < 0 || v < 0 || u == v || static_cast<std::size_t>(u) >= n ||
      static_cast<std::size_t>(v) >= n) {
    throw ArgumentError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                        " out of range for n=" + std::to_string(n));
  }
  return kpart::Edge::make(u, v);
}

std::vector<kpart::Edge> read_edges(std::size_t n, const int* edges_uv, std::size_t count) {
  std::vector<kpart::Edge> edges;
  if (count > 0) require(edges_uv, "edges_uv");
  for (std::size_t i = 0; i < count; ++i) edges.push_back(checked_edge(n, edges_uv[2 * i], edges_uv[2 * i + 1]));
  return edges;
}

void write_edges(std::span<const kpart::Edge> edges, int* out) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out[2 * i] = edges[i].u;
    out[2 * i + 1] = edges[i].v;
  }
}

kp_coloring* wrap(kpart::Coloring coloring) { return new kp_coloring{std::move(coloring)}; }

// Realization used when a verifier gets no point set: any convex placement in
// index order has the same crossings.
kpart::PointSet points_or_convex(const kp_pointset* points, std::size_t n) {
  if (points != nullptr) {
    if (points->points.size() != n) {
      throw kpart::InvalidInput("coloring is for n=" + std::to_string(n) + " but the point set has " +
                                std::to_string(points->points.size()) + " points");
    }
    return points->points;
  }
  if (n < 3) {
    std::vector<kpart::Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(i * i)});
    return kpart::PointSet::from_points(std::move(pts));
  }
  return kpart::gen_convex_polygon(n, 0);
}

}  // namespace

extern "C" {

const char* kp_status_name(kp_status status) {
  switch (status) {
    case KP_OK: return "ok";
    case KP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case KP_ERR_INVALID_INPUT: return "invalid input";
    case KP_ERR_PARSE: return "parse error";
    case KP_ERR_BUDGET_EXCEEDED: return "budget exceeded";
    case KP_ERR_INTERNAL: return "internal failure";
  }
  return "unknown status";
}

const char* kp_last_error(void) { return last_error.c_str(); }

void kp_string_free(char* text) { std::free(text); }

kp_status kp_pointset_create(const int64_t* xy, size_t count, kp_pointset** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(xy, "xy");
    std::vector<kpart::Point> pts;
    for (std::size_t i = 0; i < count; ++i) pts.push_back({xy[2 * i], xy[2 * i + 1]});
    *out = new kp_pointset{kpart::PointSet::from_points(std::move(pts)), {}};
  });
}

kp_status kp_pointset_gen_convex(size_t n, uint64_t seed, kp_pointset** out) {
  return guarded([&] {
    require(out, "out");
    *out = new kp_pointset{kpart::gen_convex_polygon(n, seed), {}};
  });
}

kp_status kp_pointset_gen_random(size_t n, uint64_t seed, kp_pointset** out) {
  return guarded([&] {
    require(out, "out");
    *out = new kp_pointset{kpart::gen_random_pointset(n, seed), {}};
  });
}

kp_status kp_pointset_gen_crossing_family(size_t n, uint64_t seed, kp_pointset** out) {
  return guarded([&] {
    require(out, "out");
    auto instance = kpart::gen_perfect_crossing_family_pointset(n, seed);
    *out = new kp_pointset{std::move(instance.points), std::move(instance.family)};
  });
}

kp_status kp_pointset_parse(const char* text, kp_pointset** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    auto instance = kpart::parse_instance(text);
    *out = new kp_pointset{std::move(instance.points), instance.family.value_or(std::vector<kpart::Edge>{})};
  });
}

kp_status kp_pointset_write(const kp_pointset* points, char** out) {
  return guarded([&] {
    require(points, "points");
    require(out, "out");
    *out = duplicate(kpart::write_instance(points->points, points->family));
  });
}

void kp_pointset_free(kp_pointset* points) { delete points; }

size_t kp_pointset_size(const kp_pointset* points) { return points ? points->points.size() : 0; }

kp_status kp_pointset_point(const kp_pointset* points, size_t i, int64_t* x, int64_t* y) {
  return guarded([&] {
    require(points, "points");
    require(x, "x");
    require(y, "y");
    if (i >= points->points.size()) throw ArgumentError("point index out of range");
    *x = points->points[i].x;
    *y = points->points[i].y;
  });
}

size_t kp_pointset_family_size(const kp_pointset* points) { return points ? points->family.size() : 0; }

kp_status kp_pointset_family_edge(const kp_pointset* points, size_t i, int* u, int* v) {
  return guarded([&] {
    require(points, "points");
    require(u, "u");
    require(v, "v");
    if (i >= points->family.size()) throw ArgumentError("family index out of range");
    *u = points->family[i].u;
    *v = points->family[i].v;
  });
}

kp_status kp_pointset_validate(const kp_pointset* points, kp_pointset_report* report, int* cyclic_order) {
  return guarded([&] {
    require(points, "points");
    require(report, "report");
    const auto r = kpart::validate_pointset(points->points);
    report->general_position = r.general_position;
    report->convex_position = r.convex_position;
    if (cyclic_order != nullptr && r.convex_cyclic_order) {
      std::copy(r.convex_cyclic_order->begin(), r.convex_cyclic_order->end(), cyclic_order);
    }
  });
}

kp_status kp_max_crossing_family(const kp_pointset* points, uint64_t budget, size_t* m,
                                 int* proven_optimal, int* edges_uv) {
  return guarded([&] {
    require(points, "points");
    require(m, "m");
    const auto family = kpart::max_crossing_family(kpart::build_crossing_graph(points->points), clique_budget(budget));
    *m = family.size();
    if (proven_optimal != nullptr) *proven_optimal = family.proven_optimal;
    if (edges_uv != nullptr) write_edges(family.edges, edges_uv);
  });
}

kp_status kp_coloring_create(size_t n, int num_colors, kp_coloring** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(kpart::Coloring(n, num_colors));
  });
}

kp_status kp_coloring_set(kp_coloring* coloring, int u, int v, int color) {
  return guarded([&] {
    require(coloring, "coloring");
    const auto e = checked_edge(coloring->coloring.n(), u, v);
    if (color < -1 || color >= coloring->coloring.num_colors()) throw ArgumentError("color out of range");
    coloring->coloring.set(e, color);
  });
}

kp_status kp_coloring_get(const kp_coloring* coloring, int u, int v, int* color) {
  return guarded([&] {
    require(coloring, "coloring");
    require(color, "color");
    *color = coloring->coloring.color_of(checked_edge(coloring->coloring.n(), u, v));
  });
}

size_t kp_coloring_n(const kp_coloring* coloring) { return coloring ? coloring->coloring.n() : 0; }

int kp_coloring_num_colors(const kp_coloring* coloring) {
  return coloring ? coloring->coloring.num_colors() : 0;
}

kp_status kp_coloring_parse(const char* text, kp_coloring** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(kpart::parse_coloring(text));
  });
}

kp_status kp_coloring_write(const kp_coloring* coloring, char** out) {
  return guarded([&] {
    require(coloring, "coloring");
    require(out, "out");
    *out = duplicate(kpart::write_coloring(coloring->coloring));
  });
}

void kp_coloring_free(kp_coloring* coloring) { delete coloring; }

kp_status kp_partition_slope(size_t n, size_t s, kp_coloring** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(kpart::slope_partition(n, s));
  });
}

kp_status kp_partition_double_star(const kp_pointset* points, kp_coloring** out) {
  return guarded([&] {
    require(points, "points");
    require(out, "out");
    *out = wrap(kpart::double_star_partition(points->points).to_coloring(points->points.size()));
  });
}

kp_status kp_partition_halving(const kp_pointset* points, size_t k, kp_coloring** out) {
  return guarded([&] {
    require(points, "points");
    require(out, "out");
    if (points->family.empty()) throw kpart::InvalidInput("point set carries no crossing family");
    *out = wrap(kpart::halving_line_partition(points->points, points->family, k));
  });
}

kp_status kp_partition_theorem7(const kp_pointset* points, size_t k, uint64_t budget,
                                kp_coloring** out, kp_theorem7_report* report) {
  return guarded([&] {
    require(points, "points");
    require(out, "out");
    auto result = kpart::theorem7_partition(points->points, k, clique_budget(budget));
    if (report != nullptr) {
      report->m = result.m;
      report->colors_used = result.colors_used;
      report->single_color = result.single_color;
    }
    *out = wrap(std::move(result.coloring));
  });
}

kp_status kp_verify_partition(const kp_pointset* points, const kp_coloring* coloring, int* ok) {
  return guarded([&] {
    require(coloring, "coloring");
    require(ok, "ok");
    *ok = points ? kpart::verify_partition(points->points, coloring->coloring)
                 : kpart::verify_partition(coloring->coloring);
  });
}

kp_status kp_verify_k_planar(const kp_pointset* points, const kp_coloring* coloring, size_t k,
                             kp_kplanar_result* result) {
  return guarded([&] {
    require(coloring, "coloring");
    require(result, "result");
    const auto& c = coloring->coloring;
    if (points != nullptr && points->points.size() != c.n()) {
      throw kpart::InvalidInput("coloring and point set disagree on n");
    }
    *result = {1, -1, -1, -1, 0, 0};
    for (int color = 0; color < c.num_colors(); ++color) {
      const auto edges = c.class_edges(color);
      // With k = 0 the witness is an edge with the most same-class crossings.
      kpart::KPlanarCheck check;
      if (points != nullptr) {
        check = kpart::verify_k_planar(points->points, edges, 0);
      } else {
        std::vector<kpart::ConvexEdge> convex;
        for (const auto& e : edges) convex.push_back(kpart::ConvexEdge::from(e));
        check = kpart::verify_k_planar(c.n(), convex, 0);
      }
      const std::size_t worst = check.ok ? 0 : check.witness_crossings;
      result->max_crossings = std::max(result->max_crossings, worst);
      if (worst > k && result->ok) {
        result->ok = 0;
        result->color = color;
        result->u = check.witness->u;
        result->v = check.witness->v;
        result->crossings = worst;
      }
    }
  });
}

kp_status kp_verify_k_quasi_planar(const kp_pointset* points, const kp_coloring* coloring, size_t k,
                                   uint64_t budget, int* ok, int* color, int* witness_uv,
                                   size_t witness_capacity, size_t* witness_size) {
  return guarded([&] {
    require(coloring, "coloring");
    require(ok, "ok");
    const auto& c = coloring->coloring;
    const auto realized = points_or_convex(points, c.n());
    *ok = 1;
    if (color != nullptr) *color = -1;
    if (witness_size != nullptr) *witness_size = 0;
    for (int cl = 0; cl < c.num_colors(); ++cl) {
      const auto edges = c.class_edges(cl);
      const auto check = kpart::is_k_quasi_planar(realized, edges, k, clique_budget(budget));
      if (!check.ok) {
        *ok = 0;
        if (color != nullptr) *color = cl;
        const std::size_t count = std::min(witness_capacity, check.witness.size());
        if (witness_uv != nullptr) write_edges(std::span(check.witness).first(count), witness_uv);
        if (witness_size != nullptr) *witness_size = count;
        return;
      }
    }
  });
}

kp_status kp_verify_spanning_trees(const kp_coloring* coloring, int* ok, int* bad_color) {
  return guarded([&] {
    require(coloring, "coloring");
    require(ok, "ok");
    const auto& c = coloring->coloring;
    *ok = 1;
    if (bad_color != nullptr) *bad_color = -1;
    for (int cl = 0; cl < c.num_colors(); ++cl) {
      if (!kpart::verify_spanning_tree(c.n(), c.class_edges(cl))) {
        *ok = 0;
        if (bad_color != nullptr) *bad_color = cl;
        return;
      }
    }
  });
}

kp_svg_options kp_svg_default_options(void) {
  const kpart::SvgOptions d;
  return {d.size, d.margin, d.point_radius, d.stroke_width};
}

kp_status kp_render_svg(const kp_pointset* points, const kp_coloring* coloring,
                        const kp_svg_options* options, char** out) {
  return guarded([&] {
    require(coloring, "coloring");
    require(out, "out");
    kpart::SvgOptions opts;
    if (options != nullptr) {
      opts = {options->size, options->margin, options->point_radius, options->stroke_width};
    }
    if (points != nullptr) {
      if (points->points.size() != coloring->coloring.n()) {
        throw kpart::InvalidInput("coloring and point set disagree on n");
      }
      *out = duplicate(kpart::render_svg(points->points, coloring->coloring, opts));
    } else {
      *out = duplicate(kpart::render_svg_convex(coloring->coloring, opts));
    }
  });
}

kp_status kp_edge_bound_small_k(size_t n, size_t k, int64_t* num, int64_t* den) {
  return guarded([&] {
    require(num, "num");
    require(den, "den");
    const auto r = kpart::edge_bound_small_k(n, k);
    *num = r.num();
    *den = r.den();
  });
}

kp_status kp_edge_bound_general(size_t n, size_t k, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = kpart::edge_bound_general(n, k);
  });
}

kp_status kp_count_crossings(const kp_pointset* points, size_t n, const int* edges_uv,
                             size_t edge_count, size_t* out) {
  return guarded([&] {
    require(out, "out");
    if (points != nullptr) {
      *out = kpart::count_crossings(points->points, read_edges(points->points.size(), edges_uv, edge_count));
    } else {
      std::vector<kpart::ConvexEdge> convex;
      for (const auto& e : read_edges(n, edges_uv, edge_count)) convex.push_back(kpart::ConvexEdge::from(e));
      *out = kpart::count_crossings(n, convex);
    }
  });
}

kp_status kp_crossing_lemma_bound(size_t n, size_t e, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = kpart::crossing_lemma_bound(n, e);
  });
}

int64_t kp_peeling_bound(size_t n, size_t e) { return kpart::peeling_bound(n, e); }

kp_status kp_max_k_plane_subgraph(size_t n, size_t k, uint64_t budget, size_t* size, int* proven_optimal) {
  return guarded([&] {
    require(size, "size");
    const auto result = kpart::max_k_plane_subgraph(n, k, oracle_budget(budget));
    *size = result.size;
    if (proven_optimal != nullptr) *proven_optimal = result.proven_optimal;
  });
}

size_t kp_choose_block_size(size_t k) { return kpart::choose_block_size(k); }

kp_status kp_kplanar_color_bounds(size_t n, size_t k, size_t* lower, size_t* upper) {
  return guarded([&] {
    require(lower, "lower");
    require(upper, "upper");
    const auto b = kpart::kplanar_color_bounds(n, k);
    *lower = b.lower;
    *upper = b.upper;
  });
}

kp_status kp_one_planar_lower_bound(size_t n, size_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = kpart::one_planar_lower_bound(n);
  });
}

kp_status kp_quasi_color_bounds(size_t n, size_t m, size_t k, size_t* lower, size_t* upper,
                                int* single_color) {
  return guarded([&] {
    require(lower, "lower");
    require(upper, "upper");
    const auto b = kpart::quasi_color_bounds(n, m, k);
    *lower = b.lower;
    *upper = b.upper;
    if (single_color != nullptr) *single_color = b.single_color;
  });
}

kp_status kp_bounds_report(size_t n, size_t k, const kp_pointset* points, uint64_t budget,
                           char** out, int* all_satisfied) {
  return guarded([&] {
    require(out, "out");
    const auto rows = kpart::bound_table(n, k, points ? &points->points : nullptr, oracle_budget(budget));
    if (all_satisfied != nullptr) {
      *all_satisfied = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.satisfied; });
    }
    *out = duplicate(kpart::format_bound_table(rows));
  });
}

}  // extern "C"
