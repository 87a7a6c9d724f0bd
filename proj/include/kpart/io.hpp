#pragma once

// Text formats, SVG rendering, and bound reports.
//
// Instance file:
//   <count>
//   <x> <y>            (count lines)
//   family <m>         (optional section)
//   <u> <v>            (m lines, pairwise crossing edges)
//
// Coloring file:
//   <n> <c>
//   <u> <v> <color>    (one line per edge of K_n, lexicographic)
//
// Blank lines and lines starting with '#' are ignored by the parsers. The
// writers emit the canonical form only.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpart/bounds.hpp"
#include "kpart/coloring.hpp"
#include "kpart/geometry.hpp"

namespace kpart {

struct Instance {
  PointSet points;
  std::optional<std::vector<Edge>> family;
};

Instance parse_instance(std::string_view text);
std::string write_instance(const PointSet& points, std::span<const Edge> family = {});

Coloring parse_coloring(std::string_view text);
std::string write_coloring(const Coloring& coloring);

struct SvgOptions {
  int size = 640;
  int margin = 24;
  double point_radius = 4.0;
  double stroke_width = 1.5;
};

// Fixed 12-entry palette, cycled by color id.
std::string_view palette_color(int color);

std::string render_svg(const PointSet& points, const Coloring& coloring, const SvgOptions& options = {});
// Convex instance laid out on a circle, vertex 0 at the top, clockwise.
std::string render_svg_convex(const Coloring& coloring, const SvgOptions& options = {});

// Bound table for convex K_n and k; adds the quasi-planar rows when an instance
// is given and k >= 3.
std::vector<BoundReport> bound_table(std::size_t n, std::size_t k, const PointSet* instance,
                                     std::uint64_t budget);

// One line per row:
//   BOUND <name> instance=<...> observed=<int> <rel> formula=<value> status=ok|VIOLATED
std::string format_bound_table(std::span<const BoundReport> rows);

}  // namespace kpart
