#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "kpart/io.hpp"

namespace kpart {

namespace {

constexpr std::array<std::string_view, 12> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939",
};

struct Xy {
  double x;
  double y;
};

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string render(std::span<const Xy> at, const Coloring& coloring, const SvgOptions& options) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.size
      << "\" height=\"" << options.size << "\" viewBox=\"0 0 " << options.size << ' '
      << options.size << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int c = 0; c < coloring.num_colors(); ++c) {
    const auto edges = coloring.class_edges(c);
    out << "<g id=\"class-" << c << "\" stroke=\"" << palette_color(c) << "\" stroke-width=\""
        << fixed(options.stroke_width) << "\" stroke-linecap=\"round\">\n";
    for (const Edge& e : edges) {
      out << "<line x1=\"" << fixed(at[e.u].x) << "\" y1=\"" << fixed(at[e.u].y) << "\" x2=\""
          << fixed(at[e.v].x) << "\" y2=\"" << fixed(at[e.v].y) << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "<g id=\"points\" fill=\"black\">\n";
  for (const Xy& p : at) {
    out << "<circle cx=\"" << fixed(p.x) << "\" cy=\"" << fixed(p.y) << "\" r=\""
        << fixed(options.point_radius) << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace

std::string_view palette_color(int color) {
  return kPalette[static_cast<std::size_t>(color) % kPalette.size()];
}

std::string render_svg(const PointSet& points, const Coloring& coloring, const SvgOptions& options) {
  std::vector<Xy> at;
  if (!points.empty()) {
    auto [min_x, max_x] = std::minmax_element(points.begin(), points.end(),
                                              [](const Point& a, const Point& b) { return a.x < b.x; });
    auto [min_y, max_y] = std::minmax_element(points.begin(), points.end(),
                                              [](const Point& a, const Point& b) { return a.y < b.y; });
    const double span = std::max<double>({1.0, static_cast<double>(max_x->x - min_x->x),
                                          static_cast<double>(max_y->y - min_y->y)});
    const double scale = (options.size - 2.0 * options.margin) / span;
    for (const Point& p : points) {
      // SVG y grows downwards.
      at.push_back({options.margin + (static_cast<double>(p.x - min_x->x)) * scale,
                    options.size - options.margin - static_cast<double>(p.y - min_y->y) * scale});
    }
  }
  return render(at, coloring, options);
}

std::string render_svg_convex(const Coloring& coloring, const SvgOptions& options) {
  const double center = options.size / 2.0;
  const double radius = center - options.margin;
  const auto n = coloring.n();
  std::vector<Xy> at;
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = std::numbers::pi / 2 - 2 * std::numbers::pi * static_cast<double>(i) /
                                                    static_cast<double>(n);
    at.push_back({center + radius * std::cos(angle), center - radius * std::sin(angle)});
  }
  return render(at, coloring, options);
}

}  // namespace kpart
