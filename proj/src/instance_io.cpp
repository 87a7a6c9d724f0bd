#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "kpart/error.hpp"
#include "kpart/io.hpp"
#include "kpart/quasi_planar.hpp"

namespace kpart {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Non-empty, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++number;
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      const std::size_t start = pos;
      while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      if (pos > start) line.tokens.push_back(raw.substr(start, pos - start));
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

std::int64_t parse_int(const Line& line, std::size_t i, const char* what) {
  const auto token = line.tokens[i];
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) {
    throw ParseError(line.number, std::string("expected integer ") + what + ", got '" +
                                      std::string(token) + "'");
  }
  return value;
}

void expect_tokens(const Line& line, std::size_t count, const char* shape) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, std::string("expected '") + shape + "'");
  }
}

std::size_t parse_count(const Line& line, std::size_t i, const char* what) {
  const auto value = parse_int(line, i, what);
  if (value < 0) throw ParseError(line.number, std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(value);
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty instance");
  expect_tokens(lines[0], 1, "<count>");
  const std::size_t count = parse_count(lines[0], 0, "point count");
  if (lines.size() < count + 1) {
    throw ParseError(lines.back().number, "expected " + std::to_string(count) + " points, found " +
                                              std::to_string(lines.size() - 1));
  }
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    expect_tokens(lines[i], 2, "<x> <y>");
    pts.push_back({parse_int(lines[i], 0, "x"), parse_int(lines[i], 1, "y")});
  }
  Instance instance;
  try {
    instance.points = PointSet::from_points(std::move(pts));
  } catch (const InvalidInput& e) {
    throw ParseError(0, std::string("invalid point set: ") + e.what());
  }

  std::size_t next = count + 1;
  if (next == lines.size()) return instance;
  const Line& header = lines[next];
  if (header.tokens.size() != 2 || header.tokens[0] != "family") {
    throw ParseError(header.number, "expected 'family <m>' or end of file");
  }
  const std::size_t m = parse_count(header, 1, "family size");
  if (lines.size() != next + 1 + m) {
    throw ParseError(header.number, "family section declares " + std::to_string(m) +
                                        " edges, found " + std::to_string(lines.size() - next - 1));
  }
  std::vector<Edge> family;
  for (std::size_t i = next + 1; i < lines.size(); ++i) {
    expect_tokens(lines[i], 2, "<u> <v>");
    const auto u = parse_int(lines[i], 0, "u");
    const auto v = parse_int(lines[i], 1, "v");
    if (u < 0 || v < 0 || u == v || static_cast<std::size_t>(std::max(u, v)) >= count) {
      throw ParseError(lines[i].number, "family edge out of range");
    }
    family.push_back(Edge::make(static_cast<int>(u), static_cast<int>(v)));
  }
  if (!is_crossing_family(instance.points, family)) {
    throw ParseError(header.number, "family edges do not pairwise cross");
  }
  instance.family = std::move(family);
  return instance;
}

std::string write_instance(const PointSet& points, std::span<const Edge> family) {
  std::ostringstream out;
  out << points.size() << '\n';
  for (const Point& p : points) out << p.x << ' ' << p.y << '\n';
  if (!family.empty()) {
    std::vector<Edge> sorted(family.begin(), family.end());
    std::sort(sorted.begin(), sorted.end());
    out << "family " << sorted.size() << '\n';
    for (const Edge& e : sorted) out << e.u << ' ' << e.v << '\n';
  }
  return out.str();
}

Coloring parse_coloring(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty coloring");
  expect_tokens(lines[0], 2, "<n> <c>");
  const std::size_t n = parse_count(lines[0], 0, "n");
  const std::size_t c = parse_count(lines[0], 1, "color count");
  Coloring coloring(n, static_cast<int>(c));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    expect_tokens(line, 3, "<u> <v> <color>");
    const auto u = parse_int(line, 0, "u");
    const auto v = parse_int(line, 1, "v");
    const auto color = parse_int(line, 2, "color");
    if (u < 0 || v < 0 || u == v || static_cast<std::size_t>(std::max(u, v)) >= n) {
      throw ParseError(line.number, "edge out of range for n=" + std::to_string(n));
    }
    if (color < 0 || static_cast<std::size_t>(color) >= c) {
      throw ParseError(line.number, "color " + std::to_string(color) + " not in [0, " +
                                        std::to_string(c) + ")");
    }
    const Edge e = Edge::make(static_cast<int>(u), static_cast<int>(v));
    if (coloring.color_of(e) != Coloring::kUnassigned) {
      throw ParseError(line.number, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    coloring.set(e, static_cast<int>(color));
  }
  for (const Edge& e : all_edges(n)) {
    if (coloring.color_of(e) == Coloring::kUnassigned) {
      throw ParseError(0, "missing edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
  }
  return coloring;
}

std::string write_coloring(const Coloring& coloring) {
  std::ostringstream out;
  out << coloring.n() << ' ' << coloring.num_colors() << '\n';
  const auto colors = coloring.colors();
  const auto edges = all_edges(coloring.n());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << edges[i].u << ' ' << edges[i].v << ' ' << colors[i] << '\n';
  }
  return out.str();
}

}  // namespace kpart
