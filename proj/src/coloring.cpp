#include "kpart/coloring.hpp"

#include <algorithm>

#include "kpart/error.hpp"

namespace kpart {

Coloring::Coloring(std::size_t n, int num_colors)
    : n_(n), num_colors_(num_colors), colors_(edge_count(n), kUnassigned) {
  if (num_colors < 0) throw InvalidInput("negative color count");
}

std::vector<Edge> Coloring::class_edges(int color) const {
  std::vector<Edge> edges;
  std::size_t idx = 0;
  for (int u = 0; u < static_cast<int>(n_); ++u) {
    for (int v = u + 1; v < static_cast<int>(n_); ++v, ++idx) {
      if (colors_[idx] == color) edges.push_back({u, v});
    }
  }
  return edges;
}

bool Coloring::is_total() const noexcept {
  return std::all_of(colors_.begin(), colors_.end(),
                     [&](int c) { return c >= 0 && c < num_colors_; });
}

}  // namespace kpart
