#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kpart/geometry.hpp"

namespace kpart {

// Map from the edges of K_n to color ids in [0, num_colors). A coloring that
// assigns every edge is an edge partition; the classes are the subgraphs.
class Coloring {
 public:
  static constexpr int kUnassigned = -1;

  Coloring() = default;
  Coloring(std::size_t n, int num_colors);

  std::size_t n() const noexcept { return n_; }
  int num_colors() const noexcept { return num_colors_; }

  int color_of(const Edge& e) const { return colors_[edge_index(n_, e)]; }
  void set(const Edge& e, int color) { colors_[edge_index(n_, e)] = color; }

  // Indexed like all_edges(n).
  std::span<const int> colors() const noexcept { return colors_; }

  std::vector<Edge> class_edges(int color) const;
  bool is_total() const noexcept;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::size_t n_ = 0;
  int num_colors_ = 0;
  std::vector<int> colors_;
};

}  // namespace kpart
