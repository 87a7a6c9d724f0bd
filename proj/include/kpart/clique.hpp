#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace kpart {

// Undirected graph with bitset adjacency rows.
class BitGraph {
 public:
  BitGraph() = default;
  explicit BitGraph(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }

  void add_edge(std::size_t a, std::size_t b) {
    rows_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
    rows_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
  }
  bool adjacent(std::size_t a, std::size_t b) const noexcept {
    return (rows_[a * words_ + b / 64] >> (b % 64)) & 1U;
  }
  const std::uint64_t* row(std::size_t a) const noexcept { return rows_.data() + a * words_; }
  std::size_t degree(std::size_t a) const noexcept;
  std::size_t edge_count() const noexcept;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct CliqueResult {
  std::vector<int> vertices;  // sorted
  bool complete = false;      // search space exhausted: vertices is a maximum clique
  bool reached_target = false;
  std::uint64_t nodes = 0;
};

// Exact maximum clique by branch and bound: vertices in degeneracy order, greedy
// coloring of the candidate set as the upper bound. Stops early once a clique
// of size `target` is found or after `budget` search nodes.
CliqueResult max_clique(const BitGraph& graph, std::uint64_t budget,
                        std::size_t target = std::numeric_limits<std::size_t>::max());

}  // namespace kpart
