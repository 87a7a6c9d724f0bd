#include "kpart/clique.hpp"

#include <algorithm>
#include <bit>

namespace kpart {

std::size_t BitGraph::degree(std::size_t a) const noexcept {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(rows_[a * words_ + w]);
  return d;
}

std::size_t BitGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (std::size_t a = 0; a < n_; ++a) total += degree(a);
  return total / 2;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& bits) {
  return std::any_of(bits.begin(), bits.end(), [](std::uint64_t w) { return w != 0; });
}

// Smallest-last order, reversed: vertices of the densest core come first.
std::vector<int> degeneracy_order(const BitGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<bool> removed(n, false);
  std::vector<int> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!removed[v] && (best == n || degree[v] < degree[best])) best = v;
    }
    removed[best] = true;
    order.push_back(static_cast<int>(best));
    for (std::size_t u = 0; u < n; ++u) {
      if (!removed[u] && g.adjacent(best, u)) --degree[u];
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

class Search {
 public:
  Search(const BitGraph& g, std::uint64_t budget, std::size_t target)
      : g_(g), words_(g.words()), budget_(budget), target_(target) {}

  CliqueResult run() {
    Bits candidates(words_, 0);
    for (std::size_t v = 0; v < g_.size(); ++v) candidates[v / 64] |= std::uint64_t{1} << (v % 64);
    stopped_ = false;
    if (g_.size() > 0) expand(candidates);
    CliqueResult result;
    result.vertices = best_;
    std::sort(result.vertices.begin(), result.vertices.end());
    result.reached_target = best_.size() >= target_;
    result.complete = !stopped_;
    result.nodes = nodes_;
    return result;
  }

 private:
  void expand(Bits& candidates) {
    if (++nodes_ > budget_) {
      stopped_ = true;
      return;
    }
    // Greedy sequential coloring; vertices listed by ascending color.
    std::vector<int> order;
    std::vector<std::size_t> color;
    Bits uncolored = candidates;
    std::size_t k = 0;
    while (any(uncolored)) {
      ++k;
      Bits open = uncolored;
      for (std::size_t w = 0; w < words_; ++w) {
        while (open[w]) {
          const auto v = w * 64 + static_cast<std::size_t>(std::countr_zero(open[w]));
          open[w] &= open[w] - 1;
          uncolored[w] &= ~(std::uint64_t{1} << (v % 64));
          const std::uint64_t* nb = g_.row(v);
          for (std::size_t x = w; x < words_; ++x) open[x] &= ~nb[x];
          order.push_back(static_cast<int>(v));
          color.push_back(k);
        }
      }
    }

    for (std::size_t t = order.size(); t-- > 0;) {
      if (stopped_ || current_.size() + color[t] <= best_.size()) return;
      const auto v = static_cast<std::size_t>(order[t]);
      current_.push_back(static_cast<int>(v));
      Bits next(words_);
      const std::uint64_t* nb = g_.row(v);
      for (std::size_t w = 0; w < words_; ++w) next[w] = candidates[w] & nb[w];
      if (any(next)) {
        expand(next);
      } else if (current_.size() > best_.size()) {
        best_ = current_;
      }
      current_.pop_back();
      candidates[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      if (best_.size() >= target_) {
        stopped_ = true;
        return;
      }
    }
  }

  const BitGraph& g_;
  std::size_t words_;
  std::uint64_t budget_;
  std::size_t target_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  std::vector<int> current_;
  std::vector<int> best_;
};

}  // namespace

CliqueResult max_clique(const BitGraph& graph, std::uint64_t budget, std::size_t target) {
  // Relabel so that bit order follows the degeneracy order; the coloring bound
  // and branching order both walk bits from low to high.
  const auto order = degeneracy_order(graph);
  const std::size_t n = graph.size();
  BitGraph relabeled(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (graph.adjacent(order[a], order[b])) relabeled.add_edge(a, b);
    }
  }
  auto result = Search(relabeled, budget, target).run();
  for (int& v : result.vertices) v = order[v];
  std::sort(result.vertices.begin(), result.vertices.end());
  return result;
}

}  // namespace kpart
