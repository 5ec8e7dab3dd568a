#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "alphafactor/graph.hpp"

namespace alphafactor {

using GraphFilter = std::function<bool(const Graph&)>;

inline constexpr int kMaxEnumerationOrder = 7;

/// Bit k of `mask` is the k-th vertex pair in graph6 order (0,1),(0,2),(1,2),(0,3),...
Graph graph_from_pair_mask(int n, std::uint64_t mask);

/**
 * Single-consumer stream over every labeled simple graph on n vertices that
 * passes `filter`, in increasing order of pair mask. n is capped at 7; larger
 * orders should come from a graph6 corpus.
 */
class LabeledGraphStream {
 public:
  LabeledGraphStream(int n, GraphFilter filter);

  std::optional<Graph> next();
  /// Pair mask of the graph most recently returned by next().
  std::uint64_t last_mask() const noexcept { return last_; }

 private:
  int n_;
  GraphFilter filter_;
  std::uint64_t cursor_ = 0;
  std::uint64_t end_;
  std::uint64_t last_ = 0;
};

std::vector<Graph> enumerate_labeled_graphs(int n, const GraphFilter& filter);

namespace filters {
bool any(const Graph& g);
bool connected(const Graph& g);
GraphFilter connected_min_degree(int k);
}  // namespace filters

/**
 * Erdos-Renyi G(n, p) sample. Uses std::mt19937_64 seeded with `seed`; each
 * vertex pair, visited in graph6 order, draws one 64-bit word w and is an edge
 * iff (w >> 11) * 2^-53 < p. The sequence is fixed by the C++ standard, so the
 * result is identical on every platform.
 */
Graph random_graph(int n, double edge_prob, std::uint64_t seed);

inline constexpr int kMaxIsomorphismOrder = 10;

/// Backtracking isomorphism test for n <= 10, pruned by degree. Order mismatch is false.
bool is_isomorphic_small(const Graph& g, const Graph& h);

}  // namespace alphafactor
