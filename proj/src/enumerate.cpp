#include "alphafactor/generate.hpp"

#include <random>
#include <string>

#include "alphafactor/errors.hpp"

namespace alphafactor {

Graph graph_from_pair_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1U) g.add_edge(i, j);
  return g;
}

LabeledGraphStream::LabeledGraphStream(int n, GraphFilter filter) : n_(n), filter_(std::move(filter)) {
  if (n < 0) throw DomainError("order must be nonnegative");
  if (n > kMaxEnumerationOrder)
    throw SizeError("labeled enumeration supports n <= 7 (n = " + std::to_string(n) +
                    "); feed larger orders through a graph6 corpus instead");
  const int pairs = n * (n - 1) / 2;
  end_ = std::uint64_t{1} << pairs;
  if (!filter_) filter_ = filters::any;
}

std::optional<Graph> LabeledGraphStream::next() {
  while (cursor_ < end_) {
    const std::uint64_t mask = cursor_++;
    Graph g = graph_from_pair_mask(n_, mask);
    if (filter_(g)) {
      last_ = mask;
      return g;
    }
  }
  return std::nullopt;
}

std::vector<Graph> enumerate_labeled_graphs(int n, const GraphFilter& filter) {
  LabeledGraphStream stream(n, filter);
  std::vector<Graph> out;
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

namespace filters {

bool any(const Graph&) { return true; }

bool connected(const Graph& g) { return g.order() > 0 && g.is_connected(); }

GraphFilter connected_min_degree(int k) {
  return [k](const Graph& g) { return g.min_degree() >= k && connected(g); };
}

}  // namespace filters

Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
  if (n < 0) throw DomainError("order must be nonnegative");
  std::mt19937_64 engine(seed);
  Graph g(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      if (u < edge_prob) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace alphafactor
