#include <algorithm>
#include <cstdint>
#include <vector>

#include "alphafactor/errors.hpp"
#include "alphafactor/generate.hpp"

namespace alphafactor {

namespace {

struct Matcher {
  const Graph& g;
  const Graph& h;
  std::vector<Vertex> order;     // g-vertices in assignment order
  std::vector<Vertex> image;     // g-vertex -> h-vertex, -1 if unassigned
  std::vector<char> used;        // h-vertex taken

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];
    for (Vertex w = 0; w < h.order(); ++w) {
      if (used[static_cast<std::size_t>(w)] || h.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Vertex u = order[k];
        ok = g.has_edge(u, v) == h.has_edge(image[static_cast<std::size_t>(u)], w);
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      if (extend(depth + 1)) return true;
      used[static_cast<std::size_t>(w)] = 0;
      image[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }
};

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

bool is_isomorphic_small(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  if (g.order() > kMaxIsomorphismOrder) throw SizeError("is_isomorphic_small supports n <= 10");
  if (g.size() != h.size() || sorted_degrees(g) != sorted_degrees(h)) return false;

  const auto n = static_cast<std::size_t>(g.order());
  Matcher m{g, h, {}, std::vector<Vertex>(n, -1), std::vector<char>(n, 0)};
  // Assign high-degree vertices first; they constrain the search most.
  m.order.resize(n);
  for (std::size_t i = 0; i < n; ++i) m.order[i] = static_cast<Vertex>(i);
  std::stable_sort(m.order.begin(), m.order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return m.extend(0);
}

}  // namespace alphafactor
