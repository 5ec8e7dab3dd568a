#include "alphafactor/factor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "alphafactor/errors.hpp"

namespace alphafactor {

std::string_view to_string(Existence e) {
  switch (e) {
    case Existence::yes: return "yes";
    case Existence::no: return "no";
    case Existence::unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(FactorMethod m) {
  switch (m) {
    case FactorMethod::cycle_space: return "cycle-space";
    case FactorMethod::naive: return "naive";
    case FactorMethod::yan_kano_implied: return "yan-kano-implied";
  }
  return "cycle-space";
}

std::string_view to_string(YanKanoResult::Status s) {
  switch (s) {
    case YanKanoResult::Status::holds: return "holds";
    case YanKanoResult::Status::violated: return "violated";
    case YanKanoResult::Status::unknown: return "unknown";
  }
  return "unknown";
}

bool verify_even_factor(const Graph& g, std::span<const Edge> f) {
  std::vector<Edge> edges(f.begin(), f.end());
  for (Edge& e : edges) {
    e = Edge::of(e.u, e.v);
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.has_edge(e.u, e.v))
      throw DomainError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the graph");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<int> degree(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : edges) {
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  return std::all_of(degree.begin(), degree.end(), [](int d) { return d > 0 && d % 2 == 0; });
}

namespace {

constexpr std::uint64_t kStopPollMask = (std::uint64_t{1} << 16) - 1;

enum class Search { found, absent, over_budget, stopped };

struct ComponentSearch {
  Search outcome = Search::absent;
  int dimension = 0;
  std::vector<Edge> witness;
};

// Gray-code walk over the cycle space of one connected component.
ComponentSearch search_component(const Graph& g, const std::vector<Vertex>& members, int dim_budget,
                                 const std::stop_token& stop) {
  ComponentSearch out;
  const auto nc = members.size();
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < nc; ++i) local[static_cast<std::size_t>(members[i])] = static_cast<int>(i);

  std::vector<Edge> edges;  // local endpoints
  for (Vertex v : members)
    for (Vertex w : g.neighbors(v))
      if (v < w) edges.push_back({local[static_cast<std::size_t>(v)], local[static_cast<std::size_t>(w)]});

  out.dimension = static_cast<int>(edges.size()) - static_cast<int>(nc) + 1;
  if (out.dimension == 0) return out;
  if (out.dimension > dim_budget) {
    out.outcome = Search::over_budget;
    return out;
  }

  // BFS spanning tree from local vertex 0.
  std::vector<std::vector<std::pair<int, int>>> adj(nc);  // (neighbour, edge id)
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[static_cast<std::size_t>(edges[e].u)].push_back({edges[e].v, static_cast<int>(e)});
    adj[static_cast<std::size_t>(edges[e].v)].push_back({edges[e].u, static_cast<int>(e)});
  }
  std::vector<int> parent(nc, -1), parent_edge(nc, -1), depth(nc, -1);
  std::vector<char> tree_edge(edges.size(), 0);
  std::vector<int> queue{0};
  depth[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (auto [w, e] : adj[static_cast<std::size_t>(v)]) {
      if (depth[static_cast<std::size_t>(w)] >= 0) continue;
      depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
      parent[static_cast<std::size_t>(w)] = v;
      parent_edge[static_cast<std::size_t>(w)] = e;
      tree_edge[static_cast<std::size_t>(e)] = 1;
      queue.push_back(w);
    }
  }

  std::vector<std::vector<int>> cycles;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (tree_edge[e]) continue;
    std::vector<int> cycle{static_cast<int>(e)};
    int a = edges[e].u;
    int b = edges[e].v;
    while (a != b) {
      if (depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)]) std::swap(a, b);
      cycle.push_back(parent_edge[static_cast<std::size_t>(a)]);
      a = parent[static_cast<std::size_t>(a)];
    }
    cycles.push_back(std::move(cycle));
  }

  std::vector<char> chosen(edges.size(), 0);
  std::vector<int> degree(nc, 0);
  std::size_t uncovered = nc;
  auto bump = [&](int v, int delta) {
    int& d = degree[static_cast<std::size_t>(v)];
    if (d == 0) --uncovered;
    d += delta;
    if (d == 0) ++uncovered;
  };

  const std::uint64_t total = std::uint64_t{1} << cycles.size();
  for (std::uint64_t step = 1; step < total; ++step) {
    if ((step & kStopPollMask) == 0 && stop.stop_requested()) {
      out.outcome = Search::stopped;
      return out;
    }
    for (int e : cycles[static_cast<std::size_t>(std::countr_zero(step))]) {
      const int delta = chosen[static_cast<std::size_t>(e)] ? -2 : 2;
      chosen[static_cast<std::size_t>(e)] ^= 1;
      bump(edges[static_cast<std::size_t>(e)].u, delta / 2);
      bump(edges[static_cast<std::size_t>(e)].v, delta / 2);
    }
    if (uncovered == 0) {
      out.outcome = Search::found;
      for (std::size_t e = 0; e < edges.size(); ++e)
        if (chosen[e])
          out.witness.push_back(Edge::of(members[static_cast<std::size_t>(edges[e].u)],
                                         members[static_cast<std::size_t>(edges[e].v)]));
      return out;
    }
  }
  return out;
}

}  // namespace

FactorVerdict find_even_factor(const Graph& g, int dim_budget, std::stop_token stop) {
  FactorVerdict verdict;
  verdict.method = FactorMethod::cycle_space;
  if (g.order() > 0 && g.min_degree() < 2) {
    verdict.exists = Existence::no;
    return verdict;
  }
  std::vector<Edge> witness;
  bool undecided = false;
  for (const auto& members : g.components()) {
    const ComponentSearch part = search_component(g, members, dim_budget, stop);
    verdict.dimension = std::max(verdict.dimension, part.dimension);
    switch (part.outcome) {
      case Search::absent:
        verdict.exists = Existence::no;
        return verdict;
      case Search::over_budget:
      case Search::stopped:
        undecided = true;
        break;
      case Search::found:
        witness.insert(witness.end(), part.witness.begin(), part.witness.end());
        break;
    }
  }
  if (undecided) {
    verdict.exists = Existence::unknown;
    return verdict;
  }
  std::sort(witness.begin(), witness.end());
  verdict.exists = Existence::yes;
  verdict.witness = std::move(witness);
  return verdict;
}

FactorVerdict naive_even_factor(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  if (edges.size() > static_cast<std::size_t>(kNaiveMaxEdges))
    throw SizeError("naive_even_factor supports at most 20 edges (graph has " + std::to_string(edges.size()) + ")");
  FactorVerdict verdict;
  verdict.method = FactorMethod::naive;
  const auto n = static_cast<std::size_t>(g.order());
  if (n == 0) {
    verdict.exists = Existence::yes;
    verdict.witness.emplace();
    return verdict;
  }
  std::vector<int> degree(n, 0);
  std::vector<char> chosen(edges.size(), 0);
  std::size_t zero = n;
  std::size_t odd = 0;
  auto bump = [&](Vertex v, int delta) {
    int& d = degree[static_cast<std::size_t>(v)];
    if (d == 0) --zero;
    if (d % 2) --odd;
    d += delta;
    if (d == 0) ++zero;
    if (d % 2) ++odd;
  };
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto e = static_cast<std::size_t>(std::countr_zero(step));
    const int delta = chosen[e] ? -1 : 1;
    chosen[e] ^= 1;
    bump(edges[e].u, delta);
    bump(edges[e].v, delta);
    if (zero == 0 && odd == 0) {
      verdict.exists = Existence::yes;
      std::vector<Edge> witness;
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (chosen[i]) witness.push_back(edges[i]);
      verdict.witness = std::move(witness);
      return verdict;
    }
  }
  verdict.exists = Existence::no;
  return verdict;
}

namespace {

struct SubsetScanner {
  int n;
  std::vector<std::uint64_t> nb;
  std::uint64_t full;
  std::vector<Vertex> members;

  int odd_components_without(std::uint64_t removed) const {
    std::uint64_t remaining = full & ~removed;
    int odd = 0;
    while (remaining) {
      std::uint64_t comp = remaining & (~remaining + 1);
      std::uint64_t frontier = comp;
      while (frontier) {
        std::uint64_t reach = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) reach |= nb[static_cast<std::size_t>(std::countr_zero(f))];
        frontier = reach & remaining & ~comp;
        comp |= frontier;
      }
      odd += std::popcount(comp) & 1;
      remaining &= ~comp;
    }
    return odd;
  }

  // Preorder DFS over sorted member lists visits subsets in lexicographic order.
  bool visit(std::uint64_t mask, int next) {
    const int size = static_cast<int>(members.size());
    if (size >= 2 && odd_components_without(mask) >= size) return true;
    for (int v = next; v < n; ++v) {
      members.push_back(v);
      if (visit(mask | (std::uint64_t{1} << v), v + 1)) return true;
      members.pop_back();
    }
    return false;
  }
};

}  // namespace

YanKanoResult yan_kano_check(const Graph& g, int subset_budget) {
  YanKanoResult result;
  const int n = g.order();
  if (n > subset_budget || n > 62) return result;
  SubsetScanner scan{n, {}, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, {}};
  for (Vertex v = 0; v < n; ++v) scan.nb.push_back(g.neighbor_mask(v));
  if (scan.visit(0, 0)) {
    result.status = YanKanoResult::Status::violated;
    result.violator = VertexSubset(scan.members);
  } else {
    result.status = YanKanoResult::Status::holds;
  }
  return result;
}

FactorVerdict decide_even_factor(const Graph& g, int dim_budget, int subset_budget, std::stop_token stop) {
  if (g.order() > 0 && g.min_degree() < 2) {
    FactorVerdict v;
    v.exists = Existence::no;
    return v;
  }
  if (g.order() % 2 == 0 && yan_kano_check(g, subset_budget).status == YanKanoResult::Status::holds) {
    FactorVerdict v;
    v.exists = Existence::yes;
    v.method = FactorMethod::yan_kano_implied;
    return v;
  }
  return find_even_factor(g, dim_budget, std::move(stop));
}

}  // namespace alphafactor
