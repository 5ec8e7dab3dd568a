#include "alphafactor/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "alphafactor/errors.hpp"

namespace alphafactor {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw DomainError("graph order must be nonnegative");
  words_ = (n + 63) / 64;
  rows_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
  degree_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::star(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
}

void Graph::check_pair(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto word = rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v / 64)];
  return (word >> (v % 64)) & 1U;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return degree_[static_cast<std::size_t>(v)];
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  return *std::min_element(degree_.begin(), degree_.end());
}

int Graph::max_degree() const {
  if (n_ == 0) return 0;
  return *std::max_element(degree_.begin(), degree_.end());
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(degree_[static_cast<std::size_t>(v)]));
  const std::uint64_t* row = rows_.data() + static_cast<std::size_t>(v) * words_;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = row[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
  if (n_ > 64) throw SizeError("neighbor_mask requires at most 64 vertices");
  check_vertex(v);
  return rows_[static_cast<std::size_t>(v)];
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (has_edge(u, v)) return;
  rows_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  ++degree_[static_cast<std::size_t>(u)];
  ++degree_[static_cast<std::size_t>(v)];
  ++m_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (!has_edge(u, v)) return;
  rows_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  rows_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
  --degree_[static_cast<std::size_t>(u)];
  --degree_[static_cast<std::size_t>(v)];
  --m_;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  Graph g = *this;
  g.add_edge(u, v);
  return g;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw DomainError("permutation length mismatch");
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  for (Vertex p : perm) {
    check_vertex(p);
    if (seen[static_cast<std::size_t>(p)]++) throw DomainError("relabeling is not a permutation");
  }
  Graph g(n_);
  for (const Edge& e : edges()) g.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return g;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<int> label(static_cast<std::size_t>(n_), -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n_; ++root) {
    if (label[static_cast<std::size_t>(root)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    label[static_cast<std::size_t>(root)] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (Vertex w : neighbors(v)) {
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool Graph::is_connected() const { return components().size() <= 1; }

VertexSubset::VertexSubset(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSubset::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

JoinUnionSpec::JoinUnionSpec(int s, std::vector<int> parts) : s_(s), parts_(std::move(parts)) {
  if (s_ < 0) throw DomainError("join size must be nonnegative");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("clique parts must have at least one vertex");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("clique parts must be sorted nonincreasing");
  }
}

int JoinUnionSpec::order() const noexcept {
  return s_ + std::accumulate(parts_.begin(), parts_.end(), 0);
}

Graph build_join_union(const JoinUnionSpec& spec) {
  const int n = spec.order();
  const int s = spec.join_size();
  Graph g(n);
  for (Vertex u = 0; u < s; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  Vertex first = s;
  for (int size : spec.parts()) {
    for (Vertex u = first; u < first + size; ++u)
      for (Vertex v = u + 1; v < first + size; ++v) g.add_edge(u, v);
    first += size;
  }
  return g;
}

int odd_components(const Graph& g, const VertexSubset& s) {
  const int n = g.order();
  for (Vertex v : s.members())
    if (v < 0 || v >= n) throw DomainError("subset member " + std::to_string(v) + " out of range");
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  for (Vertex v : s.members()) visited[static_cast<std::size_t>(v)] = 1;
  int odd = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (visited[static_cast<std::size_t>(root)]) continue;
    int count = 0;
    visited[static_cast<std::size_t>(root)] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++count;
      for (Vertex w : g.neighbors(v)) {
        if (!visited[static_cast<std::size_t>(w)]) {
          visited[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    odd += count % 2;
  }
  return odd;
}

}  // namespace alphafactor
