#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace alphafactor {

using Vertex = int;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Simple undirected graph on the dense vertex labels 0..n-1.
 *
 * Adjacency is a bit matrix (one row of 64-bit words per vertex); degrees and
 * the edge count are kept in sync by add_edge/remove_edge.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  /// K_{1,leaves}; the centre is vertex 0.
  static Graph star(int leaves);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  int min_degree() const;
  int max_degree() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  /// All edges, u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  /// Neighbourhood as a bitmask; requires order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  Graph with_edge(Vertex u, Vertex v) const;

  /// Vertex v of this graph becomes perm[v] in the result.
  Graph relabeled(std::span<const Vertex> perm) const;

  bool is_connected() const;
  /// Connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<Vertex>> components() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;
  void check_pair(Vertex u, Vertex v) const;

  int n_ = 0;
  int words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<int> degree_;
};

/// A set of vertices of some graph, kept sorted and duplicate-free.
class VertexSubset {
 public:
  VertexSubset() = default;
  explicit VertexSubset(std::vector<Vertex> members);

  const std::vector<Vertex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Vertex v) const;

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::vector<Vertex> members_;
};

/**
 * Parameters of K_s v (K_{n_1} u ... u K_{n_t}) with n_1 >= ... >= n_t >= 1.
 * Throws DomainError on negative s, empty or unsorted parts.
 */
class JoinUnionSpec {
 public:
  JoinUnionSpec() = default;
  JoinUnionSpec(int s, std::vector<int> parts);

  int join_size() const noexcept { return s_; }
  const std::vector<int>& parts() const noexcept { return parts_; }
  int part_count() const noexcept { return static_cast<int>(parts_.size()); }
  int order() const noexcept;

  friend bool operator==(const JoinUnionSpec&, const JoinUnionSpec&) = default;

 private:
  int s_ = 0;
  std::vector<int> parts_;
};

/// Join block occupies vertices 0..s-1, then each part in spec order.
Graph build_join_union(const JoinUnionSpec& spec);

/// Number of odd-order components of G - S.
int odd_components(const Graph& g, const VertexSubset& s);

}  // namespace alphafactor
