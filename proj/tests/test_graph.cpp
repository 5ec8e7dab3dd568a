#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "alphafactor/errors.hpp"
#include "alphafactor/generate.hpp"
#include "alphafactor/graph.hpp"
#include "alphafactor/graph6.hpp"
#include "alphafactor/theorem.hpp"
#include "oracles.hpp"

using namespace alphafactor;

TEST_CASE("build_join_union layouts and edge counts") {
  const Graph k4 = build_join_union(JoinUnionSpec(0, {4}));
  CHECK(k4 == Graph::complete(4));

  const Graph g = build_join_union(JoinUnionSpec(2, {3, 1}));
  CHECK(g.order() == 6);
  CHECK(g.size() == 12);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(0, 5));
  CHECK(g.has_edge(2, 4));
  CHECK_FALSE(g.has_edge(4, 5));

  CHECK(build_join_union(JoinUnionSpec(2, {5, 1})).size() == 23);
  CHECK(build_join_union(JoinUnionSpec()).order() == 0);
}

TEST_CASE("JoinUnionSpec rejects invalid parts") {
  CHECK_THROWS_AS(JoinUnionSpec(1, {1, 3}), DomainError);
  CHECK_THROWS_AS(JoinUnionSpec(1, {3, 0}), DomainError);
  CHECK_THROWS_AS(JoinUnionSpec(-1, {3}), DomainError);
}

TEST_CASE("join-union edge count and minimum degree over random specs") {
  oracle::SpecGen gen(7);
  for (int trial = 0; trial < 300; ++trial) {
    const JoinUnionSpec spec = gen.spec(40, 1, 0);
    const Graph g = build_join_union(spec);
    CHECK(static_cast<long long>(g.size()) == oracle::join_union_edges(spec.join_size(), spec.parts()));
    if (spec.part_count() >= 2) CHECK(g.min_degree() == spec.join_size() + spec.parts().back() - 1);
  }
}

TEST_CASE("graph6 hand-encoded records") {
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(parse_graph6("C~") == Graph::complete(4));
  CHECK(parse_graph6("C?") == Graph(4));
  CHECK(write_graph6(Graph::complete(4)) == "C~");
  CHECK(write_graph6(Graph(1)) == "@");
  // P3 on 0-1-2: pairs (0,1)=1,(0,2)=0,(1,2)=1 -> bits 101000 = 40 -> 'g'.
  CHECK(write_graph6(Graph::path(3)) == "Bg");
}

TEST_CASE("graph6 errors name the byte offset") {
  auto offset_of = [](std::string_view text) -> long {
    try {
      parse_graph6(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of(" ") == 0);
  CHECK(offset_of("C~~") == 2);
  CHECK(offset_of("C") == 1);
  CHECK(offset_of("E!???") == 1);
  CHECK(offset_of("~") == 0);
  CHECK_THROWS_AS(write_graph6(Graph(63)), SizeError);
}

TEST_CASE("graph6 round trip on random graphs up to order 40") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(rng() % 41);
    const double p = static_cast<double>(rng() % 1000) / 1000.0;
    const Graph g = random_graph(n, p, rng());
    REQUIRE(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("graph6 file reader skips header and reports bad lines") {
  std::istringstream in(">>graph6<<C~\n\nC?\nC~x\r\n@\n");
  const auto recs = read_graph6(in);
  REQUIRE(recs.size() == 4);
  CHECK(recs[0].graph == Graph::complete(4));
  CHECK(recs[1].line == 3);
  CHECK_FALSE(recs[2].graph.has_value());
  CHECK(recs[2].line == 4);
  CHECK(recs[2].error.find("offset 2") != std::string::npos);
  CHECK(recs[3].graph == Graph(1));
}

TEST_CASE("odd_components") {
  const Graph star8 = build_extremal(ExtremalSpec::make(8, 2));
  CHECK(odd_components(star8, VertexSubset({0, 1})) == 2);
  CHECK(odd_components(Graph::cycle(6), VertexSubset({0, 3})) == 0);
  CHECK(odd_components(Graph::complete(4), VertexSubset()) == 0);
  CHECK(odd_components(Graph(3), VertexSubset()) == 3);
  CHECK_THROWS_AS(odd_components(Graph(3), VertexSubset({5})), DomainError);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = random_graph(n, 0.3, rng());
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 4 == 0) s.push_back(v);
    const VertexSubset subset(s);
    CHECK(odd_components(g, subset) <= n - static_cast<int>(subset.size()));
    int parity = 0;
    for (const auto& comp : g.components()) parity += static_cast<int>(comp.size() % 2);
    CHECK(odd_components(g, VertexSubset()) == parity);
  }
}

TEST_CASE("labeled enumeration counts") {
  CHECK(enumerate_labeled_graphs(3, filters::connected).size() == 4);
  CHECK(enumerate_labeled_graphs(2, filters::any).size() == 2);

  // Independent mask-level count, frozen: 12058 connected labeled graphs on 6 vertices with min degree >= 2.
  std::size_t brute = 0;
  for (std::uint64_t mask = 0; mask < (1U << 15); ++mask) brute += oracle::mask_connected_min_degree(6, mask, 2);
  CHECK(brute == 12058);
  CHECK(enumerate_labeled_graphs(6, filters::connected_min_degree(2)).size() == 12058);
  CHECK(enumerate_labeled_graphs(6, filters::connected).size() == 26704);

  CHECK_THROWS_AS(LabeledGraphStream(8, filters::any), SizeError);
}

TEST_CASE("enumeration order follows the pair mask") {
  LabeledGraphStream stream(4, filters::connected);
  std::uint64_t previous = 0;
  bool first = true;
  while (auto g = stream.next()) {
    CHECK(graph_from_pair_mask(4, stream.last_mask()) == *g);
    if (!first) CHECK(stream.last_mask() > previous);
    previous = stream.last_mask();
    first = false;
  }
}

TEST_CASE("random_graph is deterministic") {
  CHECK(random_graph(9, 0.0, 3) == Graph(9));
  CHECK(random_graph(9, 1.0, 3) == Graph::complete(9));
  CHECK(random_graph(8, 0.5, 42) == random_graph(8, 0.5, 42));
  // Snapshot of the first run; guards the documented generator and pair order.
  CHECK(write_graph6(random_graph(8, 0.5, 42)) == "GD]@vs");
}

TEST_CASE("is_isomorphic_small") {
  const Graph c4 = Graph::cycle(4);
  const std::vector<Vertex> perm{2, 0, 3, 1};
  CHECK(is_isomorphic_small(c4, c4.relabeled(perm)));
  CHECK_FALSE(is_isomorphic_small(c4, Graph::path(4)));
  CHECK(is_isomorphic_small(build_extremal(ExtremalSpec::make(6, 2)), build_join_union(JoinUnionSpec(2, {3, 1}))));
  CHECK_FALSE(is_isomorphic_small(Graph(3), Graph(4)));
  CHECK_THROWS_AS(is_isomorphic_small(Graph(11), Graph(11)), SizeError);
  // Same degree sequence, not isomorphic: C6 vs two triangles.
  Graph two_triangles(6);
  for (int base : {0, 3}) {
    two_triangles.add_edge(base, base + 1);
    two_triangles.add_edge(base + 1, base + 2);
    two_triangles.add_edge(base, base + 2);
  }
  CHECK_FALSE(is_isomorphic_small(Graph::cycle(6), two_triangles));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(9, 0.4, rng());
    std::vector<Vertex> p(9);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(is_isomorphic_small(g, g.relabeled(p)));
  }
}
