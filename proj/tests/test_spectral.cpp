#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "alphafactor/errors.hpp"
#include "alphafactor/generate.hpp"
#include "alphafactor/graph6.hpp"
#include "alphafactor/spectral.hpp"
#include "alphafactor/theorem.hpp"

using namespace alphafactor;
using doctest::Approx;

namespace {

const double kAlphaGrid[] = {0.0, 0.1, 0.25, 0.5, 0.6, 0.75, 0.9, 1.0};

Graph random_connected(std::mt19937_64& rng, int max_n) {
  for (;;) {
    const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
    const double p = 0.15 + static_cast<double>(rng() % 700) / 1000.0;
    Graph g = random_graph(n, p, rng());
    if (g.is_connected()) return g;
  }
}

}  // namespace

TEST_CASE("Alpha domain") {
  CHECK_THROWS_AS(Alpha(-0.1), DomainError);
  CHECK_THROWS_AS(Alpha(1.5), DomainError);
  CHECK_THROWS_AS(Alpha(std::nan("")), DomainError);
  CHECK_NOTHROW(Alpha(1.0));
  CHECK_THROWS_AS(Alpha(1.0).require_below_one(), DomainError);
}

TEST_CASE("alpha_matrix entries") {
  const DenseSymMatrix k2 = alpha_matrix(Graph::complete(2), Alpha(0.3));
  CHECK(k2(0, 0) == Approx(0.3));
  CHECK(k2(0, 1) == Approx(0.7));
  CHECK(k2(1, 0) == Approx(0.7));
  CHECK(k2(1, 1) == Approx(0.3));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(10, 0.4, rng());
    const DenseSymMatrix a0 = alpha_matrix(g, Alpha(0.0));
    const DenseSymMatrix ah = alpha_matrix(g, Alpha(0.5));
    for (int i = 0; i < 10; ++i) {
      CHECK(ah.row_sum(i) == Approx(g.degree(i)));
      for (int j = 0; j < 10; ++j) {
        CHECK(a0(i, j) == (g.has_edge(i, j) ? 1.0 : 0.0));
        const double q = (i == j ? g.degree(i) : 0.0) + (g.has_edge(i, j) ? 1.0 : 0.0);
        CHECK(ah(i, j) == Approx(q / 2.0));
      }
    }
  }
}

TEST_CASE("spectral_radius closed forms") {
  for (double a : kAlphaGrid) {
    CHECK(spectral_radius(Graph::complete(7), Alpha(a)).radius == Approx(6.0).epsilon(1e-12));
    CHECK(spectral_radius(Graph::cycle(9), Alpha(a)).radius == Approx(2.0).epsilon(1e-12));
  }
  const SpectralResult star = spectral_radius(Graph::star(3), Alpha(0.0));
  CHECK(star.radius == Approx(std::sqrt(3.0)).epsilon(1e-10));
  CHECK(dense_spectral_radius(Graph::star(3), Alpha(0.0)) == Approx(std::sqrt(3.0)).epsilon(1e-10));
  CHECK(star.residual <= kDefaultSpectralTol);

  CHECK(spectral_radius(Graph(1), Alpha(0.4)).radius == 0.0);
  CHECK_THROWS_AS(spectral_radius(Graph(0), Alpha(0.4)), DomainError);
  CHECK_THROWS_AS(spectral_radius(Graph(3), Alpha(0.4), 0.0), DomainError);
}

TEST_CASE("disconnected graphs report the largest component radius") {
  Graph g(7);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
  g.add_edge(4, 5);
  g.add_edge(5, 6);
  for (double a : {0.0, 0.5, 0.8}) CHECK(spectral_radius(g, Alpha(a)).radius == Approx(3.0).epsilon(1e-10));
}

TEST_CASE("full_spectrum closed forms") {
  const auto k2 = full_spectrum(alpha_matrix(Graph::complete(2), Alpha(0.0)));
  REQUIRE(k2.size() == 2);
  CHECK(k2[0] == Approx(1.0));
  CHECK(k2[1] == Approx(-1.0));

  // Circulant oracle: eigenvalues 2cos(2 pi k / 4).
  const auto c4 = full_spectrum(alpha_matrix(Graph::cycle(4), Alpha(0.0)));
  const double expect[] = {2.0, 0.0, 0.0, -2.0};
  for (int i = 0; i < 4; ++i) CHECK(c4[i] == Approx(expect[i]).epsilon(1e-10).scale(1.0));

  const auto k3 = full_spectrum(alpha_matrix(Graph::complete(3), Alpha(0.5)));
  CHECK(k3[0] == Approx(2.0));
  CHECK(k3[1] == Approx(0.5));
  CHECK(k3[2] == Approx(0.5));

  for (int n = 3; n <= 12; ++n) {
    const auto cn = full_spectrum(alpha_matrix(Graph::cycle(n), Alpha(0.0)));
    std::vector<double> closed;
    for (int k = 0; k < n; ++k) closed.push_back(2.0 * std::cos(2.0 * M_PI * k / n));
    std::sort(closed.rbegin(), closed.rend());
    for (int k = 0; k < n; ++k) CHECK(cn[k] == Approx(closed[k]).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("Jacobi trace and eigenpairs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(3 + static_cast<int>(rng() % 15), 0.5, rng());
    const double a = kAlphaGrid[rng() % 8];
    const DenseSymMatrix m = alpha_matrix(g, Alpha(a));
    const EigenDecomposition eig = jacobi_eigen(m, 1e-10);
    const double sum = std::accumulate(eig.values.begin(), eig.values.end(), 0.0);
    CHECK(std::abs(sum - m.trace()) <= m.order() * 1e-10);
    for (std::size_t k = 0; k < eig.values.size(); ++k) {
      const auto y = m.multiply(eig.vectors[k]);
      double r = 0.0;
      for (std::size_t i = 0; i < y.size(); ++i) r += std::pow(y[i] - eig.values[k] * eig.vectors[k][i], 2);
      CHECK(std::sqrt(r) <= 1e-8);
    }
    for (std::size_t k = 1; k < eig.values.size(); ++k) CHECK(eig.values[k - 1] >= eig.values[k]);
  }
}

TEST_CASE("power iteration agrees with Jacobi and stays within [delta, Delta]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_connected(rng, 20);
    const double a = kAlphaGrid[rng() % 8];
    const SpectralResult res = spectral_radius(g, Alpha(a));
    const double dense = full_spectrum(alpha_matrix(g, Alpha(a))).front();
    CHECK(std::abs(res.radius - dense) <= 10 * kDefaultSpectralTol);
    CHECK(res.residual <= kDefaultSpectralTol);
    CHECK(res.radius >= g.min_degree() - 1e-9);
    CHECK(res.radius <= g.max_degree() + 1e-9);
    double norm = 0.0;
    for (double x : res.perron) {
      CHECK(x > 0.0);
      norm += x * x;
    }
    CHECK(norm == Approx(1.0));
  }
}

TEST_CASE("signless Laplacian bridge at alpha = 1/2") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(4 + static_cast<int>(rng() % 10), 0.45, rng());
    DenseSymMatrix q(g.order());
    for (int v = 0; v < g.order(); ++v) q.set(v, v, g.degree(v));
    for (const Edge& e : g.edges()) q.set(e.u, e.v, 1.0);
    const auto half = full_spectrum(alpha_matrix(g, Alpha(0.5)));
    const auto direct = full_spectrum(q);
    for (std::size_t k = 0; k < half.size(); ++k) CHECK(2.0 * half[k] == Approx(direct[k]).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("adding an edge strictly increases the radius of a connected graph") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_connected(rng, 15);
    std::vector<Edge> non_edges;
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v)
        if (!g.has_edge(u, v)) non_edges.push_back({u, v});
    if (non_edges.empty()) continue;
    const Edge e = non_edges[rng() % non_edges.size()];
    for (double a : {0.0, 0.5, 0.9})
      CHECK(spectral_radius(g.with_edge(e.u, e.v), Alpha(a)).radius - spectral_radius(g, Alpha(a)).radius > 1e-12);
  }
}

TEST_CASE("quadratic_form_delta") {
  const Graph g = Graph::cycle(5);
  const std::vector<double> x{0.3, 0.1, 0.7, 0.2, 0.5};
  CHECK(quadratic_form_delta(g, g, x, Alpha(0.4)) == 0.0);

  const Graph before(2);
  const Graph after = Graph::complete(2);
  const std::vector<double> ones{1.0, 1.0};
  CHECK(quadratic_form_delta(after, before, ones, Alpha(0.0)) == Approx(2.0));
  CHECK(quadratic_form_delta(before, after, ones, Alpha(0.0)) == Approx(-2.0));

  // Edge-wise formula equals the difference of full quadratic forms.
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph a = random_graph(8, 0.5, rng());
    const Graph b = random_graph(8, 0.5, rng());
    std::vector<double> v(8);
    for (double& c : v) c = static_cast<double>(rng() % 1000) / 1000.0;
    const Alpha al(0.37);
    CHECK(quadratic_form_delta(a, b, v, al) ==
          Approx(quadratic_form(a, v, al) - quadratic_form(b, v, al)).epsilon(1e-12).scale(1.0));
  }

  CHECK_THROWS_AS(quadratic_form_delta(Graph(3), Graph(4), ones, Alpha(0.1)), DomainError);
  CHECK_THROWS_AS(quadratic_form_delta(Graph(3), Graph(3), ones, Alpha(0.1)), DomainError);
}

TEST_CASE("Case-3 pair: quadratic form at the Perron vector of G3 is positive") {
  const Case3Surgery s = case3_surgery(10, 3, 2);
  const SpectralResult r3 = spectral_radius(s.g3, Alpha(0.0));
  CHECK(quadratic_form_delta(s.g4, s.g3, r3.perron, Alpha(0.0)) > 0.0);
}

TEST_CASE("iteration cap and the dense fallback") {
  // Top two eigenvalues 2.73283 and 2.72701 at alpha 0.9: 200 n steps are not enough.
  const Graph g = parse_graph6("JO@S??GQOd?");
  const Alpha a(0.9);
  CHECK_THROWS_AS(spectral_radius(g, a), ConvergenceError);
  try {
    spectral_radius(g, a);
  } catch (const ConvergenceError& e) {
    CHECK(e.residual() > kDefaultSpectralTol);
  }
  const SpectralResult r = perron_pair(g, a);
  CHECK(r.dense_fallback);
  CHECK(r.radius == Approx(dense_spectral_radius(g, a)).epsilon(1e-12));
  CHECK(r.residual <= 1e-8);
  for (double x : r.perron) CHECK(x > 0.0);

  const SpectralResult easy = perron_pair(Graph::complete(5), a);
  CHECK_FALSE(easy.dense_fallback);
  CHECK(easy.radius == Approx(4.0));
}
