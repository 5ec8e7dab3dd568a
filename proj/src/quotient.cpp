#include "alphafactor/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "alphafactor/errors.hpp"

namespace alphafactor {

VertexPartition::VertexPartition(std::vector<std::vector<Vertex>> cells) : cells_(std::move(cells)) {
  std::vector<Vertex> all;
  for (auto& cell : cells_) {
    if (cell.empty()) throw DomainError("partition cells must be non-empty");
    std::sort(cell.begin(), cell.end());
    all.insert(all.end(), cell.begin(), cell.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw DomainError("partition cells overlap");
  if (!all.empty() && all.front() < 0) throw DomainError("negative vertex in partition");
}

std::vector<int> VertexPartition::cell_sizes() const {
  std::vector<int> sizes;
  for (const auto& cell : cells_) sizes.push_back(static_cast<int>(cell.size()));
  return sizes;
}

void VertexPartition::require_covers(int n) const {
  std::size_t total = 0;
  for (const auto& cell : cells_) {
    total += cell.size();
    if (cell.back() >= n) throw DomainError("partition mentions vertex " + std::to_string(cell.back()) +
                                            " outside a graph of order " + std::to_string(n));
  }
  if (total != static_cast<std::size_t>(n)) throw DomainError("partition does not cover every vertex");
}

VertexPartition natural_partition(const JoinUnionSpec& spec) {
  std::vector<std::vector<Vertex>> cells;
  Vertex next = 0;
  auto take = [&](int count) {
    std::vector<Vertex> cell(static_cast<std::size_t>(count));
    for (auto& v : cell) v = next++;
    cells.push_back(std::move(cell));
  };
  if (spec.join_size() > 0) take(spec.join_size());
  for (int size : spec.parts()) take(size);
  return VertexPartition(std::move(cells));
}

QuotientMatrix quotient_matrix(const Graph& g, Alpha a, const VertexPartition& part) {
  part.require_covers(g.order());
  const int k = part.cell_count();
  std::vector<int> cell_of(static_cast<std::size_t>(g.order()));
  for (int c = 0; c < k; ++c)
    for (Vertex v : part.cells()[static_cast<std::size_t>(c)]) cell_of[static_cast<std::size_t>(v)] = c;

  QuotientMatrix q;
  q.order = k;
  q.entries.assign(static_cast<std::size_t>(k * k), 0.0);
  q.cell_sizes = part.cell_sizes();
  q.equitable = true;

  std::vector<int> counts(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const auto& cell = part.cells()[static_cast<std::size_t>(i)];
    std::vector<int> first_counts;
    double diag_degree_sum = 0.0;
    std::vector<double> sums(static_cast<std::size_t>(k), 0.0);
    for (Vertex v : cell) {
      std::fill(counts.begin(), counts.end(), 0);
      for (Vertex w : g.neighbors(v)) ++counts[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(w)])];
      for (int j = 0; j < k; ++j) sums[static_cast<std::size_t>(j)] += counts[static_cast<std::size_t>(j)];
      diag_degree_sum += g.degree(v);
      if (first_counts.empty()) first_counts = counts;
      else if (counts != first_counts) q.equitable = false;
    }
    const double size = static_cast<double>(cell.size());
    for (int j = 0; j < k; ++j) {
      double entry = a.complement() * sums[static_cast<std::size_t>(j)];
      if (i == j) entry += a.value() * diag_degree_sum;
      q.entries[static_cast<std::size_t>(i * k + j)] = entry / size;
    }
  }
  return q;
}

std::vector<double> quotient_spectrum(const QuotientMatrix& q, double tol) {
  if (!q.equitable) throw DomainError("quotient_spectrum requires an equitable quotient");
  DenseSymMatrix sym(q.order);
  for (int i = 0; i < q.order; ++i) {
    for (int j = i; j < q.order; ++j) {
      const double scale = std::sqrt(static_cast<double>(q.cell_sizes[static_cast<std::size_t>(i)]) /
                                     q.cell_sizes[static_cast<std::size_t>(j)]);
      sym.set(i, j, q(i, j) * scale);
    }
  }
  return full_spectrum(sym, tol);
}

CubicPoly charpoly_join(int n, int s, Alpha a) {
  if (!(s >= 2 && n >= 2 * s)) {
    throw DomainError("charpoly_join needs n >= 2s >= 4 (n = " + std::to_string(n) + ", s = " + std::to_string(s) + ")");
  }
  const double al = a.value();
  const double nn = n;
  const double ss = s;
  const double a2 = al * al;
  CubicPoly p;
  // x^2 coefficient is minus the trace of the 3x3 quotient.
  p.c2 = -((1.0 + al) * nn - (1.0 - al) * ss - 1.0);
  p.c1 = al * nn * nn + a2 * nn * ss - nn - ss * ss + 2.0 * (1.0 - al) * ss;
  p.c0 = -a2 * nn * nn * ss + (2.0 * a2 - 2.0 * al + 1.0) * nn * ss * ss - (a2 - 3.0 * al + 1.0) * nn * ss -
         (3.0 * a2 - 5.0 * al + 2.0) * ss * ss * ss + (3.0 * a2 - 6.0 * al + 2.0) * ss * ss;
  return p;
}

double largest_real_root(const CubicPoly& p, double bracket_hi) {
  if (!(p(bracket_hi) > 0.0)) throw DomainError("cubic must be positive at the upper bracket");

  std::vector<double> points;
  for (double x = bracket_hi; x > 0.0; x -= 1.0) points.push_back(x);
  points.push_back(0.0);
  // Critical points split the scan into monotone pieces.
  const double disc = 4.0 * p.c2 * p.c2 - 12.0 * p.c1;
  if (disc >= 0.0) {
    for (double sign : {-1.0, 1.0}) {
      const double c = (-2.0 * p.c2 + sign * std::sqrt(disc)) / 6.0;
      if (c > 0.0 && c < bracket_hi) points.push_back(c);
    }
  }
  std::sort(points.begin(), points.end(), std::greater<>());

  for (std::size_t i = 1; i < points.size(); ++i) {
    double lo = points[i];
    double hi = points[i - 1];
    const double at_lo = p(lo);
    if (at_lo == 0.0) return lo;
    if (at_lo > 0.0) continue;
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
      const double mid = 0.5 * (lo + hi);
      (p(mid) > 0.0 ? hi : lo) = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) {
      const double d = p.derivative(x);
      if (d == 0.0) break;
      const double next = x - p(x) / d;
      if (next < lo || next > hi) break;
      x = next;
    }
    return x;
  }
  throw DomainError("no sign change of the cubic in [0, bracket_hi]");
}

CellValues perron_cell_values(const Graph& g, Alpha a, const VertexPartition& part) {
  if (!quotient_matrix(g, a, part).equitable) throw DomainError("partition is not equitable");
  if (!g.is_connected()) throw DomainError("perron_cell_values requires a connected graph");
  const SpectralResult res = perron_pair(g, a, 1e-12);
  CellValues out;
  for (const auto& cell : part.cells()) {
    double lo = res.perron[static_cast<std::size_t>(cell.front())];
    double hi = lo;
    double sum = 0.0;
    for (Vertex v : cell) {
      const double x = res.perron[static_cast<std::size_t>(v)];
      lo = std::min(lo, x);
      hi = std::max(hi, x);
      sum += x;
    }
    out.values.push_back(sum / static_cast<double>(cell.size()));
    out.max_deviation = std::max(out.max_deviation, hi - lo);
  }
  if (out.max_deviation > kCellDeviationBound)
    throw PropertyViolation("Perron vector varies by " + std::to_string(out.max_deviation) + " inside a cell");
  return out;
}

}  // namespace alphafactor
