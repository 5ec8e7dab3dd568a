#pragma once

#include <vector>

#include "alphafactor/graph.hpp"
#include "alphafactor/spectral.hpp"

namespace alphafactor {

/// Ordered cells of a vertex partition. Cells are non-empty and pairwise disjoint.
class VertexPartition {
 public:
  VertexPartition() = default;
  explicit VertexPartition(std::vector<std::vector<Vertex>> cells);

  const std::vector<std::vector<Vertex>>& cells() const noexcept { return cells_; }
  int cell_count() const noexcept { return static_cast<int>(cells_.size()); }
  std::vector<int> cell_sizes() const;
  /// Throws DomainError unless the cells cover exactly 0..n-1.
  void require_covers(int n) const;

 private:
  std::vector<std::vector<Vertex>> cells_;
};

/// Cells: join block, then one cell per part, matching build_join_union's layout.
VertexPartition natural_partition(const JoinUnionSpec& spec);

/**
 * Quotient of A_alpha(G): entry (i,j) is the average over v in cell i of the
 * A_alpha row sum of v restricted to cell j. `equitable` is decided from integer
 * neighbour counts, so it holds for every alpha at once.
 */
struct QuotientMatrix {
  int order = 0;
  std::vector<double> entries;  // row-major order x order
  std::vector<int> cell_sizes;
  bool equitable = false;

  double operator()(int i, int j) const { return entries[static_cast<std::size_t>(i * order + j)]; }
};

QuotientMatrix quotient_matrix(const Graph& g, Alpha a, const VertexPartition& part);

/**
 * Eigenvalues (nonincreasing) of an equitable quotient. Uses the symmetric
 * similarity D^{1/2} B D^{-1/2}, D = diag(cell sizes), and the Jacobi solver.
 */
std::vector<double> quotient_spectrum(const QuotientMatrix& q, double tol = kDefaultSpectralTol);

/// Monic cubic x^3 + c2 x^2 + c1 x + c0.
struct CubicPoly {
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  double operator()(double x) const { return ((x + c2) * x + c1) * x + c0; }
  double derivative(double x) const { return (3.0 * x + 2.0 * c2) * x + c1; }
};

/**
 * Characteristic polynomial of the 3x3 quotient of A_alpha(K_s v (K_{n-2s+1} u (s-1)K_1))
 * under its natural partition. Requires n >= 2s >= 4.
 */
CubicPoly charpoly_join(int n, int s, Alpha a);

/**
 * Largest real root of p below bracket_hi, to 1e-12. Scans down from
 * bracket_hi in unit steps (plus the cubic's critical points, so each scanned
 * interval is monotone), bisects the first sign change, then polishes with
 * Newton. Throws DomainError when p(bracket_hi) <= 0 or no sign change exists
 * in [0, bracket_hi].
 */
double largest_real_root(const CubicPoly& p, double bracket_hi);

/// Common Perron-vector value per cell, with the largest in-cell spread observed.
struct CellValues {
  std::vector<double> values;
  double max_deviation = 0.0;
};

inline constexpr double kCellDeviationBound = 1e-8;

/**
 * Requires `part` equitable and g connected. Throws DomainError if the
 * partition is not equitable and PropertyViolation if some cell's Perron
 * entries spread by more than kCellDeviationBound.
 */
CellValues perron_cell_values(const Graph& g, Alpha a, const VertexPartition& part);

}  // namespace alphafactor
