#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "alphafactor/graph.hpp"

namespace alphafactor {

/// Mixing weight for A_alpha = alpha*D + (1-alpha)*A. Constructed values lie in [0,1].
class Alpha {
 public:
  explicit Alpha(double value);

  double value() const noexcept { return value_; }
  double complement() const noexcept { return 1.0 - value_; }

  /// Throws DomainError unless value < 1 (theorem-level operations).
  void require_below_one() const;

 private:
  double value_;
};

/// Dense symmetric matrix stored row-major.
class DenseSymMatrix {
 public:
  DenseSymMatrix() = default;
  explicit DenseSymMatrix(int order);

  int order() const noexcept { return order_; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }
  /// Sets both (i,j) and (j,i).
  void set(int i, int j, double value);
  double trace() const;
  double row_sum(int i) const;
  std::vector<double> multiply(std::span<const double> x) const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(j);
  }

  int order_ = 0;
  std::vector<double> data_;
};

inline constexpr double kDefaultSpectralTol = 1e-10;

/// Diagonal alpha*deg(i); off-diagonal (1-alpha) on edges.
DenseSymMatrix alpha_matrix(const Graph& g, Alpha a);

/// Perron pair of A_alpha(G) with its convergence certificate.
struct SpectralResult {
  double radius = 0.0;
  std::vector<double> perron;  // unit 2-norm, entrywise >= 0
  double residual = 0.0;       // ||A x - radius x||_2
  int iterations = 0;
  bool dense_fallback = false;  // pair taken from the Jacobi solver
};

/**
 * Largest eigenvalue of A_alpha(G) by power iteration on A_alpha + I from the
 * all-ones vector, stopping once the eigen-residual is <= tol. The shift keeps
 * the dominant eigenvalue strictly dominant in modulus for bipartite graphs at
 * alpha = 0. For disconnected graphs the result is the largest eigenvalue over
 * all components. Throws ConvergenceError after 200*n iterations.
 */
SpectralResult spectral_radius(const Graph& g, Alpha a, double tol = kDefaultSpectralTol);

struct EigenDecomposition {
  std::vector<double> values;                // nonincreasing
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
};

/// Cyclic-by-row Jacobi; stops when the off-diagonal Frobenius norm is <= tol.
EigenDecomposition jacobi_eigen(const DenseSymMatrix& m, double tol = kDefaultSpectralTol);

/// All eigenvalues, nonincreasing.
std::vector<double> full_spectrum(const DenseSymMatrix& m, double tol = kDefaultSpectralTol);

/// Largest eigenvalue of A_alpha(G) from the dense Jacobi solver.
double dense_spectral_radius(const Graph& g, Alpha a, double tol = kDefaultSpectralTol);

/**
 * spectral_radius(), except that hitting the iteration cap (close top
 * eigenvalues, typical for alpha near 1) switches to the top Jacobi eigenpair
 * instead of throwing.
 */
SpectralResult perron_pair(const Graph& g, Alpha a, double tol = kDefaultSpectralTol);

/**
 * x^T (A_alpha(after) - A_alpha(before)) x, accumulated edge by edge: an edge
 * uv present only in `after` adds alpha(x_u^2 + x_v^2) + 2(1-alpha) x_u x_v,
 * one present only in `before` subtracts the same amount.
 */
double quadratic_form_delta(const Graph& after, const Graph& before, std::span<const double> x, Alpha a);

/// x^T A_alpha(G) x.
double quadratic_form(const Graph& g, std::span<const double> x, Alpha a);

}  // namespace alphafactor
