#include "alphafactor/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "alphafactor/errors.hpp"

namespace alphafactor {

Alpha::Alpha(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) throw DomainError("alpha must lie in [0,1], got " + std::to_string(value));
}

void Alpha::require_below_one() const {
  if (!(value_ < 1.0)) throw DomainError("alpha must lie in [0,1) here");
}

DenseSymMatrix::DenseSymMatrix(int order) : order_(order) {
  if (order < 0) throw DomainError("matrix order must be nonnegative");
  data_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0);
}

void DenseSymMatrix::set(int i, int j, double value) {
  data_[index(i, j)] = value;
  data_[index(j, i)] = value;
}

double DenseSymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < order_; ++i) t += (*this)(i, i);
  return t;
}

double DenseSymMatrix::row_sum(int i) const {
  const auto begin = data_.begin() + static_cast<std::ptrdiff_t>(index(i, 0));
  return std::accumulate(begin, begin + order_, 0.0);
}

std::vector<double> DenseSymMatrix::multiply(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != order_) throw DomainError("vector length does not match matrix order");
  std::vector<double> y(static_cast<std::size_t>(order_), 0.0);
  for (int i = 0; i < order_; ++i) {
    const double* row = data_.data() + index(i, 0);
    double acc = 0.0;
    for (int j = 0; j < order_; ++j) acc += row[j] * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

DenseSymMatrix alpha_matrix(const Graph& g, Alpha a) {
  DenseSymMatrix m(g.order());
  for (Vertex v = 0; v < g.order(); ++v) m.set(v, v, a.value() * g.degree(v));
  for (const Edge& e : g.edges()) m.set(e.u, e.v, a.complement());
  return m;
}

namespace {

double norm2(std::span<const double> x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, Alpha a, double tol) {
  const int n = g.order();
  if (n < 1) throw DomainError("spectral_radius needs at least one vertex");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

  const DenseSymMatrix m = alpha_matrix(g, a);
  const auto size = static_cast<std::size_t>(n);
  std::vector<double> x(size, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> r(size);
  const int cap = 200 * n;
  double residual = 0.0;
  for (int it = 1; it <= cap; ++it) {
    std::vector<double> y = m.multiply(x);
    const double rho = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    for (std::size_t i = 0; i < size; ++i) r[i] = y[i] - rho * x[i];
    residual = norm2(r);
    if (residual <= tol) return {rho, std::move(x), residual, it};
    for (std::size_t i = 0; i < size; ++i) y[i] += x[i];
    const double scale = norm2(y);
    for (std::size_t i = 0; i < size; ++i) x[i] = y[i] / scale;
  }
  throw ConvergenceError("power iteration did not converge in " + std::to_string(cap) + " iterations", residual);
}

EigenDecomposition jacobi_eigen(const DenseSymMatrix& m, double tol) {
  const int n = m.order();
  const auto size = static_cast<std::size_t>(n);
  std::vector<std::vector<double>> a(size, std::vector<double>(size));
  std::vector<std::vector<double>> v(size, std::vector<double>(size, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    v[i][i] = 1.0;
  }
  // Rotations below this magnitude are skipped.
  const double threshold = std::min(1e-13, tol / std::max(1, n));

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += a[i][j] * a[i][j];
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  double off = off_norm();
  for (int sweep = 0; sweep < kMaxSweeps && off > tol; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p][q];
        if (std::abs(apq) < threshold) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = a[q][p] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a[r][p];
            const double arq = a[r][q];
            a[r][p] = a[p][r] = c * arp - s * arq;
            a[r][q] = a[q][r] = s * arp + c * arq;
          }
          const double vrp = v[r][p];
          const double vrq = v[r][q];
          v[r][p] = c * vrp - s * vrq;
          v[r][q] = s * vrp + c * vrq;
        }
      }
    }
    off = off_norm();
  }
  if (off > tol) throw ConvergenceError("Jacobi sweeps exhausted", off);

  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return a[i][i] > a[j][j]; });
  EigenDecomposition out;
  for (int k : idx) {
    out.values.push_back(a[k][k]);
    std::vector<double> col(size);
    for (int r = 0; r < n; ++r) col[r] = v[r][k];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

std::vector<double> full_spectrum(const DenseSymMatrix& m, double tol) { return jacobi_eigen(m, tol).values; }

double dense_spectral_radius(const Graph& g, Alpha a, double tol) {
  if (g.order() < 1) throw DomainError("dense_spectral_radius needs at least one vertex");
  return full_spectrum(alpha_matrix(g, a), tol).front();
}

SpectralResult perron_pair(const Graph& g, Alpha a, double tol) {
  try {
    return spectral_radius(g, a, tol);
  } catch (const ConvergenceError&) {
  }
  const DenseSymMatrix m = alpha_matrix(g, a);
  EigenDecomposition eig = jacobi_eigen(m, tol);
  SpectralResult out;
  out.radius = eig.values.front();
  out.perron = std::move(eig.vectors.front());
  if (std::accumulate(out.perron.begin(), out.perron.end(), 0.0) < 0.0)
    for (double& x : out.perron) x = -x;
  const std::vector<double> y = m.multiply(out.perron);
  std::vector<double> r(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) r[i] = y[i] - out.radius * out.perron[i];
  out.residual = norm2(r);
  out.dense_fallback = true;
  return out;
}

double quadratic_form_delta(const Graph& after, const Graph& before, std::span<const double> x, Alpha a) {
  const int n = after.order();
  if (before.order() != n) throw DomainError("graphs must share a vertex set");
  if (static_cast<int>(x.size()) != n) throw DomainError("vector length does not match graph order");
  double total = 0.0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool now = after.has_edge(u, v);
      if (now == before.has_edge(u, v)) continue;
      const double xu = x[static_cast<std::size_t>(u)];
      const double xv = x[static_cast<std::size_t>(v)];
      const double term = a.value() * (xu * xu + xv * xv) + 2.0 * a.complement() * xu * xv;
      total += now ? term : -term;
    }
  }
  return total;
}

double quadratic_form(const Graph& g, std::span<const double> x, Alpha a) {
  const DenseSymMatrix m = alpha_matrix(g, a);
  const std::vector<double> y = m.multiply(x);
  return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

}  // namespace alphafactor
