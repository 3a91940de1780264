#include "gcodes/eigen_sym.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gcodes {

RealSymMatrix::RealSymMatrix(std::size_t order)
    : order_(order), tri_(order * (order + 1) / 2, 0.0) {}

std::vector<double> RealSymMatrix::apply(const std::vector<double>& v) const {
  if (v.size() != order_) throw UsageError("vector length does not match matrix order");
  std::vector<double> out(order_, 0.0);
  for (std::size_t i = 0; i < order_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < order_; ++j) acc += at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

double RealSymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < order_; ++i) t += at(i, i);
  return t;
}

EigenSystem symmetric_eigensystem(const RealSymMatrix& m, double tol, unsigned max_sweeps) {
  if (tol <= 0) throw UsageError("eigensolver tolerance must be positive");
  const std::size_t n = m.order();
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  double norm0 = 0.0;
  for (double x : a) norm0 += x * x;
  norm0 = std::sqrt(norm0);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += 2.0 * a[p * n + q] * a[p * n + q];
    return std::sqrt(s);
  };

  bool converged = norm0 == 0.0 || n < 2 || off_norm() <= tol * norm0;
  for (unsigned sweep = 0; !converged && sweep < max_sweeps; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
    converged = off_norm() <= tol * norm0;
  }
  if (!converged) throw NumericError("Jacobi eigensolver did not converge within sweep budget");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a[x * n + x] > a[y * n + y]; });

  EigenSystem out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t idx : order) {
    out.values.push_back(a[idx * n + idx]);
    std::vector<double> col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v[k * n + idx];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

std::vector<double> symmetric_eigenvalues(const RealSymMatrix& m, double tol) {
  return symmetric_eigensystem(m, tol).values;
}

}  // namespace gcodes
