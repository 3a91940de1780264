#pragma once

#include <cstddef>
#include <vector>

#include "gcodes/errors.hpp"

namespace gcodes {

/// Real symmetric matrix storing one triangle, so entries(i,j) and
/// entries(j,i) are the same memory and symmetry is exact by construction.
class RealSymMatrix {
 public:
  explicit RealSymMatrix(std::size_t order);

  std::size_t order() const { return order_; }
  double at(std::size_t i, std::size_t j) const { return tri_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, double value) { tri_[index(i, j)] = value; }

  std::vector<double> apply(const std::vector<double>& v) const;
  double trace() const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i < j) std::swap(i, j);
    return i * (i + 1) / 2 + j;
  }

  std::size_t order_ = 0;
  std::vector<double> tri_;
};

struct EigenSystem {
  std::vector<double> values;                 // descending, with multiplicity
  std::vector<std::vector<double>> vectors;   // vectors[i] pairs with values[i], unit norm
};

/// Cyclic Jacobi rotations. Terminates when the off-diagonal Frobenius norm
/// drops below tol times the initial Frobenius norm; throws NumericError if
/// the sweep budget is exhausted first.
EigenSystem symmetric_eigensystem(const RealSymMatrix& m, double tol = 1e-12,
                                  unsigned max_sweeps = 128);

/// Eigenvalues only, sorted descending with multiplicity.
std::vector<double> symmetric_eigenvalues(const RealSymMatrix& m, double tol = 1e-12);

}  // namespace gcodes
