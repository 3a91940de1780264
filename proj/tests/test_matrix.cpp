#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "gcodes/eigen_sym.hpp"
#include "gcodes/gf_matrix.hpp"
#include "gcodes/io.hpp"
#include "gcodes/partite_graph.hpp"

using namespace gcodes;

namespace {

GFMatrix random_matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  GFMatrix m(field, rows, cols);
  std::uniform_int_distribution<std::uint32_t> dist(0, field->order() - 1);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, std::uint16_t(dist(rng)));
  return m;
}

// Rank oracle for GF(2): the row space has 2^rank distinct subset XORs.
std::size_t rank_by_subset_span(const GFMatrix& m) {
  REQUIRE(m.rows() <= 16);
  REQUIRE(m.cols() <= 64);
  std::set<std::uint64_t> span;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m.rows()); ++mask) {
    std::uint64_t acc = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (mask >> r & 1)
        for (std::size_t c = 0; c < m.cols(); ++c)
          if (m.get(r, c)) acc ^= std::uint64_t(1) << c;
    span.insert(acc);
  }
  std::size_t rank = 0;
  while ((std::size_t(1) << rank) < span.size()) ++rank;
  REQUIRE((std::size_t(1) << rank) == span.size());
  return rank;
}

// Exact rank of an integer matrix over the rationals (fraction-free
// Gaussian elimination in 128-bit integers). Oracle for eigenvalue
// multiplicities of small adjacency matrices.
std::size_t rational_rank(std::vector<std::vector<long long>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::vector<std::vector<__int128>> w(rows, std::vector<__int128>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) w[i][j] = a[i][j];
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && w[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(w[p], w[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (w[i][c] == 0) continue;
      const __int128 f1 = w[r][c], f2 = w[i][c];
      for (std::size_t j = 0; j < cols; ++j) w[i][j] = w[i][j] * f1 - w[r][j] * f2;
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("rref worked examples") {
  auto gf2 = FieldSpec::prime_field(2);
  SUBCASE("identity is already reduced") {
    auto [m, pivots] = rref(GFMatrix::identity(gf2, 2));
    CHECK(m == GFMatrix::identity(gf2, 2));
    CHECK(pivots == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("zero matrix") {
    auto [m, pivots] = rref(GFMatrix(gf2, 3, 4));
    CHECK(m.is_zero());
    CHECK(pivots.empty());
  }
  SUBCASE("duplicate rows collapse") {
    auto m = GFMatrix::from_rows(gf2, {{1, 1}, {1, 1}});
    auto [red, pivots] = rref(m);
    CHECK(red == GFMatrix::from_rows(gf2, {{1, 1}, {0, 0}}));
    CHECK(pivots == std::vector<std::size_t>{0});
  }
}

TEST_CASE("rref is idempotent") {
  std::mt19937_64 rng(7);
  for (auto q : {2u, 5u}) {
    auto field = FieldSpec::from_order(q);
    for (int trial = 0; trial < 30; ++trial) {
      auto m = random_matrix(field, 5, 8, rng);
      auto once = rref(m);
      auto twice = rref(once.matrix);
      CHECK(once.matrix == twice.matrix);
      CHECK(once.pivot_columns == twice.pivot_columns);
    }
  }
}

TEST_CASE("rank and kernel worked examples") {
  auto gf2 = FieldSpec::prime_field(2);
  CHECK(rank(GFMatrix::identity(gf2, 6)) == 6);
  CHECK(kernel_basis(GFMatrix::identity(gf2, 6)).empty());

  GFMatrix zero(gf2, 3, 5);
  CHECK(rank(zero) == 0);
  CHECK(kernel_basis(zero).size() == 5);

  // Parity check of the [7,4,3] Hamming code: columns are 1..7 in binary.
  GFMatrix hamming(gf2, 3, 7);
  for (std::size_t j = 0; j < 7; ++j)
    for (unsigned b = 0; b < 3; ++b)
      if ((j + 1) >> b & 1) hamming.set(b, j, 1);
  CHECK(rank(hamming) == 3);
  const auto kernel = kernel_basis(hamming);
  CHECK(kernel.size() == 4);
  for (const auto& v : kernel) {
    const auto image = hamming.apply(v);
    CHECK(std::all_of(image.begin(), image.end(), [](std::uint16_t s) { return s == 0; }));
  }
}

TEST_CASE("rank matches the subset-span oracle on random GF(2) matrices") {
  std::mt19937_64 rng(99);
  auto gf2 = FieldSpec::prime_field(2);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    auto m = random_matrix(gf2, dim(rng), dim(rng), rng);
    REQUIRE(rank(m) == rank_by_subset_span(m));
  }
}

TEST_CASE("kernel vectors annihilate and are independent") {
  std::mt19937_64 rng(123);
  for (auto q : {2u, 4u, 7u}) {
    auto field = FieldSpec::from_order(q);
    for (int trial = 0; trial < 20; ++trial) {
      auto m = random_matrix(field, 4, 9, rng);
      const auto kernel = kernel_basis(m);
      CHECK(kernel.size() == m.cols() - rank(m));
      for (const auto& v : kernel) {
        const auto image = m.apply(v);
        REQUIRE(std::all_of(image.begin(), image.end(), [](std::uint16_t s) { return s == 0; }));
      }
      if (!kernel.empty()) {
        CHECK(rank(GFMatrix::from_rows(field, kernel)) == kernel.size());
      }
    }
  }
}

TEST_CASE("packed GF(2) product matches the scalar route") {
  std::mt19937_64 rng(5);
  auto gf2 = FieldSpec::prime_field(2);
  auto a = random_matrix(gf2, 9, 70, rng);
  auto b = random_matrix(gf2, 70, 13, rng);
  auto fast = a.multiply(b);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < b.cols(); ++k) {
      std::uint16_t acc = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) acc ^= a.get(i, j) & b.get(j, k);
      REQUIRE(fast.get(i, k) == acc);
    }
}

TEST_CASE("matrix text format round trip") {
  std::mt19937_64 rng(17);
  for (auto q : {2u, 7u}) {
    auto m = random_matrix(FieldSpec::from_order(q), 4, 6, rng);
    std::stringstream buffer;
    save_matrix_text(buffer, m);
    CHECK(load_matrix_text(buffer) == m);
  }
  std::stringstream bad("2 2 4\n0 1\n3 4\n");
  CHECK_THROWS_AS(load_matrix_text(bad), UsageError);
}

TEST_CASE("eigenvalues of small fixed matrices") {
  SUBCASE("identity") {
    RealSymMatrix eye(3);
    for (int i = 0; i < 3; ++i) eye.set(i, i, 1.0);
    const auto values = symmetric_eigenvalues(eye);
    for (double v : values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("single edge") {
    RealSymMatrix a(2);
    a.set(0, 1, 1.0);
    const auto values = symmetric_eigenvalues(a);
    CHECK(values[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(values[1] == doctest::Approx(-1.0).epsilon(1e-10));
  }
}

TEST_CASE("complete tripartite spectrum against the exact oracle") {
  const auto graph = PartiteGraph::complete_multipartite(3, 3);
  const auto adjacency = graph.adjacency_matrix();
  const auto values = symmetric_eigenvalues(adjacency, 1e-13);
  REQUIRE(values.size() == 9);
  CHECK(values[0] == doctest::Approx(6.0).epsilon(1e-9));
  for (int i = 1; i <= 6; ++i) CHECK(values[i] == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
  CHECK(values[7] == doctest::Approx(-3.0).epsilon(1e-9));
  CHECK(values[8] == doctest::Approx(-3.0).epsilon(1e-9));

  // Oracle: exact multiplicity of eigenvalue t is 9 - rank(A - tI) over
  // the rationals, computed by fraction-free elimination.
  auto shifted = [&](long long t) {
    std::vector<std::vector<long long>> m(9, std::vector<long long>(9, 0));
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) m[i][j] = (long long)(adjacency.at(i, j)) - (i == j ? t : 0);
    return m;
  };
  CHECK(rational_rank(shifted(6)) == 8);   // multiplicity 1
  CHECK(rational_rank(shifted(0)) == 3);   // multiplicity 6
  CHECK(rational_rank(shifted(-3)) == 7);  // multiplicity 2
}

TEST_CASE("eigenvector residuals and trace on random matrices") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> entry(-10.0, 10.0);
  std::uniform_int_distribution<std::size_t> dim(2, 64);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = dim(rng);
    RealSymMatrix p(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) p.set(i, j, entry(rng));
    const auto eig = symmetric_eigensystem(p);

    double value_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      value_sum += eig.values[i];
      const auto image = p.apply(eig.vectors[i]);
      double residual = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        residual = std::max(residual, std::abs(image[k] - eig.values[i] * eig.vectors[i][k]));
      REQUIRE(residual <= 1e-8 * (1.0 + std::abs(eig.values[i])));
    }
    REQUIRE(std::abs(value_sum - p.trace()) <= 1e-8 * double(n));
  }
}

TEST_CASE("eigensolver input checks") {
  RealSymMatrix p(3);
  CHECK_THROWS_AS(symmetric_eigenvalues(p, 0.0), UsageError);
  CHECK_THROWS_AS(symmetric_eigenvalues(p, -1.0), UsageError);

  // Exhausting the sweep budget is a numeric error.
  RealSymMatrix q(3);
  q.set(0, 1, 1.0);
  q.set(1, 2, 2.0);
  CHECK_THROWS_AS(symmetric_eigensystem(q, 1e-12, 0), NumericError);
  CHECK_NOTHROW(symmetric_eigensystem(q, 1e-12));
}
