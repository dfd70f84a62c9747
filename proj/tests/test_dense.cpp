#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sc/dense.hpp"
#include "sc/error.hpp"
#include "test_support.hpp"

using namespace sc;
using sc::test::matrix;

namespace {

// Closed-form spectrum of a 2x2 Hermitian matrix.
std::pair<double, double> eig2(const DenseMatrix& m) {
  const double tr = (m(0, 0) + m(1, 1)).real();
  const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
  const double disc = std::sqrt(std::max(tr * tr / 4.0 - det, 0.0));
  return {tr / 2.0 - disc, tr / 2.0 + disc};
}

}  // namespace

TEST_CASE("diagonal input keeps its entries and a permuted identity basis") {
  const std::vector<double> diag{0.3, -1.0, 2.5, 0.0};
  const auto eig = hermitian_eigen(DenseMatrix::diagonal(diag));
  CHECK(eig.values == std::vector<double>{-1.0, 0.0, 0.3, 2.5});
  for (std::size_t j = 0; j < 4; ++j) {
    int ones = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      const double mag = std::abs(eig.vectors(i, j));
      CHECK((mag == doctest::Approx(0.0) || mag == doctest::Approx(1.0)));
      if (mag > 0.5) ++ones;
    }
    CHECK(ones == 1);
  }
}

TEST_CASE("off-diagonal 2x2 block has eigenvalues +-|a|") {
  const Complex a(0.3, -0.4);
  const auto values = hermitian_eigenvalues(matrix({{0.0, a}, {std::conj(a), 0.0}}));
  CHECK(values[0] == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(values[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("2x2 spectra match the quadratic formula") {
  GaussianSource rng(7);
  for (int i = 0; i < 50; ++i) {
    const DenseMatrix m = sc::test::random_hermitian(2, rng);
    const auto [lo, hi] = eig2(m);
    const auto values = hermitian_eigenvalues(m);
    CHECK(std::abs(values[0] - lo) < 1e-12);
    CHECK(std::abs(values[1] - hi) < 1e-12);
  }
}

TEST_CASE("random Hermitian matrices are reconstructed with orthonormal vectors") {
  GaussianSource rng(11);
  for (std::size_t n : {3u, 8u, 16u, 27u, 64u}) {
    const DenseMatrix m = sc::test::random_hermitian(n, rng);
    const auto eig = hermitian_eigen(m);
    CHECK(std::is_sorted(eig.values.begin(), eig.values.end()));

    const DenseMatrix gram = eig.vectors.adjoint() * eig.vectors;
    CHECK(max_abs_diff(gram, DenseMatrix::identity(n)) < 1e-9);

    const DenseMatrix rebuilt = eig.vectors * DenseMatrix::diagonal(eig.values) * eig.vectors.adjoint();
    CHECK(max_abs_diff(rebuilt, m) < 1e-9);

    double sum = 0.0;
    for (double v : eig.values) sum += v;
    CHECK(std::abs(sum - m.trace().real()) < 1e-10);
  }
}

TEST_CASE("degenerate spectra converge") {
  // Projector of rank 3 in dimension 9 rotated by a random unitary-ish basis.
  GaussianSource rng(3);
  const DenseMatrix h = sc::test::random_hermitian(9, rng);
  const auto basis = hermitian_eigen(h).vectors;
  std::vector<double> diag{1, 1, 1, 0, 0, 0, 0, 0, 0};
  const DenseMatrix p = basis * DenseMatrix::diagonal(diag) * basis.adjoint();
  const auto values = hermitian_eigenvalues(p);
  for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(values[i]) < 1e-12);
  for (std::size_t i = 6; i < 9; ++i) CHECK(std::abs(values[i] - 1.0) < 1e-12);
}

TEST_CASE("non-Hermitian input is rejected") {
  const DenseMatrix m = matrix({{1.0, 0.5}, {0.2, 1.0}});
  try {
    hermitian_eigen(m);
    FAIL("expected NotHermitian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHermitian);
    CHECK(e.magnitude() == doctest::Approx(0.3));
  }
  CHECK_THROWS_AS(hermitian_eigen(DenseMatrix(2, 3)), Error);
}

TEST_CASE("exhausted sweeps raise NoConvergence") {
  GaussianSource rng(5);
  const DenseMatrix m = sc::test::random_hermitian(12, rng);
  JacobiOptions options;
  options.max_sweeps = 1;
  try {
    hermitian_eigen(m, options);
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoConvergence);
  }
}

TEST_CASE("kron and trace_of_product") {
  const DenseMatrix a = matrix({{1.0, 2.0}, {3.0, 4.0}});
  const DenseMatrix b = matrix({{0.0, 1.0}, {1.0, 0.0}});
  const DenseMatrix k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(k(0, 1) == Complex(1.0));
  CHECK(k(3, 2) == Complex(4.0));
  CHECK(k(2, 1) == Complex(3.0));
  CHECK(k(2, 0) == Complex(0.0));
  CHECK(trace_of_product(a, b) == (a * b).trace());
}
