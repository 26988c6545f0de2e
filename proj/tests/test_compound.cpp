#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "c2/compound.hpp"
#include "c2/odesim.hpp"  // SplitMix64

using namespace c2;

namespace {

MatX random_matrix(SplitMix64& rng, int rows, int cols) {
  MatX m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = 2.0 * rng.uniform() - 1.0;
  return m;
}

}  // namespace

TEST_CASE("lex_sequences enumerates Q_{k,n} in lexicographic order") {
  CHECK(lex_sequences(2, 3) ==
        std::vector<IndexSequence>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(lex_sequences(1, 3) == std::vector<IndexSequence>{{1}, {2}, {3}});
  CHECK(lex_sequences(3, 3) == std::vector<IndexSequence>{{1, 2, 3}});
  CHECK(lex_sequences(2, 5).size() == 10);
  CHECK_THROWS_AS(lex_sequences(4, 3), DomainError);
  CHECK_THROWS_AS(lex_sequences(0, 3), DomainError);
}

TEST_CASE("minor_of selects and expands submatrices") {
  MatX A(3, 2);
  A << 1, 6, -7, 0, 5, 10;
  CHECK(minor_of(A, {1, 3}, {1, 2}) == -20.0);
  CHECK(minor_of(A, {2}, {2}) == 0.0);
  CHECK(minor_of(MatX::Identity(3, 3), {1, 2}, {1, 2}) == 1.0);
  CHECK_THROWS_AS(minor_of(A, {1, 2}, {1}), DomainError);
  CHECK_THROWS_AS(minor_of(A, {1, 4}, {1, 2}), DomainError);
}

TEST_CASE("multiplicative compound basics") {
  SplitMix64 rng(7);
  const MatX A = random_matrix(rng, 4, 4);
  CHECK(multiplicative_compound(A, 1).isApprox(A));
  const MatX full = multiplicative_compound(A, 4);
  CHECK(full.rows() == 1);
  CHECK(full(0, 0) == doctest::Approx(A.determinant()).epsilon(1e-12));
  CHECK(multiplicative_compound(MatX::Identity(5, 5), 3)
            .isApprox(MatX::Identity(10, 10)));
  CHECK_THROWS_AS(multiplicative_compound(A, 5), DomainError);
}

TEST_CASE("Cauchy-Binet identity on random square pairs") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 4);  // 2..5
    for (int k = 1; k <= n; ++k) {
      const MatX A = random_matrix(rng, n, n);
      const MatX B = random_matrix(rng, n, n);
      const MatX lhs = multiplicative_compound(A * B, k);
      const MatX rhs = multiplicative_compound(A, k) * multiplicative_compound(B, k);
      CHECK((lhs - rhs).norm() <= 1e-9 * std::max(1.0, rhs.norm()));
    }
  }
}

TEST_CASE("additive compound closed form") {
  MatX A(2, 2);
  A << 1.5, -2.0, 3.0, 4.0;
  const MatX A2 = additive_compound(A, 2);
  CHECK(A2.rows() == 1);
  CHECK(A2(0, 0) == 5.5);  // exactly the trace

  const Eigen::Vector3d lam(2.0, -3.0, 7.0);
  const MatX D2 = additive_compound(MatX(lam.asDiagonal()), 2);
  CHECK(D2.isApprox(MatX(Eigen::Vector3d(-1.0, 9.0, 4.0).asDiagonal())));

  CHECK(additive_compound(MatX::Zero(4, 4), 3).isZero());
  CHECK_THROWS_AS(additive_compound(MatX::Zero(2, 3), 1), DomainError);
}

TEST_CASE("additive compound matches the finite-difference oracle, order eps") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng.next() % 3);  // 3..5
    const int k = 2 + static_cast<int>(rng.next() % (n - 1));
    const MatX A = random_matrix(rng, n, n);
    const MatX exact = additive_compound(A, k);
    const MatX I = MatX::Identity(exact.rows(), exact.rows());
    std::vector<double> errs;
    for (double eps : {1e-3, 1e-4, 1e-5}) {
      const MatX fd = (multiplicative_compound(MatX::Identity(n, n) + eps * A, k) - I) / eps;
      errs.push_back((fd - exact).norm());
    }
    CHECK(errs[1] < errs[0]);
    CHECK(errs[2] < errs[1]);
    // error shrinks by roughly 10x per eps decade (order-eps convergence)
    CHECK(errs[1] < 0.2 * errs[0]);
    CHECK(errs[2] < 0.2 * errs[1]);
    CHECK(errs[2] < 1e-3);
  }
}

TEST_CASE("matrix measure formulas") {
  MatX D(2, 2);
  D << -1, 0, 0, -5;
  CHECK(matrix_measure(D, NormKind::Two) == doctest::Approx(-1.0));

  MatX A(2, 2);
  A << -2, 1, 0, -3;
  CHECK(matrix_measure(A, NormKind::One) == -2.0);
  CHECK(matrix_measure(A, NormKind::Infinity) == -1.0);
  CHECK_THROWS_AS(matrix_measure(MatX::Zero(2, 3), NormKind::One), DomainError);
}

TEST_CASE("mu1(A) equals muInf(A^T) and mu2 of symmetric equals max eigenvalue") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 5);
    const MatX A = random_matrix(rng, n, n);
    CHECK(matrix_measure(A, NormKind::One) ==
          doctest::Approx(matrix_measure(A.transpose(), NormKind::Infinity)));
    const MatX S = 0.5 * (A + A.transpose());
    Eigen::SelfAdjointEigenSolver<MatX> es(S);
    CHECK(matrix_measure(S, NormKind::Two) ==
          doctest::Approx(es.eigenvalues().maxCoeff()).epsilon(1e-12));
  }
}

TEST_CASE("compound measure: two-norm route vs eigensolver, 1/inf vs A^[k]") {
  MatX D(3, 3);
  D.setZero();
  D.diagonal() << -1, -2, -3;
  CHECK(compound_measure(D, 2, NormKind::Two) == doctest::Approx(-3.0));
  CHECK(compound_measure(MatX::Zero(3, 3), 2, NormKind::One) == 0.0);

  SplitMix64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 4);
    const MatX A = random_matrix(rng, n, n);
    for (int k = 1; k <= n; ++k) {
      // sum of k largest symmetric-part eigenvalues
      Eigen::SelfAdjointEigenSolver<MatX> es(0.5 * (A + A.transpose()));
      double expect = 0.0;
      for (int i = 0; i < k; ++i) expect += es.eigenvalues()(n - 1 - i);
      CHECK(compound_measure(A, k, NormKind::Two) == doctest::Approx(expect).epsilon(1e-12));
      // tuple formulas agree with the measure of the formed compound
      const MatX Ak = additive_compound(A, k);
      CHECK(compound_measure(A, k, NormKind::One) ==
            doctest::Approx(matrix_measure(Ak, NormKind::One)).epsilon(1e-12));
      CHECK(compound_measure(A, k, NormKind::Infinity) ==
            doctest::Approx(matrix_measure(Ak, NormKind::Infinity)).epsilon(1e-12));
    }
  }
}

TEST_CASE("planar A: compound measure at k = 2 is exactly the trace") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const MatX A = random_matrix(rng, 2, 2);
    const double tr = A(0, 0) + A(1, 1);
    CHECK(compound_measure(A, 2, NormKind::One) == tr);
    CHECK(compound_measure(A, 2, NormKind::Infinity) == tr);
    CHECK(compound_measure(A, 2, NormKind::Two) == doctest::Approx(tr).epsilon(1e-12));
  }
}
