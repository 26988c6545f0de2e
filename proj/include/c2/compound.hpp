#pragma once

// Compound matrices A^(k), A^[k] and matrix measures for small dense
// matrices. Index sequences are 1-based in the public vocabulary.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "c2/types.hpp"

namespace c2 {

/// Strictly increasing 1-based index sequence, an element of Q_{k,n}.
using IndexSequence = std::vector<int>;

/// All C(n,k) increasing sequences of k indices from [1,n], lexicographically
/// ordered. Q_{2,3} = {(1,2),(1,3),(2,3)}.
inline std::vector<IndexSequence> lex_sequences(int k, int n) {
  if (k < 1 || k > n) throw DomainError("lex_sequences: need 1 <= k <= n");
  std::vector<IndexSequence> out;
  IndexSequence cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    // advance to the next sequence in lex order
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == n - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int i = pos + 1; i < k; ++i) cur[i] = cur[i - 1] + 1;
  }
  return out;
}

namespace detail {

template <typename Scalar>
Scalar det_direct(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
  switch (m.rows()) {
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    default:  // 3x3 cofactor expansion, exact on integer inputs
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }
}

}  // namespace detail

/// Minor A(rows|cols): determinant of the selected square submatrix.
/// Direct expansion for k <= 3, partial-pivot LU above.
template <typename Derived>
typename Derived::Scalar minor_of(const Eigen::MatrixBase<Derived>& A,
                                  const IndexSequence& rows,
                                  const IndexSequence& cols) {
  using Scalar = typename Derived::Scalar;
  const int k = static_cast<int>(rows.size());
  if (k == 0 || k != static_cast<int>(cols.size()))
    throw DomainError("minor_of: row/col index counts differ or are empty");
  for (int r : rows)
    if (r < 1 || r > A.rows()) throw DomainError("minor_of: row index out of range");
  for (int c : cols)
    if (c < 1 || c > A.cols()) throw DomainError("minor_of: col index out of range");

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub(i, j) = A(rows[i] - 1, cols[j] - 1);
  if (k <= 3) return detail::det_direct(sub);
  return sub.partialPivLu().determinant();
}

/// Multiplicative compound A^(k): the C(n,k) x C(m,k) matrix of all k-minors,
/// rows and columns ordered per lex_sequences. A^(1) = A; for square A,
/// A^(n) is the 1x1 matrix holding det(A).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
multiplicative_compound(const Eigen::MatrixBase<Derived>& A, int k) {
  if (k < 1 || k > std::min(A.rows(), A.cols()))
    throw DomainError("multiplicative_compound: need 1 <= k <= min(rows, cols)");
  const auto row_seqs = lex_sequences(k, static_cast<int>(A.rows()));
  const auto col_seqs = lex_sequences(k, static_cast<int>(A.cols()));
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      row_seqs.size(), col_seqs.size());
  for (std::size_t i = 0; i < row_seqs.size(); ++i)
    for (std::size_t j = 0; j < col_seqs.size(); ++j)
      out(i, j) = minor_of(A, row_seqs[i], col_seqs[j]);
  return out;
}

/// Additive compound A^[k]: first-order coefficient of (I + eps A)^(k).
/// Closed-form entry rule: diagonal (I,I) = sum of a_{i_p i_p}; entry (I,J)
/// where I and J differ in exactly one index is +/- a_{i,j} with the sign
/// given by the parity of the two differing positions; zero otherwise.
/// For 2x2 A and k = 2 this is the 1x1 matrix [trace(A)].
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
additive_compound(const Eigen::MatrixBase<Derived>& A, int k) {
  using Scalar = typename Derived::Scalar;
  const int n = static_cast<int>(A.rows());
  if (A.rows() != A.cols()) throw DomainError("additive_compound: matrix must be square");
  if (k < 1 || k > n) throw DomainError("additive_compound: need 1 <= k <= n");

  const auto seqs = lex_sequences(k, n);
  const int N = static_cast<int>(seqs.size());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(N, N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const IndexSequence& I = seqs[i];
      const IndexSequence& J = seqs[j];
      if (i == j) {
        Scalar s{};
        for (int p = 0; p < k; ++p) s += A(I[p] - 1, I[p] - 1);
        out(i, i) = s;
        continue;
      }
      // find symmetric difference; nonzero only when it has one index per side
      int only_i = -1, only_j = -1, pos_i = -1, pos_j = -1, diff = 0;
      for (int p = 0; p < k && diff <= 1; ++p) {
        if (!std::binary_search(J.begin(), J.end(), I[p])) {
          only_i = I[p];
          pos_i = p;
          ++diff;
        }
      }
      if (diff != 1) continue;
      for (int p = 0; p < k; ++p) {
        if (!std::binary_search(I.begin(), I.end(), J[p])) {
          only_j = J[p];
          pos_j = p;
        }
      }
      const Scalar sign = ((pos_i + pos_j) % 2 == 0) ? Scalar(1) : Scalar(-1);
      out(i, j) = sign * A(only_i - 1, only_j - 1);
    }
  }
  return out;
}

/// Matrix measure (logarithmic norm) mu_p(A) for p in {1, 2, inf}.
inline double matrix_measure(const MatX& A, NormKind norm) {
  if (A.rows() != A.cols()) throw DomainError("matrix_measure: matrix must be square");
  const int n = static_cast<int>(A.rows());
  switch (norm) {
    case NormKind::One: {
      double best = -std::numeric_limits<double>::infinity();
      for (int j = 0; j < n; ++j) {
        double s = A(j, j);
        for (int i = 0; i < n; ++i)
          if (i != j) s += std::abs(A(i, j));
        best = std::max(best, s);
      }
      return best;
    }
    case NormKind::Infinity: {
      double best = -std::numeric_limits<double>::infinity();
      for (int i = 0; i < n; ++i) {
        double s = A(i, i);
        for (int j = 0; j < n; ++j)
          if (j != i) s += std::abs(A(i, j));
        best = std::max(best, s);
      }
      return best;
    }
    case NormKind::Two: {
      Eigen::SelfAdjointEigenSolver<MatX> es(0.5 * (A + A.transpose()));
      return es.eigenvalues().maxCoeff();
    }
  }
  throw DomainError("matrix_measure: unknown norm");
}

/// mu(A^[k]) without forming A^[k]. For the 2-norm this is the sum of the k
/// largest eigenvalues of (A + A^T)/2; for 1/inf it is the k-tuple max
/// formula, which coincides with matrix_measure(additive_compound(A, k), .).
inline double compound_measure(const MatX& A, int k, NormKind norm) {
  if (A.rows() != A.cols()) throw DomainError("compound_measure: matrix must be square");
  const int n = static_cast<int>(A.rows());
  if (k < 1 || k > n) throw DomainError("compound_measure: need 1 <= k <= n");

  if (norm == NormKind::Two) {
    Eigen::SelfAdjointEigenSolver<MatX> es(0.5 * (A + A.transpose()));
    const auto& ev = es.eigenvalues();  // ascending
    double s = 0.0;
    for (int i = 0; i < k; ++i) s += ev(n - 1 - i);
    return s;
  }

  const auto tuples = lex_sequences(k, n);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& t : tuples) {
    double s = 0.0;
    for (int idx : t) s += A(idx - 1, idx - 1);
    for (int other = 1; other <= n; ++other) {
      if (std::binary_search(t.begin(), t.end(), other)) continue;
      for (int idx : t)
        s += (norm == NormKind::One) ? std::abs(A(other - 1, idx - 1))
                                     : std::abs(A(idx - 1, other - 1));
    }
    best = std::max(best, s);
  }
  return best;
}

}  // namespace c2
