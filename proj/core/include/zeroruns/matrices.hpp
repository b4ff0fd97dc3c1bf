#pragma once

#include <vector>

#include "zeroruns/count.hpp"

namespace zeroruns {

enum class MatrixKind { plain, palindromic };

const char* to_string(MatrixKind kind);

/// (n+1) x (n+1) matrix with entry (x, k) = F(n, x, k) or F_hat(n, x, k).
/// Lower triangular by construction, since no class has k > x.
class CountMatrix {
 public:
  CountMatrix(int n, MatrixKind kind);

  int n() const { return n_; }
  int order() const { return n_ + 1; }
  MatrixKind kind() const { return kind_; }

  const Count& at(int x, int k) const {
    return entries_[static_cast<std::size_t>(x) * order() + k];
  }

  std::vector<Count> row(int x) const;
  std::size_t nonzero_count() const;
  bool is_lower_triangular() const;

 private:
  friend class MatrixBuilder;
  int n_;
  MatrixKind kind_;
  std::vector<Count> entries_;
};

/// Builds F_n or F_hat_n; requires n >= 1.
CountMatrix build_matrix(int n, MatrixKind kind);

std::vector<Count> row_sums(const CountMatrix& m);
std::vector<Count> col_sums(const CountMatrix& m);
Count grand_sum(const CountMatrix& m);

Count trace(const CountMatrix& m);

/// Product of the diagonal; exact because the matrix is triangular.
Count determinant(const CountMatrix& m);

/// Diagonal entries sorted ascending. For a triangular matrix these are the
/// eigenvalues with algebraic multiplicity.
std::vector<Count> eigenvalues(const CountMatrix& m);

/// M * M == M in exact arithmetic. Only meaningful for the palindromic kind,
/// whose diagonal is 0/1 and where idempotence is equivalent to
/// diagonalizability; plain matrices are rejected.
bool is_idempotent(const CountMatrix& m);

}  // namespace zeroruns
