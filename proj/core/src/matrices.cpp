#include "zeroruns/matrices.hpp"

#include <algorithm>

#include "zeroruns/errors.hpp"
#include "zeroruns/palindromic.hpp"
#include "zeroruns/runcount.hpp"

namespace zeroruns {

const char* to_string(MatrixKind kind) {
  return kind == MatrixKind::plain ? "plain" : "palindromic";
}

CountMatrix::CountMatrix(int n, MatrixKind kind)
    : n_(n), kind_(kind), entries_(static_cast<std::size_t>(n + 1) * (n + 1), 0) {}

std::vector<Count> CountMatrix::row(int x) const {
  std::vector<Count> out;
  out.reserve(static_cast<std::size_t>(order()));
  for (int k = 0; k < order(); ++k) out.push_back(at(x, k));
  return out;
}

std::size_t CountMatrix::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const Count& c) { return c != 0; }));
}

bool CountMatrix::is_lower_triangular() const {
  for (int x = 0; x < order(); ++x) {
    for (int k = x + 1; k < order(); ++k) {
      if (at(x, k) != 0) return false;
    }
  }
  return true;
}

class MatrixBuilder {
 public:
  static CountMatrix build(int n, MatrixKind kind) {
    CountMatrix m(n, kind);
    for (int x = 0; x <= n; ++x) {
      for (int k = 0; k <= x; ++k) {
        m.entries_[static_cast<std::size_t>(x) * m.order() + k] =
            kind == MatrixKind::plain ? F(n, x, k) : F_hat(n, x, k);
      }
    }
    return m;
  }
};

CountMatrix build_matrix(int n, MatrixKind kind) {
  if (n < 1) throw PreconditionError("build_matrix: requires n >= 1");
  return MatrixBuilder::build(n, kind);
}

std::vector<Count> row_sums(const CountMatrix& m) {
  std::vector<Count> out(static_cast<std::size_t>(m.order()), 0);
  for (int x = 0; x < m.order(); ++x) {
    for (int k = 0; k < m.order(); ++k) out[x] += m.at(x, k);
  }
  return out;
}

std::vector<Count> col_sums(const CountMatrix& m) {
  std::vector<Count> out(static_cast<std::size_t>(m.order()), 0);
  for (int x = 0; x < m.order(); ++x) {
    for (int k = 0; k < m.order(); ++k) out[k] += m.at(x, k);
  }
  return out;
}

Count grand_sum(const CountMatrix& m) {
  Count sum = 0;
  for (const auto& r : row_sums(m)) sum += r;
  return sum;
}

Count trace(const CountMatrix& m) {
  Count sum = 0;
  for (int i = 0; i < m.order(); ++i) sum += m.at(i, i);
  return sum;
}

Count determinant(const CountMatrix& m) {
  Count product = 1;
  for (int i = 0; i < m.order(); ++i) product *= m.at(i, i);
  return product;
}

std::vector<Count> eigenvalues(const CountMatrix& m) {
  std::vector<Count> diag;
  for (int i = 0; i < m.order(); ++i) diag.push_back(m.at(i, i));
  std::sort(diag.begin(), diag.end());
  return diag;
}

bool is_idempotent(const CountMatrix& m) {
  if (m.kind() != MatrixKind::palindromic) {
    throw PreconditionError("is_idempotent: only defined for palindromic matrices");
  }
  const int size = m.order();
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      Count entry = 0;
      for (int t = 0; t < size; ++t) entry += m.at(i, t) * m.at(t, j);
      if (entry != m.at(i, j)) return false;
    }
  }
  return true;
}

}  // namespace zeroruns
