#include <gtest/gtest.h>

#include <vector>

#include "zeroruns/errors.hpp"
#include "zeroruns/matrices.hpp"

namespace zeroruns {
namespace {

std::vector<Count> counts(std::initializer_list<int> values) {
  return std::vector<Count>(values.begin(), values.end());
}

TEST(CountMatrix, PrintedRows) {
  EXPECT_EQ(build_matrix(4, MatrixKind::plain).row(2), counts({0, 3, 3, 0, 0}));
  EXPECT_EQ(build_matrix(4, MatrixKind::palindromic).row(2), counts({0, 1, 1, 0, 0}));
  const CountMatrix f1 = build_matrix(1, MatrixKind::plain);
  EXPECT_EQ(f1.row(0), counts({1, 0}));
  EXPECT_EQ(f1.row(1), counts({0, 1}));
  EXPECT_THROW(build_matrix(0, MatrixKind::plain), PreconditionError);
}

TEST(CountMatrix, Sums) {
  EXPECT_EQ(row_sums(build_matrix(4, MatrixKind::plain)), counts({1, 4, 6, 4, 1}));
  EXPECT_EQ(grand_sum(build_matrix(5, MatrixKind::palindromic)), 8);
  EXPECT_EQ(row_sums(build_matrix(7, MatrixKind::palindromic)), counts({1, 1, 3, 3, 3, 3, 1, 1}));
  EXPECT_EQ(col_sums(build_matrix(4, MatrixKind::plain)), counts({1, 7, 5, 2, 1}));
}

TEST(CountMatrix, Spectrum) {
  const CountMatrix f4 = build_matrix(4, MatrixKind::plain);
  EXPECT_TRUE(f4.is_lower_triangular());
  EXPECT_EQ(determinant(f4), 24);
  EXPECT_EQ(trace(f4), 11);
  EXPECT_EQ(eigenvalues(build_matrix(3, MatrixKind::plain)), counts({1, 1, 2, 3}));
  EXPECT_EQ(trace(build_matrix(4, MatrixKind::palindromic)), 3);
  EXPECT_EQ(determinant(build_matrix(4, MatrixKind::palindromic)), 0);
}

TEST(CountMatrix, Idempotence) {
  EXPECT_TRUE(is_idempotent(build_matrix(4, MatrixKind::palindromic)));
  EXPECT_FALSE(is_idempotent(build_matrix(5, MatrixKind::palindromic)));
  EXPECT_TRUE(is_idempotent(build_matrix(1, MatrixKind::palindromic)));
  EXPECT_THROW(is_idempotent(build_matrix(4, MatrixKind::plain)), PreconditionError);
}

TEST(CountMatrix, NonzeroEntries) {
  EXPECT_EQ(build_matrix(5, MatrixKind::plain).nonzero_count(), 11U);
  EXPECT_EQ(build_matrix(5, MatrixKind::palindromic).nonzero_count(), 7U);
}

}  // namespace
}  // namespace zeroruns
