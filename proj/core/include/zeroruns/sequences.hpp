#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zeroruns/count.hpp"

namespace zeroruns {

/// How T and O are computed. The linear recurrences are the default; the
/// identity paths sum F over the run-length classes and must agree with them.
enum class SeqPath { recurrence, identity };

/// Number of length-n words without r consecutive ones (r >= 2, n >= 1).
Count T(int r, int n, SeqPath path = SeqPath::recurrence);

/// Total number of zeros over the words counted by T(r, n).
Count O(int r, int n, SeqPath path = SeqPath::recurrence);

/// Total number of ones over B_n^{x,k}: (n - x) F(n, x, k).
Count ones_total(int n, int x, int k);

/// f_1 = 2, f_2 = 3, f_n = f_{n-1} + f_{n-2}: words of length n with no two
/// adjacent zeros. f_0 = 1 extends the recurrence downward.
Count fib_f(int n);

enum class SequenceName {
  fibonacci_f,
  t_run,
  o_run,
  triangular,
  oblong,
  tetrahedral,
  column_sum,
  palindromic_column_sum,
};

/// Catalog names as used on the command line ("fibonacci-f", "t-run", ...).
std::string_view to_string(SequenceName name);
std::optional<SequenceName> parse_sequence_name(std::string_view text);
std::vector<SequenceName> sequence_catalog();

/// A request for `count` consecutive terms indexed from `start`.
///   fibonacci-f             f_n
///   t-run, o-run            T(r, n), O(r, n)
///   triangular              F(n, 2, 1)
///   oblong                  F(n, x, x - 1) for fixed x >= 3
///   tetrahedral             F(n, 3, 1)
///   column-sum              sum_x F(n, x, k)
///   palindromic-column-sum  sum_x F_hat(n, x, k)
struct SequenceSpec {
  SequenceName name = SequenceName::fibonacci_f;
  int r = 2;
  int k = 1;
  int x = 3;
  int start = 1;
  int count = 10;
};

std::vector<Count> sequence(const SequenceSpec& spec);

}  // namespace zeroruns
