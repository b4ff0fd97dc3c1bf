#pragma once

// Compositions and partitions of n+1 seen through words of length n. Under the
// word <-> composition bijection a zero run of length l is a summand l+1 and
// each one is a plus sign, so the longest zero run k is the largest summand
// minus one. Two words give the same partition exactly when their zero-run
// multisets agree; P(n, x, k) counts those classes inside B_n^{x,k}.

#include <optional>
#include <vector>

#include "zeroruns/count.hpp"

namespace zeroruns {

/// Entry s (1 <= s <= m) is the number of compositions of m, or palindromic
/// compositions when requested, whose largest summand is exactly s. Entry 0
/// is always 0. Computed as the column sums of the order m-1 count matrix.
std::vector<Count> compositions_by_largest_summand(int m, bool palindromic);

/// Closed formula, or the weighted class sum over F / F_hat of order m-1.
enum class TotalsPath { formula, class_sum };

/// Total number of plus signs over all (palindromic) compositions of m >= 2.
Count plus_signs_total(int m, bool palindromic, TotalsPath path = TotalsPath::formula);

/// Total number of summands over all (palindromic) compositions of m >= 2.
Count summands_total(int m, bool palindromic, TotalsPath path = TotalsPath::formula);

struct CompositionStats {
  int target = 0;
  bool palindromic = false;
  std::vector<Count> by_largest_summand;
  Count plus_signs_total;
  Count summands_total;
};

CompositionStats composition_stats(int m, bool palindromic);

/// Number of summands equal to 2 across all palindromic compositions of m
/// whose summands are 1 or 2: sum_x x F_hat(m-1, x, 1).
Count two_count_palindromic(int m);

enum class PPath {
  infeasible,
  special,      ///< one of the single-class cases
  k2_rule,      ///< closed rule for k = 2
  recurrence,   ///< strip one k-run, recurse on the rest (k >= 3)
};

enum class PHatPath {
  infeasible,
  special,
  odd_center_one,  ///< n odd, x even: P((n-1)/2, x/2, k)
  central_split,   ///< central summand decomposition, 4 <= x <= n-2, 3 <= k <= x-2
  direct,          ///< structural class count outside the windows above
};

const char* to_string(PPath p);
const char* to_string(PHatPath p);

/// Number of partition classes (distinct zero-run multisets) in B_n^{x,k};
/// equivalently partitions of n+1 whose words fall in that class. Total on
/// integer triples; memoized.
Count P(int n, int x, int k);
PPath P_path(int n, int x, int k);

/// Sum of P over the support of length n; equals p(n+1).
Count P_total(int n);

/// Classical partition numbers p(m) by Euler's pentagonal-number recurrence.
Count partition_function(int m);

/// Palindromic analogue of P over B_hat_n^{x,k}; memoized.
Count P_hat(int n, int x, int k);
PHatPath P_hat_path(int n, int x, int k);

/// Sum of P_hat over the palindromic support of length n.
Count P_hat_total(int n);

/// Palindromic classes counted structurally: a palindrome's zero-run multiset
/// is a central run c (0 when there is none) plus twice the multiset of the
/// other runs of its half. Used where no printed formula applies.
Count palindromic_classes_direct(int n, int x, int k);

/// The printed piecewise rules for P_hat(n, x, 2), where one applies.
std::optional<Count> p_hat_k2_printed(int n, int x);

struct K2RuleCheck {
  int n = 0;
  int x = 0;
  std::optional<Count> printed;  ///< empty when no printed rule covers (n, x)
  Count actual;
  bool matches() const { return !printed || *printed == actual; }
};

K2RuleCheck p_hat_k2_rule_check(int n, int x);

namespace compositions_cache {
void clear();
}  // namespace compositions_cache

}  // namespace zeroruns
