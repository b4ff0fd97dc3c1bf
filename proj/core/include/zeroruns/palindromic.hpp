#pragma once

// F_hat(n, x, k): the palindromic analogue of F. A palindrome is determined by
// its first ceil(n/2) bits, so every value reduces to F on half-length words.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "zeroruns/count.hpp"

namespace zeroruns {

enum class FHatPath {
  infeasible,    ///< out of range, or odd x with even n
  base,          ///< x = 0 or x = n
  odd_center_one,  ///< n odd, x even: center bit is 1, F((n-1)/2, x/2, k)
  central_run,   ///< k > floor(x/2): the k-run is the central run
  recurrence,    ///< split on the half-word's trailing zero run
};

const char* to_string(FHatPath p);

/// Exact number of palindromes of length n with x zeros and longest zero run k.
/// Total on integer triples; memoized and safe for concurrent callers.
Count F_hat(int n, int x, int k);

FHatPath F_hat_path(int n, int x, int k);

/// Closed form for n >= 3, 1 <= x <= n - 2, floor(x/2) < k <= x:
/// C((n-k-2)/2, (x-k)/2) when x, k and n share parity, otherwise 0.
Count F_hat_high_k(int n, int x, int k);

/// The printed positivity condition with q = floor(x/k): x + q - 1 <= n when
/// k | x, x + q <= n otherwise. It has no parity condition, so it disagrees
/// with F_hat (e.g. (4,1,1)); kept for testing, never used by F_hat.
bool lemma_positivity_hat(int n, int x, int k);

struct HatSupportSet {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  ///< sorted by (x, k)

  bool contains(int x, int k) const;
  std::size_t size() const { return pairs.size(); }
};

/// All (x, k) with F_hat(n, x, k) > 0, by direct evaluation.
HatSupportSet support_hat_set(int n);

/// The case formulas for |S_hat(n)| (n >= 2), split on n mod 4, evaluated
/// with exact rationals.
Rational support_hat_formula_exact(int n);

/// Integer value of support_hat_formula_exact; throws std::domain_error if the
/// formula evaluates to a non-integer.
Count support_hat_size_formula(int n);

/// Formula value against the enumerated support size. The enumerated size is
/// authoritative; a mismatch is a finding about the formula.
struct HatSupportCheck {
  int n = 0;
  Rational formula;
  Count enumerated;
  bool matches() const { return formula == Rational(enumerated); }
};

HatSupportCheck check_support_hat_formula(int n);

namespace palindromic_cache {
void set_limit(std::optional<std::size_t> limit);
std::size_t size();
void clear();
}  // namespace palindromic_cache

}  // namespace zeroruns
