#pragma once

// F(n, x, k): the number of length-n binary words with exactly x zeros whose
// longest run of zeros has length exactly k.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "zeroruns/count.hpp"

namespace zeroruns {

/// Which branch of F's dispatch produced a value.
enum class FPath {
  infeasible,     ///< empty class, value 0
  base,           ///< k = 0 or x = n
  diagonal,       ///< F(n, x, x) = n - x + 1
  closed_high_k,  ///< x < 2k closed form
  recurrence,     ///< prefix decomposition over shorter words
};

const char* to_string(FPath p);

/// Exact F(n, x, k). Total on all integer triples: anything infeasible is 0.
/// Memoized in a process-wide table that is safe for concurrent callers.
Count F(int n, int x, int k);

FPath F_path(int n, int x, int k);

/// F(n, x, x) = n - x + 1, for 1 <= x <= n.
Count F_diagonal(int n, int x);

/// F(n, 2, 1) = (n - 1)(n - 2) / 2, for n >= 2.
Count F_triangular(int n);

/// F(n, x, x - 1) = (n - x)(n - x + 1), for x >= 3, n >= x.
Count F_near_diagonal(int n, int x);

/// For n - 1 > x >= k >= 1 with x < 2k:
///   2 C(n-k-1, x-k) + (n-k-1) C(n-k-2, x-k).
/// Also accepts the one case the formula misses, n odd with x = n - 1 and
/// k = (n - 1) / 2, whose value is 1.
Count F_closed_high_k(int n, int x, int k);

/// Positivity test F(n, x, k) > 0 from the bound on x given n and k.
bool support_contains(int n, int x, int k);

/// Least k with F(n, x, k) > 0, floor(n / (n - x + 1)), for 1 <= x <= n.
int min_k(int n, int x);

struct SupportSet {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  ///< sorted by (x, k)

  bool contains(int x, int k) const;
  std::size_t size() const { return pairs.size(); }
};

/// All (x, k) with F(n, x, k) > 0, generated from the least-k bound for each x.
SupportSet support_set(int n);

/// C(n+2, 2) - sum_{i=0..n} floor(n / (i+1)).
Count support_size_formula(int n);

/// Cache controls for F's memo table.
namespace runcount_cache {
void set_limit(std::optional<std::size_t> limit);
std::size_t size();
void clear();
}  // namespace runcount_cache

}  // namespace zeroruns
