#include "zeroruns/runcount.hpp"

#include <algorithm>
#include <string>

#include "zeroruns/errors.hpp"
#include "zeroruns/memo.hpp"

namespace zeroruns {

namespace {

MemoTable& memo() {
  static MemoTable table;
  return table;
}

bool in_range(int n, int x, int k) { return n >= 0 && x >= 0 && k >= 0 && k <= x && x <= n; }

bool is_closed_high_k_window(int n, int x, int k) {
  return k >= 1 && x >= k && x < 2 * k && x < n - 1;
}

bool is_odd_near_full(int n, int x, int k) { return n % 2 == 1 && x == n - 1 && 2 * k == n - 1; }

Count closed_high_k_value(int n, int x, int k) {
  if (is_odd_near_full(n, x, k)) return 1;
  return 2 * binomial(n - k - 1, x - k) + Count(n - k - 1) * binomial(n - k - 2, x - k);
}

}  // namespace

const char* to_string(FPath p) {
  switch (p) {
    case FPath::infeasible: return "infeasible";
    case FPath::base: return "base";
    case FPath::diagonal: return "diagonal";
    case FPath::closed_high_k: return "closed_high_k";
    case FPath::recurrence: return "recurrence";
  }
  return "unknown";
}

FPath F_path(int n, int x, int k) {
  if (!support_contains(n, x, k)) return FPath::infeasible;
  if (k == 0 || x == n) return FPath::base;
  if (k == x) return FPath::diagonal;
  if (is_closed_high_k_window(n, x, k) || is_odd_near_full(n, x, k)) return FPath::closed_high_k;
  return FPath::recurrence;
}

Count F(int n, int x, int k) {
  switch (F_path(n, x, k)) {
    case FPath::infeasible: return 0;
    case FPath::base: return 1;
    case FPath::diagonal: return n - x + 1;
    case FPath::closed_high_k: return closed_high_k_value(n, x, k);
    case FPath::recurrence: break;
  }

  const auto key = pack_key(n, x, k);
  if (auto hit = memo().find(key)) return *hit;

  // Split on the leading block: i zeros (i < k) then a one, followed by a
  // word still carrying a k-run; or k zeros then a one, followed by any word
  // whose runs are at most k. Every word here has a one since x < n.
  Count value = 0;
  for (int i = 0; i < k; ++i) value += F(n - i - 1, x - i, k);
  for (int j = 0; j <= k; ++j) value += F(n - k - 1, x - k, j);

  memo().store(key, value);
  return value;
}

Count F_diagonal(int n, int x) {
  if (x < 1 || x > n) throw PreconditionError("F_diagonal: requires 1 <= x <= n");
  return n - x + 1;
}

Count F_triangular(int n) {
  if (n < 2) throw PreconditionError("F_triangular: requires n >= 2");
  return Count(n - 1) * (n - 2) / 2;
}

Count F_near_diagonal(int n, int x) {
  if (x < 3 || n < 3) throw PreconditionError("F_near_diagonal: requires x >= 3 and n >= 3");
  if (x > n) throw PreconditionError("F_near_diagonal: requires x <= n");
  return Count(n - x) * (n - x + 1);
}

Count F_closed_high_k(int n, int x, int k) {
  if (is_odd_near_full(n, x, k) && k >= 1) return 1;
  if (!is_closed_high_k_window(n, x, k) || !support_contains(n, x, k)) {
    throw PreconditionError("F_closed_high_k: requires n - 1 > x >= k >= 1, x < 2k, F > 0");
  }
  return closed_high_k_value(n, x, k);
}

bool support_contains(int n, int x, int k) {
  if (!in_range(n, x, k)) return false;
  if (k == 0) return x == 0;
  const int q = x / k;
  return (x % k == 0) ? (x + q - 1 <= n) : (x + q <= n);
}

int min_k(int n, int x) {
  if (x < 1 || x > n) throw PreconditionError("min_k: requires 1 <= x <= n");
  return n / (n - x + 1);
}

bool SupportSet::contains(int x, int k) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::pair{x, k});
}

SupportSet support_set(int n) {
  if (n < 0) throw PreconditionError("support_set: requires n >= 0");
  SupportSet s{n, {{0, 0}}};
  for (int x = 1; x <= n; ++x) {
    for (int k = min_k(n, x); k <= x; ++k) s.pairs.emplace_back(x, k);
  }
  return s;
}

Count support_size_formula(int n) {
  if (n < 0) throw PreconditionError("support_size_formula: requires n >= 0");
  Count floors = 0;
  for (int i = 0; i <= n; ++i) floors += n / (i + 1);
  return binomial(n + 2, 2) - floors;
}

namespace runcount_cache {
void set_limit(std::optional<std::size_t> limit) { memo().set_limit(limit); }
std::size_t size() { return memo().size(); }
void clear() { memo().clear(); }
}  // namespace runcount_cache

}  // namespace zeroruns
