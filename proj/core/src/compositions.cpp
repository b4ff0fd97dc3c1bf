#include "zeroruns/compositions.hpp"

#include <algorithm>

#include "zeroruns/errors.hpp"
#include "zeroruns/memo.hpp"
#include "zeroruns/palindromic.hpp"
#include "zeroruns/runcount.hpp"

namespace zeroruns {

namespace {

MemoTable& p_memo() {
  static MemoTable table;
  return table;
}

MemoTable& p_hat_memo() {
  static MemoTable table;
  return table;
}

Count class_count(int n, int x, int k, bool palindromic) {
  return palindromic ? F_hat(n, x, k) : F(n, x, k);
}

// Partitions of `total` into parts <= max_part using at most max_parts parts.
Count bounded_partitions(int total, int max_part, int max_parts) {
  if (total < 0 || max_parts < 0) return 0;
  if (total == 0) return 1;
  if (max_part <= 0) return 0;
  max_part = std::min(max_part, total);
  max_parts = std::min(max_parts, total);
  // ways[p][t]: partitions of t into at most p parts, parts <= current bound.
  // Adding parts of size a one at a time keeps the count exact.
  std::vector<std::vector<Count>> ways(static_cast<std::size_t>(max_parts) + 1,
                                       std::vector<Count>(static_cast<std::size_t>(total) + 1, 0));
  for (auto& row : ways) row[0] = 1;
  for (int a = 1; a <= max_part; ++a) {
    for (int p = 1; p <= max_parts; ++p) {
      for (int t = a; t <= total; ++t) ways[p][t] += ways[p - 1][t - a];
    }
  }
  return ways[max_parts][total];
}

// As above with the largest part exactly `top`.
Count partitions_with_top(int total, int top, int max_parts) {
  if (top <= 0) return total == 0 && max_parts >= 0 ? 1 : 0;
  return bounded_partitions(total, top, max_parts) - bounded_partitions(total, top - 1, max_parts);
}

bool is_single_class_plain(int n, int x, int k) {
  if (k == x || k == x - 1 || k == 1) return true;
  if (x % k == 0 && n == x + x / k - 1) return true;
  return x == n - 1 && n / 2 <= k && k <= n - 1;
}

Count k2_rule(int n, int x) {
  const int i = n - x - (x + 1) / 2 + 1;
  return i < x / 2 - 1 ? Count(i + 1) : Count(x / 2);
}

bool is_single_class_hat(int n, int x, int k) {
  if (k == x || k == 1) return true;
  if (x == n - 1 && 2 * k == n - 1) return true;
  return x % k == 0 && n == x + x / k - 1;
}

bool in_central_split_window(int n, int x, int k) { return 4 <= x && x <= n - 2 && 3 <= k && k <= x - 2; }

// Central summand decomposition for odd n with odd x (central run odd) and
// even n with even x (central run even, possibly empty). Summands whose
// indices are not integers do not occur: the loops only produce central runs
// of the right parity.
Count central_split_value(int n, int x, int k) {
  Count value = 0;
  const int half = n / 2;
  if (n % 2 == 1) {
    for (int i = 0; i <= k / 2 - 1; ++i) value += P(half - i - 1, (x - 2 * i - 1) / 2, k);
    if (k % 2 == 1) {
      for (int j = 0; j <= k; ++j) value += P((n - k) / 2 - 1, (x - k) / 2, j);
    }
  } else {
    for (int i = 0; i <= (k - 1) / 2; ++i) value += P(half - i - 1, (x - 2 * i) / 2, k);
    if (k % 2 == 0) {
      for (int j = 0; j <= k; ++j) value += P((n - k) / 2 - 1, (x - k) / 2, j);
    }
  }
  return value;
}

Count printed_piece(int i, int cap) { return i < cap - 1 ? Count(i + 1) : Count(cap); }

}  // namespace

const char* to_string(PPath p) {
  switch (p) {
    case PPath::infeasible: return "infeasible";
    case PPath::special: return "special";
    case PPath::k2_rule: return "k2_rule";
    case PPath::recurrence: return "recurrence";
  }
  return "unknown";
}

const char* to_string(PHatPath p) {
  switch (p) {
    case PHatPath::infeasible: return "infeasible";
    case PHatPath::special: return "special";
    case PHatPath::odd_center_one: return "odd_center_one";
    case PHatPath::central_split: return "central_split";
    case PHatPath::direct: return "direct";
  }
  return "unknown";
}

std::vector<Count> compositions_by_largest_summand(int m, bool palindromic) {
  if (m < 1) throw PreconditionError("compositions_by_largest_summand: requires m >= 1");
  const int n = m - 1;
  std::vector<Count> out(static_cast<std::size_t>(m) + 1, 0);
  for (int s = 1; s <= m; ++s) {
    for (int x = s - 1; x <= n; ++x) out[s] += class_count(n, x, s - 1, palindromic);
  }
  return out;
}

Count plus_signs_total(int m, bool palindromic, TotalsPath path) {
  if (m < 2) throw PreconditionError("plus_signs_total: requires m >= 2");
  if (path == TotalsPath::class_sum) {
    const int n = m - 1;
    Count sum = 0;
    for (int x = 0; x <= n; ++x) {
      for (int k = 0; k <= x; ++k) sum += Count(n - x) * class_count(n, x, k, palindromic);
    }
    return sum;
  }
  if (!palindromic) return Count(m - 1) * pow2(m - 2);
  if (m % 2 == 1) return Count((m - 1) / 2) * pow2((m - 1) / 2);
  return Count(m - 1) * pow2(m / 2 - 1);
}

Count summands_total(int m, bool palindromic, TotalsPath path) {
  if (m < 2) throw PreconditionError("summands_total: requires m >= 2");
  if (path == TotalsPath::class_sum) {
    const int n = m - 1;
    Count sum = 0;
    for (int x = 0; x <= n; ++x) {
      for (int k = 0; k <= x; ++k) sum += Count(n - x + 1) * class_count(n, x, k, palindromic);
    }
    return sum;
  }
  if (!palindromic) return Count(m + 1) * pow2(m - 2);
  if (m % 2 == 1) return Count((m + 1) / 2) * pow2((m - 1) / 2);
  return Count(m + 1) * pow2(m / 2 - 1);
}

CompositionStats composition_stats(int m, bool palindromic) {
  CompositionStats s;
  s.target = m;
  s.palindromic = palindromic;
  s.by_largest_summand = compositions_by_largest_summand(m, palindromic);
  if (m >= 2) {
    s.plus_signs_total = plus_signs_total(m, palindromic);
    s.summands_total = summands_total(m, palindromic);
  } else {
    s.plus_signs_total = 0;
    s.summands_total = 1;
  }
  return s;
}

Count two_count_palindromic(int m) {
  if (m < 2) throw PreconditionError("two_count_palindromic: requires m >= 2");
  Count sum = 0;
  for (int x = 1; x <= m - 1; ++x) sum += Count(x) * F_hat(m - 1, x, 1);
  return sum;
}

PPath P_path(int n, int x, int k) {
  if (!support_contains(n, x, k)) return PPath::infeasible;
  if (k == 0 || is_single_class_plain(n, x, k)) return PPath::special;
  if (k == 2) return PPath::k2_rule;
  return PPath::recurrence;
}

Count P(int n, int x, int k) {
  switch (P_path(n, x, k)) {
    case PPath::infeasible: return 0;
    case PPath::special: return 1;
    case PPath::k2_rule: return k2_rule(n, x);
    case PPath::recurrence: break;
  }
  const auto key = pack_key(n, x, k);
  if (auto hit = p_memo().find(key)) return *hit;
  // Every class has a member starting with k zeros then a one; the rest is a
  // word of length n-k-1 with x-k zeros and longest run j <= k.
  Count value = 0;
  for (int j = (n - k - 1) / (n - x); j <= k; ++j) value += P(n - k - 1, x - k, j);
  p_memo().store(key, value);
  return value;
}

Count P_total(int n) {
  Count sum = 0;
  for (const auto& [x, k] : support_set(n).pairs) sum += P(n, x, k);
  return sum;
}

Count partition_function(int m) {
  if (m < 0) throw PreconditionError("partition_function: requires m >= 0");
  std::vector<Count> p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = 1;
  for (int t = 1; t <= m; ++t) {
    Count sum = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      if (g1 > t) break;
      const int g2 = j * (3 * j + 1) / 2;
      Count term = p[t - g1];
      if (g2 <= t) term += p[t - g2];
      if (j % 2 == 1) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    p[t] = sum;
  }
  return p[m];
}

Count palindromic_classes_direct(int n, int x, int k) {
  if (F_hat(n, x, k) == 0) return 0;
  Count total = 0;
  for (int c = 0; c <= k; ++c) {
    // Central run parity: even for even n; odd, or absent (center bit 1), for odd n.
    const bool allowed = (n % 2 == 0) ? (c % 2 == 0) : (c == 0 || c % 2 == 1);
    if (!allowed || (x - c) % 2 != 0) continue;
    const int half_total = (x - c) / 2;
    // Ones available to separate the half's runs; an odd n with a central one
    // lets the half's last run touch it.
    const int max_parts = (n % 2 == 1 && c == 0) ? (n - x + 1) / 2 : (n - x) / 2;
    total += (c == k) ? bounded_partitions(half_total, k, max_parts)
                      : partitions_with_top(half_total, k, max_parts);
  }
  return total;
}

PHatPath P_hat_path(int n, int x, int k) {
  if (F_hat(n, x, k) == 0) return PHatPath::infeasible;
  if (x == 0 || is_single_class_hat(n, x, k)) return PHatPath::special;
  if (n % 2 == 1 && x % 2 == 0) return PHatPath::odd_center_one;
  if (in_central_split_window(n, x, k)) return PHatPath::central_split;
  return PHatPath::direct;
}

Count P_hat(int n, int x, int k) {
  const PHatPath path = P_hat_path(n, x, k);
  switch (path) {
    case PHatPath::infeasible: return 0;
    case PHatPath::special: return 1;
    case PHatPath::odd_center_one: return P((n - 1) / 2, x / 2, k);
    case PHatPath::central_split:
    case PHatPath::direct: break;
  }
  const auto key = pack_key(n, x, k);
  if (auto hit = p_hat_memo().find(key)) return *hit;
  Count value = path == PHatPath::central_split ? central_split_value(n, x, k)
                                                : palindromic_classes_direct(n, x, k);
  p_hat_memo().store(key, value);
  return value;
}

Count P_hat_total(int n) {
  Count sum = 0;
  for (const auto& [x, k] : support_hat_set(n).pairs) sum += P_hat(n, x, k);
  return sum;
}

std::optional<Count> p_hat_k2_printed(int n, int x) {
  if (x < 2 || F_hat(n, x, 2) == 0) return std::nullopt;
  const int half = n / 2;
  int i = 0;
  int cap = 0;
  if (n % 2 == 1) {
    if (x % 2 == 0) {
      i = half - x / 2 - (x / 2 + 1) / 2 + 1;
      cap = x / 4;
    } else {
      i = half - x / 2 - (x + 1) / 4;
      cap = (x - 1) / 4;
    }
  } else {
    if ((x / 2) % 2 == 0) {
      i = half - 3 * x / 4;
      cap = x / 4;
    } else {
      i = half - (3 * x - 2) / 4;
      cap = (x - 2) / 4;
    }
  }
  if (i < 0) return std::nullopt;
  return printed_piece(i, cap);
}

K2RuleCheck p_hat_k2_rule_check(int n, int x) {
  return {n, x, p_hat_k2_printed(n, x), P_hat(n, x, 2)};
}

namespace compositions_cache {
void clear() {
  p_memo().clear();
  p_hat_memo().clear();
}
}  // namespace compositions_cache

}  // namespace zeroruns
