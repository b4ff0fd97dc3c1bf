#include "zeroruns/palindromic.hpp"

#include <algorithm>
#include <stdexcept>

#include "zeroruns/errors.hpp"
#include "zeroruns/memo.hpp"
#include "zeroruns/runcount.hpp"

namespace zeroruns {

namespace {

MemoTable& memo() {
  static MemoTable table;
  return table;
}

bool in_range(int n, int x, int k) { return n >= 0 && x >= 0 && k >= 0 && k <= x && x <= n; }

bool same_parity(int a, int b) { return (a - b) % 2 == 0; }

Count high_k_value(int n, int x, int k) {
  if (!same_parity(x, n) || !same_parity(k, n)) return 0;
  return binomial((n - k - 2) / 2, (x - k) / 2);
}

// Recurrence over the half-word, for n + x even and 1 <= k <= floor(x/2).
// The palindrome is reverse(w) 1 0^c 1 w around a central zero run c. Either
// c < k and w carries the k-run, or c = k and w's runs are at most k. The
// central run has the parity of n, which is what the two printed cases encode.
Count half_recurrence(int n, int x, int k) {
  Count value = 0;
  const int half = n / 2;
  const int half_zeros = x / 2;
  const int shorter_centers = (k + n) % 2 == 0 ? k / 2 : (k + 1) / 2;
  for (int i = 0; i < shorter_centers; ++i) value += F(half - i - 1, half_zeros - i, k);
  if ((k + n) % 2 == 0) {
    for (int j = 0; j <= k; ++j) value += F((n - k) / 2 - 1, (x - k) / 2, j);
  }
  return value;
}

}  // namespace

const char* to_string(FHatPath p) {
  switch (p) {
    case FHatPath::infeasible: return "infeasible";
    case FHatPath::base: return "base";
    case FHatPath::odd_center_one: return "odd_center_one";
    case FHatPath::central_run: return "central_run";
    case FHatPath::recurrence: return "recurrence";
  }
  return "unknown";
}

FHatPath F_hat_path(int n, int x, int k) {
  if (!in_range(n, x, k)) return FHatPath::infeasible;
  if (n % 2 == 0 && x % 2 == 1) return FHatPath::infeasible;
  if (x == 0 || x == n) return (k == x) ? FHatPath::base : FHatPath::infeasible;
  if (k == 0) return FHatPath::infeasible;
  if (n % 2 == 1 && x % 2 == 0) return FHatPath::odd_center_one;
  if (k > x / 2) return FHatPath::central_run;
  return FHatPath::recurrence;
}

Count F_hat(int n, int x, int k) {
  switch (F_hat_path(n, x, k)) {
    case FHatPath::infeasible: return 0;
    case FHatPath::base: return 1;
    case FHatPath::odd_center_one: return F((n - 1) / 2, x / 2, k);
    case FHatPath::central_run: return high_k_value(n, x, k);
    case FHatPath::recurrence: break;
  }
  const auto key = pack_key(n, x, k);
  if (auto hit = memo().find(key)) return *hit;
  Count value = half_recurrence(n, x, k);
  memo().store(key, value);
  return value;
}

Count F_hat_high_k(int n, int x, int k) {
  if (n < 3 || x < 1 || x > n - 2 || k <= x / 2 || k > x) {
    throw PreconditionError(
        "F_hat_high_k: requires n >= 3, 1 <= x <= n - 2, floor(x/2) < k <= x");
  }
  return high_k_value(n, x, k);
}

bool lemma_positivity_hat(int n, int x, int k) {
  if (n < 1 || x < 1 || k < 1) return false;
  const int q = x / k;
  return (x % k == 0) ? (x + q - 1 <= n) : (x + q <= n);
}

bool HatSupportSet::contains(int x, int k) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::pair{x, k});
}

HatSupportSet support_hat_set(int n) {
  if (n < 0) throw PreconditionError("support_hat_set: requires n >= 0");
  HatSupportSet s{n, {}};
  for (int x = 0; x <= n; ++x) {
    for (int k = 0; k <= x; ++k) {
      if (F_hat(n, x, k) > 0) s.pairs.emplace_back(x, k);
    }
  }
  return s;
}

Rational support_hat_formula_exact(int n) {
  if (n < 2) throw PreconditionError("support_hat_size_formula: requires n >= 2");
  if (n % 2 == 0) {
    Count floors = 0;
    for (int i = 1; i <= n / 2; ++i) floors += n / (2 * i + 1);
    Rational value = 1 + Rational(n * (n + 2), 8) - Rational(floors);
    value += (n % 4 == 0) ? Rational(n * n, 16) : Rational(n * n - 4, 16);
    return value;
  }
  Count floors = 0;
  for (int i = 1; i <= n - 2; ++i) floors += n / (i + 1);
  if ((n - 1) % 4 == 0) {
    return 1 + Rational(5 * (n + 3) * (n - 1), 16) - Rational(floors);
  }
  return 1 + Rational((n + 3) * (n - 1), 4) - Rational(floors) + Rational((n + 1) * (n + 1), 16);
}

Count support_hat_size_formula(int n) {
  const Rational v = support_hat_formula_exact(n);
  if (boost::multiprecision::denominator(v) != 1) {
    throw std::domain_error("support_hat_size_formula: non-integral value for n = " +
                            std::to_string(n));
  }
  return boost::multiprecision::numerator(v);
}

HatSupportCheck check_support_hat_formula(int n) {
  return {n, support_hat_formula_exact(n), Count(support_hat_set(n).size())};
}

namespace palindromic_cache {
void set_limit(std::optional<std::size_t> limit) { memo().set_limit(limit); }
std::size_t size() { return memo().size(); }
void clear() { memo().clear(); }
}  // namespace palindromic_cache

}  // namespace zeroruns
