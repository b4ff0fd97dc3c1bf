#include "verify.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "zeroruns/compositions.hpp"
#include "zeroruns/errors.hpp"
#include "zeroruns/matrices.hpp"
#include "zeroruns/palindromic.hpp"
#include "zeroruns/runcount.hpp"
#include "zeroruns/sequences.hpp"

namespace zeroruns::cli {

namespace {

template <typename... Args>
std::string describe(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

class Checker {
 public:
  explicit Checker(VerifyReport& report) : report_(report) {}

  template <typename A, typename B, typename... Where>
  void equal(const char* check, const A& got, const B& want, const Where&... where) {
    ++report_.checks;
    if (got == want) return;
    report_.failures.push_back({check, describe(where..., ": got ", got, ", expected ", want)});
  }

  template <typename... Where>
  void holds(const char* check, bool ok, const Where&... where) {
    ++report_.checks;
    if (!ok) report_.failures.push_back({check, describe(where...)});
  }

  void note(const char* check, std::string detail) {
    report_.notes.push_back({check, std::move(detail)});
  }

 private:
  VerifyReport& report_;
};

void require_oracle(int n, int cap, const char* what) {
  if (n > cap) {
    throw ResourceLimitError(describe(what, ": length ", n, " exceeds oracle cap ", cap));
  }
}

void check_oracle_words(Checker& c, int max_n, const OracleLimits& limits) {
  const int top = std::min(max_n, 12);
  require_oracle(top, limits.max_plain, "verify");
  for (int n = 0; n <= top; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const Word w(bits, n);
      c.holds("classify-reversal", classify(w) == classify(w.reversed()), "word ", w.str());
      const Composition comp = string_to_composition(w);
      const RunStats s = classify(w);
      c.equal("bijection-largest-summand", *std::max_element(comp.begin(), comp.end()) - 1,
              s.longest, "word ", w.str());
      c.equal("bijection-plus-signs", static_cast<int>(comp.size()) - 1, w.ones(), "word ", w.str());
      c.holds("bijection-palindrome", w.is_palindrome() == is_palindromic(comp), "word ", w.str());
      c.holds("bijection-roundtrip", composition_to_string(comp) == w, "word ", w.str());
    }
  }
}

void check_core(Checker& c, int max_n, const OracleLimits& limits) {
  require_oracle(max_n, limits.max_plain, "verify core");
  check_oracle_words(c, max_n, limits);

  for (int n = 0; n <= max_n; ++n) {
    const ClassTable table = oracle_count(n, false, limits);
    c.equal("oracle-total", table.total(), pow2(n), "n=", n);
    Count total = 0;
    for (int x = 0; x <= n; ++x) {
      Count row = 0;
      Count oracle_row = 0;
      for (int k = 0; k <= n; ++k) {
        const Count f = F(n, x, k);
        c.equal("F-oracle", f, table.at(x, k), "F(", n, ",", x, ",", k, ")");
        c.holds("support-membership", support_contains(n, x, k) == (f > 0), "(", n, ",", x, ",", k, ")");
        row += f;
        oracle_row += table.at(x, k);
      }
      c.equal("F-row-sum", row, binomial(n, x), "n=", n, " x=", x);
      c.equal("oracle-row-sum", oracle_row, binomial(n, x), "n=", n, " x=", x);
      total += row;
    }
    c.equal("F-total", total, pow2(n), "n=", n);

    if (n >= 1) {
      Count fib = 1;
      for (int x = 1; x <= n; ++x) fib += F(n, x, 1);
      c.equal("fibonacci-F", fib, fib_f(n), "n=", n);
    }
    if (n >= 3) c.equal("fibonacci-recurrence", fib_f(n), fib_f(n - 1) + fib_f(n - 2), "n=", n);

    for (int x = 1; x <= n; ++x) {
      c.equal("F-diagonal", F_diagonal(n, x), F(n, x, x), "n=", n, " x=", x);
      int least = 1;
      while (F(n, x, least) == 0) ++least;
      c.equal("min-k", min_k(n, x), least, "n=", n, " x=", x);
      if (x >= 3) c.equal("F-near-diagonal", F_near_diagonal(n, x), F(n, x, x - 1), "n=", n, " x=", x);
      for (int k = 1; k <= x; ++k) {
        if (n - 1 > x && x < 2 * k && support_contains(n, x, k)) {
          c.equal("F-closed-high-k", F_closed_high_k(n, x, k), F(n, x, k), "(", n, ",", x, ",", k, ")");
        }
      }
    }
    if (n >= 2) c.equal("F-triangular", F_triangular(n), F(n, 2, 1), "n=", n);
    if (n >= 5) c.equal("F-tetrahedral", F(n, 3, 1), binomial(n - 2, 3), "n=", n);

    const SupportSet support = support_set(n);
    c.equal("support-size", Count(support.size()), support_size_formula(n), "n=", n);

    if (n >= 1) {
      const CountMatrix m = build_matrix(n, MatrixKind::plain);
      c.equal("matrix-trace", trace(m), Count(1 + n * (n + 1) / 2), "n=", n);
      c.equal("matrix-determinant", determinant(m), factorial(n), "n=", n);
      std::vector<Count> spectrum{1};
      for (int i = 1; i <= n; ++i) spectrum.emplace_back(i);
      c.holds("matrix-eigenvalues", eigenvalues(m) == spectrum, "n=", n);
      c.equal("matrix-nonzero", Count(m.nonzero_count()), support_size_formula(n), "n=", n);
      const auto cols = col_sums(m);
      const auto by_largest = compositions_by_largest_summand(n + 1, false);
      for (int k = 0; k <= n; ++k) {
        c.equal("matrix-column-compositions", cols[k], by_largest[k + 1], "n=", n, " k=", k);
      }
    }
  }

  for (int n = 0; n <= std::min(max_n, 12); ++n) {
    for (int x = 0; x <= n; ++x) {
      for (int k = 0; k <= x; ++k) {
        c.equal("ones-total", ones_total(n, x, k), oracle_ones_total(n, x, k, limits),
                "(", n, ",", x, ",", k, ")");
      }
    }
  }

  for (int r = 2; r <= 6; ++r) {
    for (int n = 1; n <= max_n; ++n) {
      const Count t = T(r, n);
      c.equal("T-oracle", t, oracle_T(r, n, limits), "r=", r, " n=", n);
      c.equal("T-identity", T(r, n, SeqPath::identity), t, "r=", r, " n=", n);
      const Count o = O(r, n);
      c.equal("O-oracle", o, oracle_zero_total(r, n, limits), "r=", r, " n=", n);
      c.equal("O-identity", O(r, n, SeqPath::identity), o, "r=", r, " n=", n);
    }
  }
}

void check_palindromic(Checker& c, int max_n, const OracleLimits& limits) {
  require_oracle(max_n, limits.max_palindromic, "verify palindromic");
  int lemma_mismatches = 0;
  std::string first_lemma_mismatch;
  int literal_row_mismatches = 0;

  for (int n = 0; n <= max_n; ++n) {
    const ClassTable table = oracle_count(n, true, limits);
    c.equal("oracle-hat-total", table.total(), pow2((n + 1) / 2), "n=", n);
    Count total = 0;
    for (int x = 0; x <= n; ++x) {
      Count row = 0;
      for (int k = 0; k <= n; ++k) {
        const Count f = F_hat(n, x, k);
        c.equal("F_hat-oracle", f, table.at(x, k), "F_hat(", n, ",", x, ",", k, ")");
        if (n % 2 == 0 && x % 2 == 1) c.equal("F_hat-parity", f, Count(0), "(", n, ",", x, ",", k, ")");
        if (n >= 3 && x >= 1 && x <= n - 2 && k > x / 2 && k <= x) {
          c.equal("F_hat-high-k", F_hat_high_k(n, x, k), f, "(", n, ",", x, ",", k, ")");
        }
        if (x >= 1 && k >= 1 && k <= x && lemma_positivity_hat(n, x, k) != (f > 0)) {
          if (lemma_mismatches++ == 0) first_lemma_mismatch = describe("(", n, ",", x, ",", k, ")");
        }
        row += f;
      }
      const bool empty_row = n % 2 == 0 && x % 2 == 1;
      c.equal("F_hat-row-sum", row, empty_row ? Count(0) : binomial(n / 2, x / 2), "n=", n, " x=", x);
      if (empty_row && row != binomial(n / 2, x / 2)) ++literal_row_mismatches;
      total += row;
    }
    c.equal("F_hat-total", total, pow2((n + 1) / 2), "n=", n);

    const HatSupportSet support = support_hat_set(n);
    std::size_t positive = table.counts.size();
    c.equal("hat-support-oracle", support.size(), positive, "n=", n);
    if (n >= 2) {
      const HatSupportCheck check = check_support_hat_formula(n);
      if (!check.matches()) {
        c.note("hat-support-formula", describe("n=", n, ": formula ", check.formula, ", enumerated ",
                                               check.enumerated));
      }
    }

    if (n >= 1) {
      const CountMatrix m = build_matrix(n, MatrixKind::palindromic);
      c.equal("hat-matrix-trace", trace(m), Count(1 + (n + 1) / 2), "n=", n);
      if (n >= 2) c.equal("hat-matrix-determinant", determinant(m), Count(0), "n=", n);
      c.equal("hat-matrix-nonzero", m.nonzero_count(), support.size(), "n=", n);
      if (n == 4) c.holds("hat-idempotent", is_idempotent(m), "F_hat_4 should be idempotent");
      if (n == 5) c.holds("hat-idempotent", !is_idempotent(m), "F_hat_5 should not be idempotent");
    }
  }

  for (int h = 1; 2 * h <= max_n; ++h) {
    Count odd = 1;
    for (int x = 0; x <= 2 * h - 1; ++x) odd += F_hat(2 * h - 1, x, 1);
    c.equal("fibonacci-F_hat-odd", odd, fib_f(h), "n=", h);
    Count even = 1;
    for (int i = 0; 2 * i <= 2 * h; ++i) even += F_hat(2 * h, 2 * i, 1);
    c.equal("fibonacci-F_hat-even", even, fib_f(h - 1), "n=", h);
  }

  if (literal_row_mismatches > 0) {
    c.note("hat-row-sum-literal",
           describe(literal_row_mismatches,
                    " rows with n even and x odd are empty, not C(n/2, (x-1)/2)"));
  }
  if (lemma_mismatches > 0) {
    c.note("lemma-hat-positivity",
           describe(lemma_mismatches, " triples disagree with F_hat positivity, first ",
                    first_lemma_mismatch));
  }
}

struct CompositionTally {
  std::vector<Count> by_largest;
  Count plus_signs = 0;
  Count summands = 0;
  Count twos_in_small = 0;  ///< 2's across compositions with summands in {1,2}
};

CompositionTally tally_compositions(int m, bool palindromic) {
  CompositionTally t;
  t.by_largest.assign(static_cast<std::size_t>(m) + 1, 0);
  const int n = m - 1;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const Composition comp = string_to_composition(Word(bits, n));
    if (palindromic && !is_palindromic(comp)) continue;
    const int largest = *std::max_element(comp.begin(), comp.end());
    t.by_largest[largest] += 1;
    t.plus_signs += comp.size() - 1;
    t.summands += comp.size();
    if (largest <= 2) t.twos_in_small += std::count(comp.begin(), comp.end(), 2);
  }
  return t;
}

void check_compositions(Checker& c, int max_n, const OracleLimits& limits) {
  require_oracle(max_n, limits.max_plain, "verify compositions");
  for (int m = 1; m <= max_n + 1; ++m) {
    for (const bool pal : {false, true}) {
      const CompositionTally tally = tally_compositions(m, pal);
      const auto by_largest = compositions_by_largest_summand(m, pal);
      c.holds("largest-summand-enumeration", by_largest == tally.by_largest, "m=", m,
              pal ? " palindromic" : " plain");
      Count sum = 0;
      for (const auto& v : by_largest) sum += v;
      c.equal("largest-summand-total", sum, pal ? pow2(m / 2) : pow2(m - 1), "m=", m);
      if (m < 2) continue;
      const Count plus = plus_signs_total(m, pal);
      const Count summands = summands_total(m, pal);
      c.equal("plus-signs-enumeration", plus, tally.plus_signs, "m=", m, pal ? " palindromic" : "");
      c.equal("plus-signs-class-sum", plus_signs_total(m, pal, TotalsPath::class_sum), plus, "m=", m);
      c.equal("summands-enumeration", summands, tally.summands, "m=", m, pal ? " palindromic" : "");
      c.equal("summands-class-sum", summands_total(m, pal, TotalsPath::class_sum), summands, "m=", m);
      if (pal) c.equal("two-count", two_count_palindromic(m), tally.twos_in_small, "m=", m);
    }
  }

  for (int n = 0; n <= max_n; ++n) {
    for (const bool pal : {false, true}) {
      const auto classes = oracle_partition_table(n, pal, limits);
      Count total = 0;
      for (int x = 0; x <= n; ++x) {
        for (int k = 0; k <= n; ++k) {
          const auto it = classes.find({x, k});
          const Count want = it == classes.end() ? Count(0) : it->second;
          const Count got = pal ? P_hat(n, x, k) : P(n, x, k);
          c.equal(pal ? "P_hat-oracle" : "P-oracle", got, want, "(", n, ",", x, ",", k, ")");
          total += want;
        }
      }
      c.equal(pal ? "P_hat-total" : "P-total", pal ? P_hat_total(n) : P_total(n), total, "n=", n);
    }
    const Count partitions = P_total(n);
    c.equal("partition-function", partitions, partition_function(n + 1), "n=", n);
    const Count support = support_size_formula(n);
    if (n <= 5) {
      c.equal("support-vs-partitions", support, partitions, "n=", n);
    } else {
      c.holds("support-vs-partitions", support < partitions, "n=", n, ": |S_n| not below P_total");
    }
    for (int x = 2; x <= n; ++x) {
      const K2RuleCheck rule = p_hat_k2_rule_check(n, x);
      if (!rule.matches()) {
        c.note("p_hat-k2-printed-rule",
               describe("n=", n, " x=", x, ": printed ", *rule.printed, ", enumerated ", rule.actual));
      }
    }
  }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view text) {
  for (const Suite s : {Suite::all, Suite::core, Suite::palindromic, Suite::compositions}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::core: return "core";
    case Suite::palindromic: return "palindromic";
    case Suite::compositions: return "compositions";
  }
  return "unknown";
}

VerifyReport verify(int max_n, Suite suite, const OracleLimits& limits) {
  if (max_n < 0) throw PreconditionError("verify: --max-n must be >= 0");
  VerifyReport report;
  report.max_n = max_n;
  report.suite = suite;
  Checker c(report);
  if (suite == Suite::all || suite == Suite::core) check_core(c, max_n, limits);
  if (suite == Suite::all || suite == Suite::palindromic) check_palindromic(c, max_n, limits);
  if (suite == Suite::all || suite == Suite::compositions) check_compositions(c, max_n, limits);
  return report;
}

}  // namespace zeroruns::cli
