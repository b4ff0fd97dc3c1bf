#include <gtest/gtest.h>

#include <future>
#include <random>
#include <vector>

#include "zeroruns/compositions.hpp"
#include "zeroruns/oracle.hpp"
#include "zeroruns/palindromic.hpp"
#include "zeroruns/runcount.hpp"
#include "zeroruns/sequences.hpp"

namespace zeroruns {
namespace {

class OracleSweep : public ::testing::TestWithParam<int> {};

TEST_P(OracleSweep, CountsMatchEnumeration) {
  const int n = GetParam();
  const ClassTable plain = oracle_count(n, false);
  const ClassTable pal = oracle_count(n, true);
  for (int x = 0; x <= n; ++x) {
    for (int k = 0; k <= n; ++k) {
      ASSERT_EQ(F(n, x, k), plain.at(x, k)) << "F(" << n << ',' << x << ',' << k << ')';
      ASSERT_EQ(F_hat(n, x, k), pal.at(x, k)) << "F_hat(" << n << ',' << x << ',' << k << ')';
    }
  }
}

TEST_P(OracleSweep, PartitionClassesMatchEnumeration) {
  const int n = GetParam();
  const auto plain = oracle_partition_table(n, false);
  const auto pal = oracle_partition_table(n, true);
  auto lookup = [](const auto& table, int x, int k) {
    const auto it = table.find({x, k});
    return it == table.end() ? Count(0) : it->second;
  };
  Count pal_total = 0;
  for (int x = 0; x <= n; ++x) {
    for (int k = 0; k <= n; ++k) {
      ASSERT_EQ(P(n, x, k), lookup(plain, x, k)) << "P(" << n << ',' << x << ',' << k << ')';
      ASSERT_EQ(P_hat(n, x, k), lookup(pal, x, k)) << "P_hat(" << n << ',' << x << ',' << k << ')';
      pal_total += lookup(pal, x, k);
    }
  }
  EXPECT_EQ(P_hat_total(n), pal_total);
}

TEST_P(OracleSweep, RunSequencesMatchEnumeration) {
  const int n = GetParam();
  if (n < 1) return;
  for (int r = 2; r <= 6; ++r) {
    EXPECT_EQ(T(r, n), oracle_T(r, n)) << r;
    EXPECT_EQ(T(r, n, SeqPath::identity), oracle_T(r, n)) << r;
    EXPECT_EQ(O(r, n), oracle_zero_total(r, n)) << r;
    EXPECT_EQ(O(r, n, SeqPath::identity), oracle_zero_total(r, n)) << r;
  }
}

TEST_P(OracleSweep, SupportMatchesPositivity) {
  const int n = GetParam();
  const ClassTable plain = oracle_count(n, false);
  const SupportSet s = support_set(n);
  EXPECT_EQ(s.size(), plain.counts.size());
  for (const auto& [xk, count] : plain.counts) EXPECT_TRUE(s.contains(xk.first, xk.second));
  EXPECT_EQ(support_hat_set(n).size(), oracle_count(n, true).counts.size());
}

INSTANTIATE_TEST_SUITE_P(UpToFourteen, OracleSweep, ::testing::Range(0, 15));

class PalindromicSweep : public ::testing::TestWithParam<int> {};

TEST_P(PalindromicSweep, LongPalindromesMatchEnumeration) {
  const int n = GetParam();
  const ClassTable pal = oracle_count(n, true);
  const auto classes = oracle_partition_table(n, true);
  for (int x = 0; x <= n; ++x) {
    for (int k = 0; k <= x; ++k) {
      ASSERT_EQ(F_hat(n, x, k), pal.at(x, k)) << n << ' ' << x << ' ' << k;
      const auto it = classes.find({x, k});
      ASSERT_EQ(P_hat(n, x, k), it == classes.end() ? Count(0) : it->second) << n << ' ' << x << ' ' << k;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(FifteenToThirty, PalindromicSweep, ::testing::Range(15, 31));

TEST(Identities, TotalsAndRowsUpToThirty) {
  for (int n = 0; n <= 30; ++n) {
    Count total = 0;
    Count pal_total = 0;
    for (int x = 0; x <= n; ++x) {
      Count row = 0;
      Count pal_row = 0;
      for (int k = 0; k <= x; ++k) {
        row += F(n, x, k);
        pal_row += F_hat(n, x, k);
      }
      ASSERT_EQ(row, binomial(n, x));
      ASSERT_EQ(pal_row, (n % 2 == 0 && x % 2 == 1) ? Count(0) : binomial(n / 2, x / 2));
      total += row;
      pal_total += pal_row;
    }
    ASSERT_EQ(total, pow2(n));
    ASSERT_EQ(pal_total, pow2((n + 1) / 2));
  }
}

TEST(Identities, FibonacciUpToThirty) {
  for (int n = 1; n <= 30; ++n) {
    Count plain = 1;
    Count odd = 1;
    Count even = 1;
    for (int x = 1; x <= 2 * n; ++x) {
      if (x <= n) plain += F(n, x, 1);
      odd += F_hat(2 * n - 1, x, 1);
      if (x % 2 == 0) even += F_hat(2 * n, x, 1);
    }
    EXPECT_EQ(plain, fib_f(n)) << n;
    EXPECT_EQ(odd, fib_f(n)) << n;
    EXPECT_EQ(even, fib_f(n - 1)) << n;
  }
}

// Closed forms against the recurrence far beyond the oracle's reach.
TEST(Random, ClosedFormsAgreeAtLargeLengths) {
  std::mt19937 gen(20240611);
  std::uniform_int_distribution<int> length(20, 400);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = length(gen);
    const int x = std::uniform_int_distribution<int>(3, n)(gen);
    EXPECT_EQ(F(n, x, x), F_diagonal(n, x));
    EXPECT_EQ(F(n, x, x - 1), F_near_diagonal(n, x));
    const int k = std::uniform_int_distribution<int>(x / 2 + 1, x)(gen);
    if (x < n - 1 && x < 2 * k && support_contains(n, x, k)) {
      EXPECT_EQ(F(n, x, k), F_closed_high_k(n, x, k)) << n << ' ' << x << ' ' << k;
    }
    if (x <= n - 2 && k > x / 2) EXPECT_EQ(F_hat(n, x, k), F_hat_high_k(n, x, k));
  }
}

TEST(Random, RowSumsAtLargeLengths) {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = std::uniform_int_distribution<int>(60, 160)(gen);
    const int x = std::uniform_int_distribution<int>(0, n)(gen);
    Count row = 0;
    for (int k = 0; k <= x; ++k) row += F(n, x, k);
    EXPECT_EQ(row, binomial(n, x)) << n << ' ' << x;
  }
}

TEST(Concurrency, ParallelCallersSeeSerialValues) {
  runcount_cache::clear();
  palindromic_cache::clear();
  compositions_cache::clear();
  std::vector<std::future<std::vector<Count>>> jobs;
  for (int t = 0; t < 4; ++t) {
    jobs.push_back(std::async(std::launch::async, [t] {
      std::vector<Count> out;
      for (int n = 30 + t; n <= 60; n += 3) {
        for (int x = 0; x <= n; x += 5) {
          for (int k = 0; k <= x; k += 2) {
            out.push_back(F(n, x, k));
            out.push_back(F_hat(n, x, k));
            out.push_back(P(n, x, k));
            out.push_back(P_hat(n, x, k));
          }
        }
      }
      return out;
    }));
  }
  std::vector<std::vector<Count>> parallel;
  for (auto& j : jobs) parallel.push_back(j.get());
  runcount_cache::clear();
  palindromic_cache::clear();
  compositions_cache::clear();
  for (int t = 0; t < 4; ++t) {
    std::size_t i = 0;
    for (int n = 30 + t; n <= 60; n += 3) {
      for (int x = 0; x <= n; x += 5) {
        for (int k = 0; k <= x; k += 2) {
          ASSERT_EQ(parallel[t][i++], F(n, x, k));
          ASSERT_EQ(parallel[t][i++], F_hat(n, x, k));
          ASSERT_EQ(parallel[t][i++], P(n, x, k));
          ASSERT_EQ(parallel[t][i++], P_hat(n, x, k));
        }
      }
    }
  }
}

}  // namespace
}  // namespace zeroruns
