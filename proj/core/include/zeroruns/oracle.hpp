#pragma once

// Brute-force enumeration of binary words. Everything here is exponential in
// the word length and exists to validate the counting modules, not to replace
// them.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zeroruns/count.hpp"

namespace zeroruns {

/// A binary word with explicit length, so leading zeros are significant.
/// Character i of the textual form is bit (length - 1 - i) of `bits`.
class Word {
 public:
  static constexpr int max_length = 64;

  Word() = default;
  Word(std::uint64_t bits, int length);

  static Word parse(std::string_view text);

  std::uint64_t bits() const { return bits_; }
  int length() const { return length_; }
  bool empty() const { return length_ == 0; }

  /// Bit at textual position i (0-based from the left).
  bool at(int i) const { return (bits_ >> (length_ - 1 - i)) & 1U; }

  int zeros() const;
  int ones() const { return length_ - zeros(); }

  Word reversed() const;
  bool is_palindrome() const { return reversed() == *this; }

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::uint64_t bits_ = 0;
  int length_ = 0;
};

/// (zero count, longest zero-run length) of a word.
struct RunStats {
  int zeros = 0;
  int longest = 0;
  friend auto operator<=>(const RunStats&, const RunStats&) = default;
};

RunStats classify(const Word& w);

/// Lengths of the maximal zero runs, sorted ascending: the word's
/// zero-run multiset.
using ZeroRunMultiset = std::vector<int>;
ZeroRunMultiset zero_runs(const Word& w);

/// Per-(x,k) counts over B_n, or over its palindromic subset. Only nonzero
/// entries are stored.
struct ClassTable {
  int n = 0;
  bool palindromic = false;
  std::map<std::pair<int, int>, Count> counts;

  /// Count for (x, k); zero when absent.
  Count at(int x, int k) const;
  Count total() const;
};

/// Length caps for the enumerators. Exceeding them raises ResourceLimitError.
struct OracleLimits {
  int max_plain = 22;
  int max_palindromic = 30;
};

ClassTable oracle_count(int n, bool palindromic, const OracleLimits& limits = {});

/// Number of length-n words with no run of r consecutive ones (r >= 2).
Count oracle_T(int r, int n, const OracleLimits& limits = {});

/// Total number of zero bits over the words counted by oracle_T.
Count oracle_zero_total(int r, int n, const OracleLimits& limits = {});

/// Total number of one bits over B_n^{x,k}.
Count oracle_ones_total(int n, int x, int k, const OracleLimits& limits = {});

/// Number of distinct zero-run multisets over B_n^{x,k} (or its palindromic
/// subset); 0 for an empty class.
Count oracle_partition_classes(int n, int x, int k, bool palindromic,
                               const OracleLimits& limits = {});

/// All distinct zero-run multisets over every class of length n, keyed by
/// (x, k). One pass instead of one enumeration per class.
std::map<std::pair<int, int>, Count> oracle_partition_table(int n, bool palindromic,
                                                            const OracleLimits& limits = {});

/// Ordered sequence of positive summands.
using Composition = std::vector<int>;

/// Words of length n <-> compositions of n+1. Composition (c_1..c_r) encodes
/// as blocks of (c_i - 1) zeros followed by a 1, with the last block's 1
/// dropped; a zero run of length l is a summand l+1 and the ones are the
/// plus signs.
Composition string_to_composition(const Word& w);
Word composition_to_string(const Composition& c);

bool is_palindromic(const Composition& c);

}  // namespace zeroruns
