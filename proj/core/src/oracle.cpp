#include "zeroruns/oracle.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <set>
#include <thread>

#include "zeroruns/errors.hpp"

namespace zeroruns {

namespace {

constexpr std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Longest block of set bits: each step shortens every block by one.
int longest_ones(std::uint64_t v) {
  int len = 0;
  while (v != 0) {
    v &= v >> 1;
    ++len;
  }
  return len;
}

std::uint64_t reverse_low_bits(std::uint64_t v, int width) {
  std::uint64_t out = 0;
  for (int i = 0; i < width; ++i) {
    out = (out << 1) | (v & 1U);
    v >>= 1;
  }
  return out;
}

struct RawStats {
  int zeros;
  int longest;
};

RawStats raw_stats(std::uint64_t bits, int n) {
  const std::uint64_t zero_mask = ~bits & low_mask(n);
  return {std::popcount(zero_mask), longest_ones(zero_mask)};
}

void check_cap(int n, int cap, const char* what) {
  if (n < 0) throw PreconditionError(std::string(what) + ": negative length");
  if (n > cap || n > 62) {
    throw ResourceLimitError(std::string(what) + ": length " + std::to_string(n) +
                             " exceeds oracle cap " + std::to_string(std::min(cap, 62)));
  }
}

// Visits every word of length n (or every palindrome) as raw bits, splitting
// the index space into contiguous chunks. Each chunk folds into its own
// accumulator; accumulators are merged in chunk order, so the result does not
// depend on how many workers ran.
template <class Acc, class Visit, class Merge>
Acc enumerate(int n, bool palindromic, Visit visit, Merge merge) {
  const int free_bits = palindromic ? (n + 1) / 2 : n;
  const std::uint64_t total = std::uint64_t{1} << free_bits;
  const int half = n / 2;

  auto word_of = [&](std::uint64_t i) -> std::uint64_t {
    if (!palindromic) return i;
    return (i << half) | reverse_low_bits(i >> (n % 2), half);
  };

  auto run_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
    Acc acc{};
    for (std::uint64_t i = lo; i < hi; ++i) visit(acc, word_of(i));
    return acc;
  };

  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const std::uint64_t workers = (free_bits >= 16) ? std::min<std::uint64_t>(hw, 16) : 1;
  if (workers == 1) return run_chunk(0, total);

  std::vector<std::future<Acc>> parts;
  const std::uint64_t step = total / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = w * step;
    const std::uint64_t hi = (w + 1 == workers) ? total : lo + step;
    parts.push_back(std::async(std::launch::async, run_chunk, lo, hi));
  }
  Acc result{};
  for (auto& p : parts) merge(result, p.get());
  return result;
}

// Dense (x, k) -> count grid used while enumerating.
struct Grid {
  int side = 0;
  std::vector<std::uint64_t> cells;
  void add(int x, int k, std::uint64_t v) {
    cells[static_cast<std::size_t>(x) * side + k] += v;
  }
};

using MultisetSets = std::map<std::pair<int, int>, std::set<ZeroRunMultiset>>;

ZeroRunMultiset raw_zero_runs(std::uint64_t bits, int n) {
  ZeroRunMultiset runs;
  int current = 0;
  for (int i = n - 1; i >= 0; --i) {
    if ((bits >> i) & 1U) {
      if (current > 0) runs.push_back(current);
      current = 0;
    } else {
      ++current;
    }
  }
  if (current > 0) runs.push_back(current);
  std::sort(runs.begin(), runs.end());
  return runs;
}

MultisetSets collect_multisets(int n, bool palindromic) {
  return enumerate<MultisetSets>(
      n, palindromic,
      [n](MultisetSets& acc, std::uint64_t bits) {
        const auto s = raw_stats(bits, n);
        acc[{s.zeros, s.longest}].insert(raw_zero_runs(bits, n));
      },
      [](MultisetSets& into, MultisetSets from) {
        for (auto& [key, sets] : from) into[key].merge(sets);
      });
}

}  // namespace

Word::Word(std::uint64_t bits, int length) : bits_(bits), length_(length) {
  if (length < 0 || length > max_length) throw PreconditionError("Word: length out of range");
  if ((bits & ~low_mask(length)) != 0) throw PreconditionError("Word: bits exceed length");
}

Word Word::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(max_length)) {
    throw PreconditionError("Word: longer than 64 bits");
  }
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw PreconditionError("Word: expected only '0' and '1'");
    bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return Word(bits, static_cast<int>(text.size()));
}

int Word::zeros() const { return std::popcount(~bits_ & low_mask(length_)); }

Word Word::reversed() const { return Word(reverse_low_bits(bits_, length_), length_); }

std::string Word::str() const {
  std::string out(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if (at(i)) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

RunStats classify(const Word& w) {
  const auto s = raw_stats(w.bits(), w.length());
  return {s.zeros, s.longest};
}

ZeroRunMultiset zero_runs(const Word& w) { return raw_zero_runs(w.bits(), w.length()); }

Count ClassTable::at(int x, int k) const {
  auto it = counts.find({x, k});
  return it == counts.end() ? Count(0) : it->second;
}

Count ClassTable::total() const {
  Count sum = 0;
  for (const auto& [key, c] : counts) sum += c;
  return sum;
}

ClassTable oracle_count(int n, bool palindromic, const OracleLimits& limits) {
  check_cap(n, palindromic ? limits.max_palindromic : limits.max_plain, "oracle_count");
  const int side = n + 1;
  Grid grid = enumerate<Grid>(
      n, palindromic,
      [n, side](Grid& g, std::uint64_t bits) {
        if (g.cells.empty()) {
          g.side = side;
          g.cells.assign(static_cast<std::size_t>(side) * side, 0);
        }
        const auto s = raw_stats(bits, n);
        g.add(s.zeros, s.longest, 1);
      },
      [](Grid& into, const Grid& from) {
        if (into.cells.empty()) {
          into = from;
          return;
        }
        for (std::size_t i = 0; i < from.cells.size(); ++i) into.cells[i] += from.cells[i];
      });

  ClassTable table{n, palindromic, {}};
  for (int x = 0; x <= n; ++x) {
    for (int k = 0; k <= x; ++k) {
      const std::uint64_t c = grid.cells[static_cast<std::size_t>(x) * side + k];
      if (c != 0) table.counts.emplace(std::pair{x, k}, Count(c));
    }
  }
  return table;
}

namespace {

struct RunBoundTotals {
  std::uint64_t words = 0;
  std::uint64_t zeros = 0;
};

RunBoundTotals run_bound_totals(int r, int n, const OracleLimits& limits, const char* what) {
  if (r < 2) throw PreconditionError(std::string(what) + ": run bound r must be >= 2");
  check_cap(n, limits.max_plain, what);
  return enumerate<RunBoundTotals>(
      n, false,
      [n, r](RunBoundTotals& acc, std::uint64_t bits) {
        if (longest_ones(bits) < r) {
          ++acc.words;
          acc.zeros += static_cast<std::uint64_t>(n - std::popcount(bits));
        }
      },
      [](RunBoundTotals& into, const RunBoundTotals& from) {
        into.words += from.words;
        into.zeros += from.zeros;
      });
}

}  // namespace

Count oracle_T(int r, int n, const OracleLimits& limits) {
  return Count(run_bound_totals(r, n, limits, "oracle_T").words);
}

Count oracle_zero_total(int r, int n, const OracleLimits& limits) {
  return Count(run_bound_totals(r, n, limits, "oracle_zero_total").zeros);
}

Count oracle_ones_total(int n, int x, int k, const OracleLimits& limits) {
  check_cap(n, limits.max_plain, "oracle_ones_total");
  const auto ones = enumerate<std::uint64_t>(
      n, false,
      [n, x, k](std::uint64_t& acc, std::uint64_t bits) {
        const auto s = raw_stats(bits, n);
        if (s.zeros == x && s.longest == k) acc += static_cast<std::uint64_t>(n - s.zeros);
      },
      [](std::uint64_t& into, std::uint64_t from) { into += from; });
  return Count(ones);
}

Count oracle_partition_classes(int n, int x, int k, bool palindromic,
                               const OracleLimits& limits) {
  check_cap(n, palindromic ? limits.max_palindromic : limits.max_plain,
            "oracle_partition_classes");
  const auto sets = collect_multisets(n, palindromic);
  auto it = sets.find({x, k});
  return it == sets.end() ? Count(0) : Count(it->second.size());
}

std::map<std::pair<int, int>, Count> oracle_partition_table(int n, bool palindromic,
                                                            const OracleLimits& limits) {
  check_cap(n, palindromic ? limits.max_palindromic : limits.max_plain,
            "oracle_partition_table");
  std::map<std::pair<int, int>, Count> out;
  for (const auto& [key, sets] : collect_multisets(n, palindromic)) {
    out.emplace(key, Count(sets.size()));
  }
  return out;
}

Composition string_to_composition(const Word& w) {
  Composition parts;
  int zeros = 0;
  for (int i = 0; i < w.length(); ++i) {
    if (w.at(i)) {
      parts.push_back(zeros + 1);
      zeros = 0;
    } else {
      ++zeros;
    }
  }
  parts.push_back(zeros + 1);
  return parts;
}

Word composition_to_string(const Composition& c) {
  if (c.empty()) throw PreconditionError("composition_to_string: empty composition");
  long length = -1;
  for (int part : c) {
    if (part < 1) throw PreconditionError("composition_to_string: summands must be >= 1");
    length += part;
  }
  if (length > Word::max_length) {
    throw PreconditionError("composition_to_string: encoded word longer than 64 bits");
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int zeros = c[i] - 1;
    bits = zeros >= 64 ? 0 : bits << zeros;
    if (i + 1 < c.size()) bits = (bits << 1) | 1U;
  }
  return Word(bits, static_cast<int>(length));
}

bool is_palindromic(const Composition& c) { return std::equal(c.begin(), c.end(), c.rbegin()); }

}  // namespace zeroruns
