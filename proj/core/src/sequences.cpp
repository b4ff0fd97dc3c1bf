#include "zeroruns/sequences.hpp"

#include <array>

#include "zeroruns/errors.hpp"
#include "zeroruns/palindromic.hpp"
#include "zeroruns/runcount.hpp"

namespace zeroruns {

namespace {

void check_run_args(int r, int n, const char* what) {
  if (r < 2) throw PreconditionError(std::string(what) + ": run bound r must be >= 2");
  if (n < 1) throw PreconditionError(std::string(what) + ": requires n >= 1");
}

// T(r, 1..n) by the r-step linear recurrence.
std::vector<Count> t_terms(int r, int n) {
  std::vector<Count> t(static_cast<std::size_t>(n) + 1, 0);
  for (int s = 1; s <= n; ++s) {
    if (s < r) {
      t[s] = pow2(s);
    } else if (s == r) {
      t[s] = pow2(s) - 1;
    } else {
      for (int i = 1; i <= r; ++i) t[s] += t[s - i];
    }
  }
  return t;
}

constexpr std::array<std::pair<SequenceName, std::string_view>, 8> kCatalog{{
    {SequenceName::fibonacci_f, "fibonacci-f"},
    {SequenceName::t_run, "t-run"},
    {SequenceName::o_run, "o-run"},
    {SequenceName::triangular, "triangular"},
    {SequenceName::oblong, "oblong"},
    {SequenceName::tetrahedral, "tetrahedral"},
    {SequenceName::column_sum, "column-sum"},
    {SequenceName::palindromic_column_sum, "palindromic-column-sum"},
}};

}  // namespace

Count T(int r, int n, SeqPath path) {
  check_run_args(r, n, "T");
  if (path == SeqPath::recurrence) return t_terms(r, n)[n];
  Count sum = 1;
  for (int k = 1; k <= r - 1; ++k) {
    for (int x = k; x <= n; ++x) sum += F(n, x, k);
  }
  return sum;
}

Count O(int r, int n, SeqPath path) {
  check_run_args(r, n, "O");
  if (path == SeqPath::identity) {
    Count sum = 0;
    for (int k = 0; k <= r - 1; ++k) {
      for (int x = k; x <= n; ++x) sum += ones_total(n, x, k);
    }
    return sum;
  }
  const auto t = t_terms(r, n);
  std::vector<Count> o(static_cast<std::size_t>(n) + 1, 0);
  for (int s = 1; s <= n; ++s) {
    if (s <= r) {
      o[s] = Count(s) * pow2(s - 1);
    } else {
      for (int i = 1; i <= r; ++i) o[s] += o[s - i];
      o[s] += t[s];
    }
  }
  return o[n];
}

Count ones_total(int n, int x, int k) {
  if (!(0 <= k && k <= x && x <= n)) {
    throw PreconditionError("ones_total: requires 0 <= k <= x <= n");
  }
  return Count(n - x) * F(n, x, k);
}

Count fib_f(int n) {
  if (n < 0) throw PreconditionError("fib_f: requires n >= 0");
  Count prev = 1;  // f_0
  Count cur = 2;   // f_1
  if (n == 0) return prev;
  for (int i = 2; i <= n; ++i) {
    Count next = cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::string_view to_string(SequenceName name) {
  for (const auto& [n, text] : kCatalog) {
    if (n == name) return text;
  }
  return "unknown";
}

std::optional<SequenceName> parse_sequence_name(std::string_view text) {
  for (const auto& [n, name] : kCatalog) {
    if (name == text) return n;
  }
  return std::nullopt;
}

std::vector<SequenceName> sequence_catalog() {
  std::vector<SequenceName> out;
  for (const auto& entry : kCatalog) out.push_back(entry.first);
  return out;
}

std::vector<Count> sequence(const SequenceSpec& spec) {
  if (spec.count < 1) throw PreconditionError("sequence: count must be >= 1");
  if (spec.start < 0) throw PreconditionError("sequence: start must be >= 0");
  if (spec.name == SequenceName::oblong && spec.x < 3) {
    throw PreconditionError("sequence: oblong requires x >= 3");
  }
  if (spec.name == SequenceName::column_sum || spec.name == SequenceName::palindromic_column_sum) {
    if (spec.k < 0) throw PreconditionError("sequence: column index k must be >= 0");
  }

  std::vector<Count> terms;
  terms.reserve(static_cast<std::size_t>(spec.count));
  for (int n = spec.start; n < spec.start + spec.count; ++n) {
    switch (spec.name) {
      case SequenceName::fibonacci_f: terms.push_back(fib_f(n)); break;
      case SequenceName::t_run: terms.push_back(T(spec.r, n)); break;
      case SequenceName::o_run: terms.push_back(O(spec.r, n)); break;
      case SequenceName::triangular: terms.push_back(F(n, 2, 1)); break;
      case SequenceName::oblong: terms.push_back(F(n, spec.x, spec.x - 1)); break;
      case SequenceName::tetrahedral: terms.push_back(F(n, 3, 1)); break;
      case SequenceName::column_sum:
      case SequenceName::palindromic_column_sum: {
        const bool hat = spec.name == SequenceName::palindromic_column_sum;
        Count sum = 0;
        for (int x = spec.k; x <= n; ++x) sum += hat ? F_hat(n, x, spec.k) : F(n, x, spec.k);
        terms.push_back(sum);
        break;
      }
    }
  }
  return terms;
}

}  // namespace zeroruns
