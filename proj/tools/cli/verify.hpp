#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zeroruns/oracle.hpp"

namespace zeroruns::cli {

enum class Suite { all, core, palindromic, compositions };

std::optional<Suite> parse_suite(std::string_view text);
const char* to_string(Suite s);

struct Finding {
  std::string check;
  std::string detail;
};

/// Failures are discrepancies in identities the library relies on. Notes are
/// printed claims known to disagree with enumeration; they never fail a run.
struct VerifyReport {
  int max_n = 0;
  Suite suite = Suite::all;
  long checks = 0;
  std::vector<Finding> failures;
  std::vector<Finding> notes;

  bool ok() const { return failures.empty(); }
};

/// Cross-checks every counting identity for lengths 0..max_n (targets
/// 1..max_n+1 for compositions). Brute-force parts respect `limits` and throw
/// ResourceLimitError beyond them.
VerifyReport verify(int max_n, Suite suite, const OracleLimits& limits);

}  // namespace zeroruns::cli
