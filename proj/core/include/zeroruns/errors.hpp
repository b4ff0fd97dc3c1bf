#pragma once

#include <stdexcept>
#include <string>

namespace zeroruns {

/// An argument violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A request exceeds a configured resource cap (e.g. the oracle's length limit).
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zeroruns
