#include "zeroruns/count.hpp"

#include <limits>

#include "zeroruns/errors.hpp"

namespace zeroruns {

Count binomial(long n, long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  Count result = 1;
  for (long i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

Count pow2(long e) {
  if (e < 0) throw PreconditionError("pow2: negative exponent");
  Count result = 1;
  result <<= static_cast<unsigned>(e);
  return result;
}

Count factorial(long n) {
  if (n < 0) throw PreconditionError("factorial: negative argument");
  Count result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

std::string to_string(const Count& c) { return c.str(); }

bool fits_u64(const Count& c) {
  return c >= 0 && c <= Count(std::numeric_limits<std::uint64_t>::max());
}

}  // namespace zeroruns
