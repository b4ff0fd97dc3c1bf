#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace zeroruns {

/// Exact non-negative count. Every quantity in the library is one of these;
/// nothing is ever rounded or computed in floating point.
using Count = boost::multiprecision::cpp_int;

/// Exact rational, used only where a printed closed form has fractional terms.
using Rational = boost::multiprecision::cpp_rational;

/// C(n, r) by the multiplicative formula; 0 outside 0 <= r <= n.
Count binomial(long n, long r);

/// 2^e for e >= 0.
Count pow2(long e);

Count factorial(long n);

std::string to_string(const Count& c);

/// True when the value is representable as uint64_t.
bool fits_u64(const Count& c);

}  // namespace zeroruns
