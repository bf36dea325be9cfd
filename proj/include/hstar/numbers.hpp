#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hstar {

// Arbitrary-precision scalars. cpp_rational keeps values in lowest terms
// with a positive denominator, so equality is structural.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

/// Floor division, exact for any sign of a; requires b != 0.
Int floor_div(const Int& a, const Int& b);

/// Ceiling division, exact for any sign of a; requires b != 0.
Int ceil_div(const Int& a, const Int& b);

Int factorial(long n);

Int binomial(long n, long k);

/// True iff r has denominator 1.
bool is_integer(const Rat& r);

std::string to_string(const Int& x);
std::string to_string(const Rat& x);

}  // namespace hstar
