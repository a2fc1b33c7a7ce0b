#ifndef MAPPELL_RATIONAL_HPP
#define MAPPELL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mappell {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar; always canonical (lowest terms, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// x^e for nonnegative integer e; 0^0 = 1.
Rational pow_rational(const Rational &x, unsigned e);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input
/// or zero denominator.
Rational parse_rational(const std::string &s);

/// "p/q" when the denominator is not 1, otherwise "p".
std::string rational_to_string(const Rational &r);

} // namespace mappell

#endif
