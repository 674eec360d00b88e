#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace slicecliff {

/// Exact rational number. GMP keeps results of arithmetic canonical
/// (reduced, positive denominator), but Rational(p, q) is stored as given;
/// call canonicalize() before doing arithmetic on it. Multivector does this
/// for every coefficient it receives.
using Rational = mpq_class;
/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Raised for malformed textual input (multivectors, polynomials, rationals).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "p" or "p/q" (optional leading sign on p). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// base^exp for a signed exponent; base must be nonzero when exp < 0.
Rational rational_pow(const Rational& base, long exp);

BigInt factorial(unsigned long n);

}  // namespace slicecliff
