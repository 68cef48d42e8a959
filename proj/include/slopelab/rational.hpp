#ifndef SLOPELAB_RATIONAL_HPP
#define SLOPELAB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace slopelab {

// Exact rational arithmetic over arbitrary-precision integers. GMP keeps
// every value in lowest terms with a positive denominator, which is also
// the canonical serialized form.
using Rational = mpq_class;
using Integer = mpz_class;

// Canonical rational from an integer pair.
Rational rat(long numerator, long denominator = 1);

// "p/q" in lowest terms with q > 0, or just "p" when q = 1.
std::string to_string(const Rational& value);

// Parses "p/q" or "p". Throws ValidationError on malformed text or a zero
// denominator.
Rational parse_rational(const std::string& text);

bool is_integral(const Rational& value);

}  // namespace slopelab

#endif
