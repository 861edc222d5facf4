#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace realhurwitz {

using Integer = mpz_class;
using Rational = mpq_class;

// Failure to parse user-supplied text (group files, profiles, cycle notation).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input parsed but violates a documented invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation would exceed a configured size cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// x^e for any integer e; throws std::domain_error on 0^(negative).
Rational pow(const Rational& x, long e);

inline int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

// Reduced "p/q"; integers render without "/1" unless strict is set.
std::string to_string(const Rational& x, bool strict = false);

// Accepts "p", "-p", "p/q" with q > 0. The result is canonicalized.
Rational parse_rational(std::string_view text);

}  // namespace realhurwitz
