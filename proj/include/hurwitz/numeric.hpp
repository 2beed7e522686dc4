#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hurwitz {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (partition syntax, cache records).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Arguments outside an operation's precondition or a theorem's hypothesis range.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; always a bug, never bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

Integer factorial(unsigned n);

/// C(n, k); zero when k > n or either argument is negative.
Integer binomial(long n, long k);

Integer ipow(const Integer& base, unsigned exponent);

/// base^exponent for any integer exponent; throws DomainError on 0^negative.
Rational rpow(const Rational& base, long exponent);

/// Builds num/den in canonical form.
Rational make_rational(const Integer& num, const Integer& den);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline int sign(const Integer& x) { return sgn(x); }

std::string to_string(const Integer& x);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Rational parse_rational(const std::string& text);

}  // namespace hurwitz
