#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace lplab {

/// Arbitrary-precision rational kept in canonical form (reduced, positive
/// denominator). Every coordinate, key and intercept in the library is one.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "a", "a/b", or a finite decimal such as "-1.25" exactly.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Rational pow(const Rational& base, unsigned exponent);
Integer pow(const Integer& base, unsigned exponent);

/// Signed power t -> sign(t)|t|^k, monotone increasing in t for every k.
Rational signed_pow(const Rational& t, unsigned exponent);

inline Rational abs_value(const Rational& q) { return abs(q); }

/// Closest rational with denominator <= max_den (continued fractions).
Rational limit_denominator(const Rational& q, const Integer& max_den);

/// The rational with the smallest denominator in [lo, hi] (lo <= hi).
Rational simplest_between(const Rational& lo, const Rational& hi);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// Rational gcd: the largest g with every input an integer multiple of g.
Rational rational_gcd(const Rational& a, const Rational& b);

double to_double(const Rational& q);

struct RationalHash {
    std::size_t operator()(const Rational& q) const noexcept;
};

struct IntegerHash {
    std::size_t operator()(const Integer& z) const noexcept;
};

}  // namespace lplab
