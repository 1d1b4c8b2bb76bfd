#pragma once

// Exact integer and rational scalars.
//
// Integer is GMP's mpz_class used directly. Rational wraps mpq_class so that
// every value is canonical (den > 0, gcd(|num|, den) = 1) no matter how it
// was built.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "tschakaloff/errors.hpp"

namespace tschakaloff {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}
    Rational(int v) : value_(static_cast<long>(v)) {}
    Rational(const Integer &v) : value_(v) {}
    Rational(const Integer &num, const Integer &den);
    explicit Rational(const mpq_class &v) : value_(v) { value_.canonicalize(); }

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }
    const mpq_class &raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
    Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
    Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    // Canonical text form: `[-]num/den`, or `[-]num` when den == 1.
    std::string str() const;

    // Lossy, for human-facing output and diagnostics only.
    double to_double() const { return value_.get_d(); }

private:
    mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

// Parses `[-]digits` or `[-]digits/digits`. Throws ParseError on anything else,
// including a zero denominator.
Rational parse_rational(std::string_view text);

Rational abs(const Rational &r);

// r^e for any integer exponent; r must be nonzero when e < 0.
Rational pow(const Rational &r, long e);
Integer pow(const Integer &x, unsigned long e);

// 2^e as a Rational (e may be negative).
Rational pow2(long e);

// Number of bits of |x| (0 for x == 0).
std::size_t bit_length(const Integer &x);

// floor(sqrt(x)). Throws DomainError for x < 0.
Integer isqrt(const Integer &x);

// floor(n * (sqrt(5) - 1) / 2), computed as (isqrt(5 n^2) - n) div 2.
Integer m_of_n(const Integer &n);
long m_of_n(long n);

// Nearest multiple of 2^-bits (ties upward).
Rational round_to_dyadic(const Rational &r, unsigned long bits);

Integer floor_div(const Integer &a, const Integer &b);
Integer floor(const Rational &r);
Integer ceil(const Rational &r);

// Decimal scientific rendering with `digits` significant digits (truncated),
// e.g. "3.5836743940000000000e-01". Display only.
std::string to_scientific(const Rational &r, int digits = 20);

} // namespace tschakaloff
