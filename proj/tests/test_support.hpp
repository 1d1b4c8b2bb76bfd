#pragma once

// Generators and independent oracles shared by the test suites. Nothing here
// calls into the code paths it is used to check.

#include <algorithm>
#include <random>

#include "tschakaloff/arith.hpp"
#include "tschakaloff/interval.hpp"

namespace tschakaloff::test {

inline Integer random_integer(std::mt19937_64 &rng, unsigned bits)
{
    Integer x = 0;
    for (unsigned i = 0; i < bits; i += 32) {
        x = x * Integer(4294967296UL) + Integer(static_cast<unsigned long>(rng() & 0xffffffffU));
    }
    Integer mask = pow(Integer(2), bits) - 1;
    return x & mask;
}

inline Rational random_rational(std::mt19937_64 &rng, unsigned bits)
{
    Integer num = random_integer(rng, 1 + static_cast<unsigned>(rng() % bits));
    Integer den = random_integer(rng, 1 + static_cast<unsigned>(rng() % bits)) + 1;
    if (rng() % 2 == 0) {
        num = -num;
    }
    return Rational(num, den);
}

inline Rational random_nonzero_rational(std::mt19937_64 &rng, unsigned bits)
{
    for (;;) {
        Rational r = random_rational(rng, bits);
        if (!r.is_zero()) {
            return r;
        }
    }
}

// A random interval around x with width up to about 2^-10 |x| + 2^-20.
inline RationalInterval enclose(std::mt19937_64 &rng, const Rational &x)
{
    const Rational slack = abs(x) * pow2(-10) + pow2(-20);
    const Rational left(Integer(static_cast<long>(rng() % 1000)), Integer(1000));
    const Rational right(Integer(static_cast<long>(rng() % 1000)), Integer(1000));
    return {x - left * slack, x + right * slack};
}

// sqrt(x) by bisection on dyadics, x >= 1.
inline RationalInterval bisect_sqrt(const Rational &x, int steps)
{
    Rational lo(0);
    Rational hi = x + Rational(1);
    for (int i = 0; i < steps; ++i) {
        const Rational mid = (lo + hi) / Rational(2);
        if (mid * mid <= x) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

// Newton iterate y from above, with the enclosure [y - (y^2 - x)/y, y]
// (sqrt x = y - (y^2 - x)/(y + sqrt x) and 0 <= sqrt x <= y).
inline RationalInterval newton_sqrt(const Rational &x, int iterations)
{
    Rational y = x + Rational(1);
    for (int i = 0; i < iterations; ++i) {
        y = (y + x / y) / Rational(2);
    }
    return {y - (y * y - x) / y, y};
}

// ln 2 = sum_{k>=1} 1/(k 2^k); tail after N terms <= 1/((N+1) 2^N).
inline RationalInterval ln2_oracle(int terms)
{
    Rational sum;
    for (int k = 1; k <= terms; ++k) {
        sum += Rational(Integer(1), Integer(k) * pow(Integer(2), static_cast<unsigned long>(k)));
    }
    const Rational tail(Integer(1), Integer(terms + 1) * pow(Integer(2), static_cast<unsigned long>(terms)));
    return {sum, sum + tail};
}

struct RandomInstance {
    Rational q;
    Rational z;
};

// |q| >= 3/2, 0 < |z| <= 10, random signs.
inline RandomInstance random_instance(std::mt19937_64 &rng)
{
    const long q1 = 2 + static_cast<long>(rng() % 29);
    const long q2 = 1 + static_cast<long>(rng() % static_cast<unsigned long>(std::max(1L, 2 * q1 / 3)));
    const long z2 = 1 + static_cast<long>(rng() % 10);
    const long z1 = 1 + static_cast<long>(rng() % static_cast<unsigned long>(10 * z2));
    RandomInstance out{Rational(Integer(q1), Integer(q2)), Rational(Integer(z1), Integer(z2))};
    if (rng() % 2) {
        out.q = -out.q;
    }
    if (rng() % 2) {
        out.z = -out.z;
    }
    return out;
}

// Theta_q(z) = sum z^l q^{-l^2} summed directly; once |z| |q|^{-(2L+1)} <= 1/2
// the tail after index L is at most 2 |next term|.
inline RationalInterval theta_direct(const Rational &q, const Rational &z, const Rational &width)
{
    const Rational half(Integer(1), Integer(2));
    Rational sum;
    for (long l = 0;; ++l) {
        sum += pow(z, l) * pow(q, -(l * l));
        const long next = l + 1;
        const Rational next_term = abs(pow(z, next) * pow(q, -(next * next)));
        const Rational ratio = abs(z) * abs(pow(q, -(2 * next + 1)));
        if (ratio <= half && Rational(2) * next_term <= width / Rational(2)) {
            return {sum - Rational(2) * next_term, sum + Rational(2) * next_term};
        }
    }
}

} // namespace tschakaloff::test
