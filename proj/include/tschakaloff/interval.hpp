#pragma once

// Closed intervals with exact rational endpoints.
//
// Every operation returns an interval containing all real results obtained
// from reals inside the operands. No rounding takes place, so containment
// holds without any error analysis.

#include <iosfwd>

#include "tschakaloff/arith.hpp"

namespace tschakaloff {

class RationalInterval {
public:
    RationalInterval() = default;
    RationalInterval(const Rational &point) : lo_(point), hi_(point) {}
    // Throws DomainError when lo > hi.
    RationalInterval(Rational lo, Rational hi);

    const Rational &lo() const { return lo_; }
    const Rational &hi() const { return hi_; }

    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
    // max |x| over the interval
    Rational magnitude() const;
    // min |x| over the interval (0 when the interval straddles zero)
    Rational mignitude() const;

    bool contains(const Rational &x) const { return lo_ <= x && x <= hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool contains(const RationalInterval &o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool overlaps(const RationalInterval &o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
    bool is_point() const { return lo_ == hi_; }

    // Strict separation.
    bool below(const RationalInterval &o) const { return hi_ < o.lo_; }
    bool above(const RationalInterval &o) const { return lo_ > o.hi_; }

    RationalInterval operator-() const { return {-hi_, -lo_}; }

    friend RationalInterval operator+(const RationalInterval &a, const RationalInterval &b);
    friend RationalInterval operator-(const RationalInterval &a, const RationalInterval &b);
    friend RationalInterval operator*(const RationalInterval &a, const RationalInterval &b);
    // Throws DomainError when the divisor contains zero.
    friend RationalInterval operator/(const RationalInterval &a, const RationalInterval &b);

    friend bool operator==(const RationalInterval &a, const RationalInterval &b) = default;

private:
    Rational lo_;
    Rational hi_;
};

RationalInterval hull(const RationalInterval &a, const RationalInterval &b);
RationalInterval abs(const RationalInterval &x);

std::ostream &operator<<(std::ostream &os, const RationalInterval &x);

// [lo, hi] with lo^2 <= x <= hi^2 and hi - lo <= max_width.
RationalInterval sqrt_enclosure(const Rational &x, const Rational &max_width);

// Enclosure of ln(x) of width <= max_width, x > 0.
RationalInterval ln_enclosure(const Rational &x, const Rational &max_width);

// Enclosure of ln(x) over a positive interval, width <= max_width + ln(hi/lo).
RationalInterval ln_enclosure(const RationalInterval &x, const Rational &max_width);

} // namespace tschakaloff
