#include "tschakaloff/interval.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace tschakaloff {

RationalInterval::RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (hi_ < lo_) {
        throw DomainError("interval with lo > hi");
    }
}

Rational RationalInterval::magnitude() const
{
    return std::max(abs(lo_), abs(hi_));
}

Rational RationalInterval::mignitude() const
{
    if (contains_zero()) {
        return Rational(0);
    }
    return std::min(abs(lo_), abs(hi_));
}

RationalInterval operator+(const RationalInterval &a, const RationalInterval &b)
{
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

RationalInterval operator-(const RationalInterval &a, const RationalInterval &b)
{
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

RationalInterval operator*(const RationalInterval &a, const RationalInterval &b)
{
    if (a.is_point() && b.is_point()) {
        return RationalInterval(a.lo_ * b.lo_);
    }
    const Rational p1 = a.lo_ * b.lo_;
    const Rational p2 = a.lo_ * b.hi_;
    const Rational p3 = a.hi_ * b.lo_;
    const Rational p4 = a.hi_ * b.hi_;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

RationalInterval operator/(const RationalInterval &a, const RationalInterval &b)
{
    if (b.contains_zero()) {
        throw DomainError("interval division by an interval containing zero");
    }
    return a * RationalInterval(Rational(1) / b.hi_, Rational(1) / b.lo_);
}

RationalInterval hull(const RationalInterval &a, const RationalInterval &b)
{
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

RationalInterval abs(const RationalInterval &x)
{
    return {x.mignitude(), x.magnitude()};
}

std::ostream &operator<<(std::ostream &os, const RationalInterval &x)
{
    return os << '[' << x.lo() << ", " << x.hi() << ']';
}

namespace {

// Smallest-ish p >= 0 with 2^-p <= w (w > 0).
unsigned long bits_for_width(const Rational &w)
{
    if (w >= Rational(1)) {
        return 0;
    }
    const Integer c = ceil(Rational(1) / w);
    return bit_length(c);
}

bool is_perfect_square(const Integer &x)
{
    return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

struct AtanhSum {
    Rational partial;
    Rational tail;
};

// sum_{j>=0} u^(2j+1)/(2j+1) for 0 <= u <= 1/3, truncated once the
// geometric tail bound u^(2J+3) / ((2J+3)(1-u^2)) is <= tail_target.
// The tail bound is evaluated at `tail_u` (>= u) so two calls can share it.
AtanhSum atanh_series(const Rational &u, const Rational &tail_u, const Rational &tail_target)
{
    AtanhSum out;
    if (u.is_zero() && tail_u.is_zero()) {
        return out;
    }
    const Rational u2 = u * u;
    const Rational tu2 = tail_u * tail_u;
    const Rational tail_factor = Rational(1) / (Rational(1) - tu2);
    Rational power = u;
    Rational tail_power = tail_u;
    for (long j = 0;; ++j) {
        out.partial += power / Rational(2 * j + 1);
        power *= u2;
        tail_power *= tu2;
        const Rational bound = tail_power / Rational(2 * j + 3) * tail_factor;
        if (bound <= tail_target) {
            out.tail = bound;
            return out;
        }
    }
}

RationalInterval ln2_enclosure(const Rational &max_width)
{
    const Rational third(Integer(1), Integer(3));
    const auto s = atanh_series(third, third, max_width / Rational(2));
    return {Rational(2) * s.partial, Rational(2) * (s.partial + s.tail)};
}

// Enclosure of ln(y) for 1 <= y < 2, width <= 2^-p + w_tail.
RationalInterval ln_reduced(const Rational &y, unsigned long p, const Rational &tail_target)
{
    Integer scale = pow(Integer(2), p);
    const Rational scaled = y * Rational(scale);
    const Integer y_lo = floor(scaled);
    const Integer y_hi = ceil(scaled);
    const Rational u_lo(y_lo - scale, y_lo + scale);
    const Rational u_hi(y_hi - scale, y_hi + scale);
    const auto lower = atanh_series(u_lo, u_hi, tail_target);
    const auto upper = y_lo == y_hi ? lower : atanh_series(u_hi, u_hi, tail_target);
    return {Rational(2) * lower.partial, Rational(2) * (upper.partial + upper.tail)};
}

} // namespace

RationalInterval sqrt_enclosure(const Rational &x, const Rational &max_width)
{
    if (x.sign() < 0) {
        throw DomainError("sqrt_enclosure of a negative number");
    }
    if (max_width.sign() <= 0) {
        throw DomainError("sqrt_enclosure requires a positive width");
    }
    if (is_perfect_square(x.num()) && is_perfect_square(x.den())) {
        return RationalInterval(Rational(isqrt(x.num()), isqrt(x.den())));
    }
    const unsigned long p = bits_for_width(max_width);
    const Integer scale = pow(Integer(2), p);
    // r^2 <= floor(x 4^p) < (r+1)^2, and x 4^p is not a perfect square here.
    const Integer r = isqrt(floor(x * Rational(Integer(scale * scale))));
    return {Rational(r, scale), Rational(Integer(r + 1), scale)};
}

RationalInterval ln_enclosure(const Rational &x, const Rational &max_width)
{
    if (x.sign() <= 0) {
        throw DomainError("ln_enclosure of a non-positive number");
    }
    if (max_width.sign() <= 0) {
        throw DomainError("ln_enclosure requires a positive width");
    }
    // x = 2^k y with 1 <= y < 2
    long k = static_cast<long>(bit_length(x.num())) - static_cast<long>(bit_length(x.den()));
    Rational y = x * pow2(-k);
    if (y < Rational(1)) {
        --k;
        y *= Rational(2);
    }
    const Rational quarter = max_width / Rational(4);
    const unsigned long p = bits_for_width(quarter);
    RationalInterval out = ln_reduced(y, p, quarter / Rational(2));
    if (k != 0) {
        const Rational kk(k);
        const RationalInterval ln2 = ln2_enclosure(quarter / abs(kk));
        out = out + RationalInterval(kk) * ln2;
    }
    return out;
}

RationalInterval ln_enclosure(const RationalInterval &x, const Rational &max_width)
{
    if (x.lo().sign() <= 0) {
        throw DomainError("ln_enclosure of an interval reaching zero or below");
    }
    if (x.is_point()) {
        return ln_enclosure(x.lo(), max_width);
    }
    return {ln_enclosure(x.lo(), max_width).lo(), ln_enclosure(x.hi(), max_width).hi()};
}

} // namespace tschakaloff
