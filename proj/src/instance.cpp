#include "tschakaloff/instance.hpp"

namespace tschakaloff {

ProblemInstance::ProblemInstance(const Rational &q, const Rational &z) : q_(q), z_(z)
{
    if (q.is_zero() || z.is_zero()) {
        throw DomainError("q and z must be nonzero");
    }
    if (abs(q) <= Rational(1)) {
        throw DomainError("|q| must exceed 1, got q = " + q.str());
    }
}

RationalInterval gamma_enclosure(const ProblemInstance &inst, const Rational &max_width)
{
    if (max_width.sign() <= 0) {
        throw DomainError("gamma_enclosure requires a positive width");
    }
    const Integer a1 = ::abs(inst.q1());
    const Integer a2 = ::abs(inst.q2());
    if (a1 <= 1) {
        throw DomainError("gamma requires |q1| > 1");
    }
    if (a2 == 1) {
        return RationalInterval(Rational(0));
    }
    // gamma < 1, ln|q1| > ln 2 > 1/2, so width(num)+width(den) <= w/4 is enough;
    // loop anyway in case the bound is loose for tiny widths.
    Rational w = max_width / Rational(4);
    for (;;) {
        const auto num = ln_enclosure(Rational(a2), w);
        const auto den = ln_enclosure(Rational(a1), w);
        auto g = num / den;
        if (g.width() <= max_width) {
            return g;
        }
        w /= Rational(16);
    }
}

} // namespace tschakaloff
