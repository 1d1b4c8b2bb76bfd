#pragma once

#include "tschakaloff/arith.hpp"
#include "tschakaloff/interval.hpp"

namespace tschakaloff {

// Parameters q = q1/q2 and z = z1/z2 of the series, stored in canonical
// form (q2 > 0, z2 > 0, gcds 1). Valid instances have all four components
// nonzero and |q1| > |q2|, i.e. |q| > 1.
class ProblemInstance {
public:
    // Throws DomainError unless q, z are nonzero and |q| > 1.
    ProblemInstance(const Rational &q, const Rational &z);

    const Rational &q() const { return q_; }
    const Rational &z() const { return z_; }
    Integer q1() const { return q_.num(); }
    Integer q2() const { return q_.den(); }
    Integer z1() const { return z_.num(); }
    Integer z2() const { return z_.den(); }

private:
    Rational q_;
    Rational z_;
};

// log|q2| / log|q1|; exactly [0,0] when |q2| = 1. Width <= max_width.
RationalInterval gamma_enclosure(const ProblemInstance &inst, const Rational &max_width);

} // namespace tschakaloff
