#pragma once

// The integer approximant pairs (A_n, B_n) with
//
//   I~_n = normalizer(n) * I_n = B_n T_q(z) - A_n,
//
// where normalizer(n) = z1^n z2^m q1^{m(m-1)/2} q2^{n(n+1)/2 + n(n-1)/2 + nm}
// and m = floor(n (sqrt 5 - 1) / 2).

#include <vector>

#include "tschakaloff/instance.hpp"
#include "tschakaloff/interval.hpp"
#include "tschakaloff/qpoly.hpp"
#include "tschakaloff/series.hpp"

namespace tschakaloff {

struct ApproximantRecord {
    long n = 0;
    long m = 0;
    Integer A;
    Integer B;
    RationalInterval I_tilde; // contains B T_q(z) - A
    bool nonzero_certified = false;
};

struct ApproximantPair {
    Integer A;
    Integer B;
};

Integer normalizer(const ProblemInstance &inst, long n);

// Both computed in exact rational arithmetic; throws InvariantViolation if
// either fails to be an integer after normalisation.
ApproximantPair compute_AB(const ProblemInstance &inst, long n);
Integer compute_B(const ProblemInstance &inst, long n);
Integer compute_A(const ProblemInstance &inst, long n);

// normalizer * z^{n+m+1} q^{-(n+m)(n+m+1)/2} prod_{j=1..n} (1 - q^{-j}),
// the dominant contribution to I~_n.
Rational leading_term(const ProblemInstance &inst, long n);

// Builds the record for one n. I_tilde = B * T - A with T enclosed tightly
// enough that width(I_tilde) <= budget.target_width and, in addition, at
// most 2^-64 times the leading-term magnitude; it is refined further (up to
// four rounds) while it still contains zero. The result is cross-checked
// against normalizer * (direct I_n sum); disagreement throws
// InvariantViolation.
ApproximantRecord compute_record(const ProblemInstance &inst, long n, const SeriesTermBudget &budget);

// Records for n = first..last, fanned out over `jobs` worker threads and
// returned in ascending n. The first failure (by n) is rethrown.
std::vector<ApproximantRecord> compute_records(const ProblemInstance &inst, long first, long last,
                                               const SeriesTermBudget &budget, unsigned jobs = 1);

struct Witness {
    ApproximantRecord record;
    RationalInterval scaled; // b * I_tilde
};

// Smallest n <= n_max with 0 notin I_tilde and b |I_tilde| < 1, which rules
// out T_q(z) = a/b for every integer a. Records are built with target width
// min(budget.target_width, 1/(4b)). Throws NotFound otherwise.
Witness witness_for_denominator(const ProblemInstance &inst, const Integer &b, long n_max,
                                const SeriesTermBudget &budget = {});

} // namespace tschakaloff
