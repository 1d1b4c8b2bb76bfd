#pragma once

// Certified enclosures of
//   T_q(z)   = sum_{l>=0} z^l q^{-l(l-1)/2},
//   Theta_q(z) = sum_{l>=0} z^l q^{-l^2} = T_{q^2}(z/q),
//   I_n      = sum_{t>=1} R_n(q^{-t}; q) z^{t+m} q^{-(t+m)(t+m-1)/2}.
// Partial sums are exact; tails are bounded by geometric series once the
// term ratio drops to 1/2.

#include <optional>
#include <stdexcept>

#include "tschakaloff/instance.hpp"
#include "tschakaloff/interval.hpp"

namespace tschakaloff {

struct SeriesTermBudget {
    long max_terms = 100000;
    Rational target_width = pow2(-64);

    // Throws DomainError unless max_terms >= 1 and target_width > 0.
    void validate() const;
};

// Thrown when max_terms runs out before target_width is met. `achieved`
// holds the best enclosure reached, if the tail could be bounded at all.
class PrecisionExhausted : public std::runtime_error {
public:
    PrecisionExhausted(const std::string &what, std::optional<RationalInterval> achieved)
        : std::runtime_error(what), achieved_(std::move(achieved))
    {
    }
    const std::optional<RationalInterval> &achieved() const { return achieved_; }

private:
    std::optional<RationalInterval> achieved_;
};

// T_q(z) for any rational z (zero allowed) and |q| > 1.
RationalInterval tschakaloff_enclosure(const Rational &q, const Rational &z, const SeriesTermBudget &budget);
RationalInterval tschakaloff_enclosure(const ProblemInstance &inst, const SeriesTermBudget &budget);

// Theta_q(z) evaluated as T_{q^2}(z/q).
RationalInterval theta_via_tschakaloff(const Rational &q, const Rational &z, const SeriesTermBudget &budget);

// Direct summation of I_n; terms t = 1..n vanish and are skipped.
RationalInterval I_n_direct_enclosure(const ProblemInstance &inst, long n, const SeriesTermBudget &budget);

// Exact partial sums S_0..S_last of T_q(z), S_j = sum_{l<=j} z^l q^{-l(l-1)/2}.
std::vector<Rational> tschakaloff_partial_sums(const Rational &q, const Rational &z, long last);

} // namespace tschakaloff
