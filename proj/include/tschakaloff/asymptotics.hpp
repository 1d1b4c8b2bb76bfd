#pragma once

// Growth exponents of B_n and I~_n measured in units of n^2 ln|q1|, the
// gamma < gamma0 hypothesis, and irrationality-exponent estimates.
//
//   beta   = (sqrt 5 - 1)/2        (m = floor(beta n))
//   gamma0 = (3 - sqrt 5)/2 = 1 - beta
//   log|B_n|  / (n^2 ln|q1|) -> (5 + sqrt 5)/4
//   log|I~_n| / (n^2 ln|q1|) -> -(1-gamma)(1+beta)^2/2 + gamma(1+beta) + beta^2/2
//   irrationality exponent   <= 1 + (sqrt 5 - 1)/(2 (gamma0 - gamma))

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tschakaloff/approximants.hpp"
#include "tschakaloff/instance.hpp"
#include "tschakaloff/interval.hpp"

namespace tschakaloff {

class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline const Rational default_constant_width = pow2(-96);

RationalInterval sqrt5_enclosure(const Rational &max_width = default_constant_width);
RationalInterval beta_enclosure(const Rational &max_width = default_constant_width);
RationalInterval gamma0_enclosure(const Rational &max_width = default_constant_width);

// (5 + sqrt 5)/4
RationalInterval theoretical_B_exponent(const Rational &max_width = default_constant_width);
// (1-gamma)(1+beta) + gamma(1+beta) + beta^2/2, for any gamma.
RationalInterval theoretical_B_exponent_expanded(const RationalInterval &gamma);

// Expanded and factored forms of the I~_n exponent. Both require
// gamma within [0, 1) and throw DomainError otherwise.
RationalInterval theoretical_I_exponent_expanded(const RationalInterval &gamma);
RationalInterval theoretical_I_exponent_factored(const RationalInterval &gamma);
// Factored form, after checking that it overlaps the expanded one.
RationalInterval theoretical_I_exponent(const RationalInterval &gamma);

struct ExponentReport {
    long n = 0;
    Rational empirical_B;
    Rational empirical_I;
    RationalInterval theoretical_B;
    RationalInterval theoretical_I;
};

struct ExponentReports {
    std::vector<ExponentReport> reports;
    std::vector<std::string> notices; // one per skipped record
};

// Records with B_n = 0 or an uncertified I~_n are skipped with a notice.
ExponentReports empirical_exponents(std::span<const ApproximantRecord> records, const ProblemInstance &inst);

enum class Hypothesis { holds, fails, indeterminate };

struct HypothesisReport {
    Hypothesis verdict = Hypothesis::indeterminate;
    RationalInterval gamma;
    RationalInterval gamma0;
};

// Refines both enclosures until they separate (or a 2^-4096 width floor).
HypothesisReport hypothesis_check(const ProblemInstance &inst);

// 1 + (sqrt 5 - 1)/(2 (gamma0 - gamma)). Throws DomainError unless gamma is
// certified below gamma0.
RationalInterval predicted_irrationality_exponent(const RationalInterval &gamma);

struct MeasureEstimate {
    Rational c_hat;                                   // slope of -ln|I~/B| on ln|B|, minus 1
    std::optional<RationalInterval> predicted_exponent; // absent when gamma >= gamma0
    Rational empirical_exponent;                      // 1 + 1/c_hat
    Rational last_log_ratio;                          // ln|B_last| / ln|B_{last-1}|
    long fit_first_n = 0;
    long fit_last_n = 0;
};

// Least-squares fit of |I~_n| ~ |B_n|^{-c} over the certified records with
// n >= fit_from, or over the last half of them when fit_from is 0. Throws
// EstimationError for fewer than 5 usable records (or fewer than 2 in the
// window), |B_n| not strictly increasing, or c_hat <= 0.
MeasureEstimate estimate_measure(std::span<const ApproximantRecord> records, const ProblemInstance &inst,
                                 long fit_from = 0);

} // namespace tschakaloff
