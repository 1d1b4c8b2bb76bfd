#include "tschakaloff/asymptotics.hpp"

#include <algorithm>

namespace tschakaloff {

namespace {

const Rational log_width = pow2(-64);
constexpr unsigned long midpoint_bits = 96;

RationalInterval point(long v)
{
    return RationalInterval(Rational(v));
}

void require_gamma_range(const RationalInterval &gamma)
{
    if (gamma.lo().sign() < 0 || gamma.hi() >= Rational(1)) {
        throw DomainError("gamma enclosure must lie within [0, 1)");
    }
}

// Midpoint of ln|x|, rounded to a dyadic to keep later arithmetic small.
Rational ln_mid(const RationalInterval &abs_x)
{
    return round_to_dyadic(ln_enclosure(abs_x, log_width).midpoint(), midpoint_bits);
}

Rational ln_mid(const Integer &x)
{
    return ln_mid(RationalInterval(abs(Rational(x))));
}

} // namespace

RationalInterval sqrt5_enclosure(const Rational &max_width)
{
    return sqrt_enclosure(Rational(5), max_width);
}

RationalInterval beta_enclosure(const Rational &max_width)
{
    return (sqrt5_enclosure(max_width) - point(1)) / point(2);
}

RationalInterval gamma0_enclosure(const Rational &max_width)
{
    return (point(3) - sqrt5_enclosure(max_width)) / point(2);
}

RationalInterval theoretical_B_exponent(const Rational &max_width)
{
    return (point(5) + sqrt5_enclosure(max_width)) / point(4);
}

RationalInterval theoretical_B_exponent_expanded(const RationalInterval &gamma)
{
    const auto beta = beta_enclosure();
    const auto one_beta = point(1) + beta;
    return (point(1) - gamma) * one_beta + gamma * one_beta + beta * beta / point(2);
}

RationalInterval theoretical_I_exponent_expanded(const RationalInterval &gamma)
{
    require_gamma_range(gamma);
    const auto beta = beta_enclosure();
    const auto one_beta = point(1) + beta;
    return -((point(1) - gamma) * one_beta * one_beta / point(2)) + gamma * one_beta + beta * beta / point(2);
}

RationalInterval theoretical_I_exponent_factored(const RationalInterval &gamma)
{
    require_gamma_range(gamma);
    const auto s = sqrt5_enclosure();
    const auto gamma0 = (point(3) - s) / point(2);
    return -(s * (s + point(1)) * (gamma0 - gamma) / (point(2) * (s - point(1))));
}

RationalInterval theoretical_I_exponent(const RationalInterval &gamma)
{
    auto factored = theoretical_I_exponent_factored(gamma);
    if (!factored.overlaps(theoretical_I_exponent_expanded(gamma))) {
        throw InvariantViolation("expanded and factored I~_n exponent forms disagree");
    }
    return factored;
}

ExponentReports empirical_exponents(std::span<const ApproximantRecord> records, const ProblemInstance &inst)
{
    ExponentReports out;
    const Rational ln_q1 = ln_mid(inst.q1());
    const auto gamma = gamma_enclosure(inst, log_width);
    const auto theo_B = theoretical_B_exponent();
    const auto theo_I = theoretical_I_exponent(gamma);
    for (const auto &rec : records) {
        if (rec.B == 0) {
            out.notices.push_back("n = " + std::to_string(rec.n) + ": B_n = 0, skipped");
            continue;
        }
        if (!rec.nonzero_certified || rec.I_tilde.contains_zero()) {
            out.notices.push_back("n = " + std::to_string(rec.n) + ": I~_n not certified nonzero, skipped");
            continue;
        }
        const Rational scale = Rational(rec.n * rec.n) * ln_q1;
        out.reports.push_back(ExponentReport{
            rec.n,
            ln_mid(rec.B) / scale,
            ln_mid(abs(rec.I_tilde)) / scale,
            theo_B,
            theo_I,
        });
    }
    return out;
}

HypothesisReport hypothesis_check(const ProblemInstance &inst)
{
    HypothesisReport out;
    const Rational floor_width = pow2(-4096);
    for (Rational w = pow2(-32);; w *= w) {
        out.gamma = gamma_enclosure(inst, w);
        out.gamma0 = gamma0_enclosure(w);
        if (out.gamma.below(out.gamma0)) {
            out.verdict = Hypothesis::holds;
            return out;
        }
        if (out.gamma.above(out.gamma0)) {
            out.verdict = Hypothesis::fails;
            return out;
        }
        if (w < floor_width) {
            out.verdict = Hypothesis::indeterminate;
            return out;
        }
    }
}

RationalInterval predicted_irrationality_exponent(const RationalInterval &gamma)
{
    const auto s = sqrt5_enclosure();
    const auto gamma0 = (point(3) - s) / point(2);
    if (gamma.lo().sign() < 0 || !gamma.below(gamma0)) {
        throw DomainError("predicted exponent requires 0 <= gamma < gamma0");
    }
    return point(1) + (s - point(1)) / (point(2) * (gamma0 - gamma));
}

MeasureEstimate estimate_measure(std::span<const ApproximantRecord> records, const ProblemInstance &inst,
                                 long fit_from)
{
    std::vector<const ApproximantRecord *> usable;
    for (const auto &rec : records) {
        if (rec.B != 0 && rec.nonzero_certified && !rec.I_tilde.contains_zero()) {
            usable.push_back(&rec);
        }
    }
    std::sort(usable.begin(), usable.end(), [](auto *a, auto *b) { return a->n < b->n; });
    if (usable.size() < 5) {
        throw EstimationError("measure estimate needs at least 5 certified records, got " +
                              std::to_string(usable.size()));
    }
    for (std::size_t i = 1; i < usable.size(); ++i) {
        if (abs(Rational(usable[i]->B)) <= abs(Rational(usable[i - 1]->B))) {
            throw EstimationError("|B_n| is not strictly increasing at n = " + std::to_string(usable[i]->n));
        }
    }

    std::size_t first = usable.size() / 2;
    if (fit_from > 0) {
        first = static_cast<std::size_t>(
            std::find_if(usable.begin(), usable.end(), [&](auto *r) { return r->n >= fit_from; }) - usable.begin());
        if (usable.size() - first < 2) {
            throw EstimationError("fewer than 2 certified records with n >= " + std::to_string(fit_from));
        }
    }
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (std::size_t i = first; i < usable.size(); ++i) {
        const Rational ln_b = ln_mid(usable[i]->B);
        xs.push_back(ln_b);
        ys.push_back(ln_b - ln_mid(abs(usable[i]->I_tilde)));
    }
    const Rational count(static_cast<long>(xs.size()));
    Rational x_mean;
    Rational y_mean;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        x_mean += xs[i];
        y_mean += ys[i];
    }
    x_mean /= count;
    y_mean /= count;
    Rational sxy;
    Rational sxx;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
        sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
    }
    if (sxx.is_zero()) {
        throw EstimationError("degenerate fit: all ln|B_n| equal");
    }

    MeasureEstimate est;
    est.c_hat = sxy / sxx - Rational(1);
    if (est.c_hat.sign() <= 0) {
        throw EstimationError("fitted c is not positive (" + to_scientific(est.c_hat, 6) + ")");
    }
    est.empirical_exponent = Rational(1) + Rational(1) / est.c_hat;
    est.last_log_ratio = ln_mid(usable.back()->B) / ln_mid(usable[usable.size() - 2]->B);
    est.fit_first_n = usable[first]->n;
    est.fit_last_n = usable.back()->n;

    const auto hyp = hypothesis_check(inst);
    if (hyp.verdict == Hypothesis::holds) {
        est.predicted_exponent = predicted_irrationality_exponent(hyp.gamma);
    }
    return est;
}

} // namespace tschakaloff
