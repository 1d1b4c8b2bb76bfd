#include "tschakaloff/series.hpp"

#include <cmath>

namespace tschakaloff {

void SeriesTermBudget::validate() const
{
    if (max_terms < 1) {
        throw DomainError("max_terms must be >= 1");
    }
    if (target_width.sign() <= 0) {
        throw DomainError("target_width must be positive");
    }
}

namespace {

void require_convergent(const Rational &q)
{
    if (abs(q) <= Rational(1)) {
        throw DomainError("series requires |q| > 1, got q = " + q.str());
    }
}

double log_abs(const Integer &x)
{
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

// Rough count of the index l at which |z| |q|^-l first drops to 1/2. Used
// only to refuse hopeless budgets up front; never part of a bound.
double ratio_onset_estimate(const Rational &q, const Rational &z)
{
    const double log_q = log_abs(q.num()) - log_abs(q.den());
    const double log_2z = std::log(2.0) + log_abs(z.num()) - log_abs(z.den());
    return log_2z / log_q;
}

void precheck(const Rational &q, const Rational &z, long first_index, const SeriesTermBudget &budget)
{
    const double onset = ratio_onset_estimate(q, z);
    if (onset - static_cast<double>(first_index) > 2.0 * static_cast<double>(budget.max_terms) + 16.0) {
        throw PrecisionExhausted("term budget of " + std::to_string(budget.max_terms) +
                                     " cannot reach the geometric-tail regime (about " +
                                     std::to_string(static_cast<long>(onset)) + " terms needed)",
                                 std::nullopt);
    }
}

RationalInterval around(const Rational &centre, const Rational &radius)
{
    return {centre - radius, centre + radius};
}

} // namespace

RationalInterval tschakaloff_enclosure(const Rational &q, const Rational &z, const SeriesTermBudget &budget)
{
    budget.validate();
    require_convergent(q);
    if (z.is_zero()) {
        return RationalInterval(Rational(1));
    }
    precheck(q, z, 0, budget);

    const Rational abs_z = abs(z);
    const Rational q_inv = Rational(1) / q;
    const Rational abs_q_inv = abs(q_inv);
    const Rational half(Integer(1), Integer(2));
    const Rational tail_target = budget.target_width / Rational(2);

    Rational sum;
    Rational term(1);      // z^l q^{-l(l-1)/2}
    Rational q_inv_pow(1); // q^{-l}
    Rational ratio_bound = abs_z; // |z| |q|^{-l}
    for (long l = 0; l < budget.max_terms; ++l) {
        sum += term;
        term *= z * q_inv_pow;
        q_inv_pow *= q_inv;
        ratio_bound *= abs_q_inv;
        // term now holds index l+1; ratio_bound = |z||q|^{-(l+1)} bounds every
        // later ratio, so the tail after index l is at most 2 |term|.
        if (ratio_bound <= half) {
            const Rational tail = Rational(2) * abs(term);
            if (tail <= tail_target) {
                return around(sum, tail);
            }
            if (l + 1 == budget.max_terms) {
                throw PrecisionExhausted("term budget exhausted before reaching target width", around(sum, tail));
            }
        }
    }
    throw PrecisionExhausted("term budget exhausted before the tail could be bounded", std::nullopt);
}

RationalInterval tschakaloff_enclosure(const ProblemInstance &inst, const SeriesTermBudget &budget)
{
    return tschakaloff_enclosure(inst.q(), inst.z(), budget);
}

RationalInterval theta_via_tschakaloff(const Rational &q, const Rational &z, const SeriesTermBudget &budget)
{
    require_convergent(q);
    return tschakaloff_enclosure(q * q, z / q, budget);
}

RationalInterval I_n_direct_enclosure(const ProblemInstance &inst, long n, const SeriesTermBudget &budget)
{
    budget.validate();
    if (n < 1) {
        throw DomainError("I_n requires n >= 1");
    }
    const long m = m_of_n(n);
    const Rational &q = inst.q();
    const Rational &z = inst.z();
    precheck(q, z, n + m + 1, budget);

    const Rational q_inv = Rational(1) / q;
    const Rational abs_q_inv = abs(q_inv);
    const Rational half(Integer(1), Integer(2));
    const Rational tail_target = budget.target_width / Rational(2);
    // |R_n(q^-t; q)| <= prod_j (1 + |q|^{j-t}) <= 2^n for t > n.
    // TODO: the product itself is a sharper constant and would save a few terms.
    const Rational r_bound = pow2(n);

    // Terms t = 1..n vanish: R_n(q^-t; q) has the factor 1 - q^t q^-t.
    long t = n + 1;
    const long first_l = t + m;
    Rational R(1); // R_n(q^-t; q) = prod_{s=t-n}^{t-1} (1 - q^-s)
    for (long s = 1; s <= n; ++s) {
        R *= Rational(1) - pow(q, -s);
    }
    Rational u = pow(z, first_l) * pow(q, -(first_l * (first_l - 1) / 2)); // z^l q^{-l(l-1)/2}
    Rational q_inv_pow = pow(q, -first_l);                                 // q^{-l}
    Rational ratio_bound = abs(z) * abs(q_inv_pow);

    Rational sum;
    for (long count = 0; count < budget.max_terms; ++count, ++t) {
        sum += R * u;
        // advance to t + 1
        R *= (Rational(1) - pow(q, -t)) / (Rational(1) - pow(q, -(t - n)));
        u *= z * q_inv_pow;
        q_inv_pow *= q_inv;
        ratio_bound *= abs_q_inv;
        if (ratio_bound <= half) {
            const Rational tail = Rational(2) * r_bound * abs(u);
            if (tail <= tail_target) {
                return around(sum, tail);
            }
            if (count + 1 == budget.max_terms) {
                throw PrecisionExhausted("term budget exhausted before reaching target width", around(sum, tail));
            }
        }
    }
    throw PrecisionExhausted("term budget exhausted before the tail could be bounded", std::nullopt);
}

std::vector<Rational> tschakaloff_partial_sums(const Rational &q, const Rational &z, long last)
{
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(last + 1));
    const Rational q_inv = Rational(1) / q;
    Rational sum;
    Rational term(1);
    Rational q_inv_pow(1);
    for (long l = 0; l <= last; ++l) {
        sum += term;
        out.push_back(sum);
        term *= z * q_inv_pow;
        q_inv_pow *= q_inv;
    }
    return out;
}

} // namespace tschakaloff
