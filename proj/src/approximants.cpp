#include "tschakaloff/approximants.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

namespace tschakaloff {

namespace {

void require_n(long n)
{
    if (n < 1) {
        throw DomainError("approximants require n >= 1");
    }
}

} // namespace

Integer normalizer(const ProblemInstance &inst, long n)
{
    require_n(n);
    const long m = m_of_n(n);
    const auto q1_exp = static_cast<unsigned long>(m * (m - 1) / 2);
    const auto q2_exp = static_cast<unsigned long>(n * (n + 1) / 2 + n * (n - 1) / 2 + n * m);
    return pow(inst.z1(), static_cast<unsigned long>(n)) * pow(inst.z2(), static_cast<unsigned long>(m)) *
           pow(inst.q1(), q1_exp) * pow(inst.q2(), q2_exp);
}

ApproximantPair compute_AB(const ProblemInstance &inst, long n)
{
    require_n(n);
    const long m = m_of_n(n);
    const Rational &q = inst.q();
    const Rational &z = inst.z();
    const std::vector<QPolynomial> coeffs = expand_R(n);
    const std::vector<Rational> partial = tschakaloff_partial_sums(q, z, n + m);

    // weight_k = z^{-k} C_k(q) q^{k(k-1)/2 + km}
    // B = N sum_k weight_k,  A = N sum_k weight_k S_{k+m}
    Rational b_sum;
    Rational a_sum;
    for (long k = 0; k <= n; ++k) {
        const Rational weight =
            pow(z, -k) * eval_at(coeffs[static_cast<std::size_t>(k)], q) * pow(q, k * (k - 1) / 2 + k * m);
        b_sum += weight;
        a_sum += weight * partial[static_cast<std::size_t>(k + m)];
    }
    const Rational norm(normalizer(inst, n));
    const Rational B = norm * b_sum;
    const Rational A = norm * a_sum;
    if (!B.is_integer()) {
        throw InvariantViolation("B_n is not an integer at n = " + std::to_string(n) + " (denominator " +
                                 B.den().get_str() + ")");
    }
    if (!A.is_integer()) {
        throw InvariantViolation("A_n is not an integer at n = " + std::to_string(n) + " (denominator " +
                                 A.den().get_str() + ")");
    }
    return {A.num(), B.num()};
}

Integer compute_B(const ProblemInstance &inst, long n)
{
    return compute_AB(inst, n).B;
}

Integer compute_A(const ProblemInstance &inst, long n)
{
    return compute_AB(inst, n).A;
}

Rational leading_term(const ProblemInstance &inst, long n)
{
    require_n(n);
    const long m = m_of_n(n);
    const Rational &q = inst.q();
    Rational out = Rational(normalizer(inst, n)) * pow(inst.z(), n + m + 1) * pow(q, -((n + m) * (n + m + 1) / 2));
    for (long j = 1; j <= n; ++j) {
        out *= Rational(1) - pow(q, -j);
    }
    return out;
}

ApproximantRecord compute_record(const ProblemInstance &inst, long n, const SeriesTermBudget &budget)
{
    budget.validate();
    auto [A, B] = compute_AB(inst, n);
    const Rational norm(normalizer(inst, n));
    const Rational abs_B = abs(Rational(B));

    Rational width = std::min(budget.target_width, abs(leading_term(inst, n)) * pow2(-64));
    ApproximantRecord rec;
    rec.n = n;
    rec.m = m_of_n(n);
    constexpr int refinements = 4;
    for (int round = 0; round <= refinements; ++round) {
        SeriesTermBudget t_budget{budget.max_terms, B == 0 ? width : width / abs_B};
        const RationalInterval T = tschakaloff_enclosure(inst, t_budget);
        RationalInterval I_tilde = RationalInterval(Rational(B)) * T - RationalInterval(Rational(A));

        SeriesTermBudget d_budget{budget.max_terms, width / abs(norm)};
        const RationalInterval direct = RationalInterval(norm) * I_n_direct_enclosure(inst, n, d_budget);
        if (!I_tilde.overlaps(direct)) {
            throw InvariantViolation("B_n T - A_n and the direct I_n sum disagree at n = " + std::to_string(n));
        }
        rec.I_tilde = std::move(I_tilde);
        if (!rec.I_tilde.contains_zero()) {
            break;
        }
        width *= pow2(-64);
    }
    rec.A = std::move(A);
    rec.B = std::move(B);
    rec.nonzero_certified = !rec.I_tilde.contains_zero();
    return rec;
}

std::vector<ApproximantRecord> compute_records(const ProblemInstance &inst, long first, long last,
                                               const SeriesTermBudget &budget, unsigned jobs)
{
    require_n(first);
    if (last < first) {
        return {};
    }
    const auto count = static_cast<std::size_t>(last - first + 1);
    std::vector<ApproximantRecord> out(count);
    std::vector<std::exception_ptr> errors(count);

    std::mutex next_mutex;
    std::size_t next = 0;
    auto worker = [&] {
        for (;;) {
            std::size_t i = 0;
            {
                std::lock_guard lock(next_mutex);
                if (next == count) {
                    return;
                }
                i = next++;
            }
            try {
                out[i] = compute_record(inst, first + static_cast<long>(i), budget);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const unsigned threads = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(count));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

Witness witness_for_denominator(const ProblemInstance &inst, const Integer &b, long n_max,
                                const SeriesTermBudget &budget)
{
    if (b < 1) {
        throw DomainError("denominator b must be >= 1");
    }
    const Rational rb(b);
    // width(b I_tilde) <= 1/4, i.e. width(T) <= 1/(4 |B_n| b)
    const Rational width = std::min(budget.target_width, Rational(Integer(1), Integer(4 * b)));
    for (long n = 1; n <= n_max; ++n) {
        ApproximantRecord rec = compute_record(inst, n, SeriesTermBudget{budget.max_terms, width});
        if (!rec.nonzero_certified) {
            continue;
        }
        RationalInterval scaled = RationalInterval(rb) * rec.I_tilde;
        if (scaled.magnitude() < Rational(1)) {
            return {std::move(rec), std::move(scaled)};
        }
    }
    throw NotFound("no n <= " + std::to_string(n_max) + " certifies 0 < |b I~_n| < 1 for b = " + b.get_str());
}

} // namespace tschakaloff
