#include <doctest.h>

#include "tschakaloff/approximants.hpp"

using namespace tschakaloff;

namespace {

Rational frac(long a, long b)
{
    return Rational(Integer(a), Integer(b));
}

struct Pair {
    Rational A;
    Rational B;
};

// The literal double sum, with C_k from the closed form and the normaliser
// assembled term by term.
Pair brute_force_AB(const ProblemInstance &inst, long n)
{
    const long m = m_of_n(n);
    const Rational q = inst.q();
    const Rational z = inst.z();
    Rational b_sum;
    Rational a_sum;
    for (long k = 0; k <= n; ++k) {
        const Rational ck = eval_at(explicit_C(n, k), q);
        b_sum += pow(z, -k) * ck * pow(q, k * (k - 1) / 2 + k * m);
        for (long l = 0; l <= k + m; ++l) {
            a_sum += ck * pow(z, l - k) * pow(q, k * (k - 1) / 2 + k * m - l * (l - 1) / 2);
        }
    }
    Rational norm(1);
    for (long i = 0; i < n; ++i) {
        norm *= Rational(inst.z1());
    }
    for (long i = 0; i < m; ++i) {
        norm *= Rational(inst.z2());
    }
    for (long i = 0; i < m * (m - 1) / 2; ++i) {
        norm *= Rational(inst.q1());
    }
    for (long i = 0; i < n * (n + 1) / 2 + n * (n - 1) / 2 + n * m; ++i) {
        norm *= Rational(inst.q2());
    }
    return {norm * a_sum, norm * b_sum};
}

const std::vector<Rational> &grid_q()
{
    static const std::vector<Rational> v{Rational(2), Rational(-3), frac(7, 2), frac(5, 3)};
    return v;
}

const std::vector<Rational> &grid_z()
{
    static const std::vector<Rational> v{Rational(1), frac(1, 2), Rational(-2), frac(3, 7)};
    return v;
}

} // namespace

TEST_CASE("normalizer")
{
    const ProblemInstance inst(Rational(2), Rational(1));
    CHECK(normalizer(inst, 1) == 1);
    CHECK(normalizer(inst, 5) == 8); // m = 3: 2^{3}
    const ProblemInstance inst2(frac(7, 2), frac(3, 5));
    // n = 2, m = 1: z1^2 z2 q1^0 q2^{3 + 1 + 2}
    CHECK(normalizer(inst2, 2) == Integer(9 * 5 * 64));
}

TEST_CASE("hand-checked A_n, B_n for q = 2, z = 1")
{
    const ProblemInstance inst(Rational(2), Rational(1));
    CHECK(compute_B(inst, 1) == -1);
    CHECK(compute_A(inst, 1) == -3);
    // n = 2, m = 1: C = 1, -6, 8 at q = 2; weights 1, -12, 64; partial sums 2, 5/2, 21/8
    CHECK(compute_B(inst, 2) == 53);
    CHECK(compute_A(inst, 2) == 140);
    const auto oracle = brute_force_AB(inst, 2);
    CHECK(oracle.B == Rational(53));
    CHECK(oracle.A == Rational(140));
    CHECK_THROWS_AS(compute_B(inst, 0), DomainError);
}

TEST_CASE("A_n, B_n agree with the brute-force double sum")
{
    for (const auto &q : grid_q()) {
        for (const auto &z : grid_z()) {
            const ProblemInstance inst(q, z);
            for (long n = 1; n <= 10; ++n) {
                CAPTURE(q.str());
                CAPTURE(z.str());
                CAPTURE(n);
                const auto oracle = brute_force_AB(inst, n);
                REQUIRE(oracle.A.is_integer());
                REQUIRE(oracle.B.is_integer());
                const auto ab = compute_AB(inst, n);
                REQUIRE(Rational(ab.A) == oracle.A);
                REQUIRE(Rational(ab.B) == oracle.B);
            }
        }
    }
}

TEST_CASE("integrality on the grid for n <= 20")
{
    for (const auto &q : grid_q()) {
        for (const auto &z : grid_z()) {
            const ProblemInstance inst(q, z);
            for (long n = 1; n <= 20; ++n) {
                REQUIRE_NOTHROW(compute_AB(inst, n));
            }
        }
    }
}

TEST_CASE("record for q = 2, z = 1, n = 1")
{
    const ProblemInstance inst(Rational(2), Rational(1));
    const auto rec = compute_record(inst, 1, SeriesTermBudget{1000, pow2(-40)});
    CHECK(rec.n == 1);
    CHECK(rec.m == 0);
    CHECK(rec.A == -3);
    CHECK(rec.B == -1);
    CHECK(rec.nonzero_certified);
    CHECK(rec.I_tilde.width() <= pow2(-40));
    CHECK(rec.I_tilde.midpoint().to_double() == doctest::Approx(0.3583674394).epsilon(1e-10));
}

TEST_CASE("record width shrinks as the budget tightens")
{
    const ProblemInstance inst(frac(7, 2), frac(3, 7));
    Rational previous_width(1);
    for (long bits : {8L, 32L, 128L, 512L}) {
        const auto rec = compute_record(inst, 6, SeriesTermBudget{100000, pow2(-bits)});
        CHECK(rec.I_tilde.width() <= pow2(-bits));
        CHECK(rec.I_tilde.width() <= previous_width);
        previous_width = rec.I_tilde.width();
    }
}

TEST_CASE("non-vanishing and leading-term dominance for q = 2, z = 1")
{
    const ProblemInstance inst(Rational(2), Rational(1));
    const auto records = compute_records(inst, 1, 40, SeriesTermBudget{});
    for (const auto &rec : records) {
        CAPTURE(rec.n);
        REQUIRE(rec.nonzero_certified);
        REQUIRE(rec.m == m_of_n(rec.n));
    }
    const auto &last = records.back();
    const Rational ratio = last.I_tilde.midpoint() / leading_term(inst, 40);
    CHECK(abs(ratio - Rational(1)) < frac(1, 100));
}

TEST_CASE("decay when gamma < gamma0")
{
    for (const auto &[q, z] : {std::pair{Rational(2), Rational(1)}, std::pair{Rational(-3), frac(1, 2)},
                                 std::pair{frac(7, 2), frac(3, 7)}}) {
        CAPTURE(q.str());
        const ProblemInstance inst(q, z);
        const auto records = compute_records(inst, 1, 40, SeriesTermBudget{});
        Rational early_min = records[0].I_tilde.mignitude();
        for (long n = 1; n <= 5; ++n) {
            early_min = std::min(early_min, records[static_cast<std::size_t>(n - 1)].I_tilde.mignitude());
        }
        Rational late_max(0);
        for (long n = 30; n <= 40; ++n) {
            late_max = std::max(late_max, records[static_cast<std::size_t>(n - 1)].I_tilde.magnitude());
        }
        CHECK(late_max < early_min);
    }
}

TEST_CASE("parallel record computation is deterministic")
{
    const ProblemInstance inst(Rational(-3), Rational(-2));
    const auto serial = compute_records(inst, 1, 12, SeriesTermBudget{}, 1);
    const auto parallel = compute_records(inst, 1, 12, SeriesTermBudget{}, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].n == parallel[i].n);
        CHECK(serial[i].A == parallel[i].A);
        CHECK(serial[i].B == parallel[i].B);
        CHECK(serial[i].I_tilde == parallel[i].I_tilde);
    }
}

TEST_CASE("precision exhaustion propagates out of compute_record")
{
    const ProblemInstance inst(Rational(2), Rational(1));
    CHECK_THROWS_AS(compute_record(inst, 10, SeriesTermBudget{3, pow2(-64)}), PrecisionExhausted);
}

TEST_CASE("witness search")
{
    const ProblemInstance inst(Rational(2), Rational(1));
    SUBCASE("b = 1 and b = 2 are settled by n = 1")
    {
        for (long b : {1L, 2L}) {
            const auto w = witness_for_denominator(inst, Integer(b), 10);
            CHECK(w.record.n == 1);
            CHECK(w.scaled.mignitude().sign() > 0);
            CHECK(w.scaled.magnitude() < Rational(1));
        }
        const auto w2 = witness_for_denominator(inst, Integer(2), 10);
        CHECK(w2.scaled.midpoint().to_double() == doctest::Approx(0.7167348788).epsilon(1e-9));
    }
    SUBCASE("b = 10^6")
    {
        const auto w = witness_for_denominator(inst, Integer(1000000), 40);
        CHECK(w.record.nonzero_certified);
        CHECK(w.scaled.magnitude() < Rational(1));
        CHECK(w.scaled == RationalInterval(Rational(1000000)) * w.record.I_tilde);
    }
    SUBCASE("gamma above gamma0 finds nothing for large b")
    {
        const ProblemInstance bad(frac(3, 2), Rational(1));
        CHECK_THROWS_AS(witness_for_denominator(bad, pow(Integer(10), 6), 25), NotFound);
    }
    CHECK_THROWS_AS(witness_for_denominator(inst, Integer(0), 5), DomainError);
}
