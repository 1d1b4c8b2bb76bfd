#include "tschakaloff/arith.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>

namespace tschakaloff {

Rational::Rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const
{
    // mpq's own formatting already omits "/1" for canonical integers.
    return value_.get_str(10);
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.str();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw ParseError("malformed rational '" + std::string(text) + "', expected [-]num or [-]num/den");
    }
    Integer num(std::string(num_text), 10);
    Integer den(std::string(den_text), 10);
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) {
        num = -num;
    }
    return Rational(num, den);
}

Rational abs(const Rational &r)
{
    return r.sign() < 0 ? -r : r;
}

Integer pow(const Integer &x, unsigned long e)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), x.get_mpz_t(), e);
    return out;
}

Rational pow(const Rational &r, long e)
{
    if (e >= 0) {
        const auto ue = static_cast<unsigned long>(e);
        return Rational(pow(r.num(), ue), pow(r.den(), ue));
    }
    if (r.is_zero()) {
        throw DomainError("zero raised to a negative power");
    }
    const auto ue = static_cast<unsigned long>(-e);
    return Rational(pow(r.den(), ue), pow(r.num(), ue));
}

Rational pow2(long e)
{
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

std::size_t bit_length(const Integer &x)
{
    if (x == 0) {
        return 0;
    }
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

Integer isqrt(const Integer &x)
{
    if (x < 0) {
        throw DomainError("isqrt of a negative integer");
    }
    Integer r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

Integer floor_div(const Integer &a, const Integer &b)
{
    if (b == 0) {
        throw DomainError("division by zero");
    }
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer floor(const Rational &r)
{
    return floor_div(r.num(), r.den());
}

Integer ceil(const Rational &r)
{
    Integer q;
    const Integer n = r.num();
    const Integer d = r.den();
    mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

Rational round_to_dyadic(const Rational &r, unsigned long bits)
{
    const Integer scale = pow(Integer(2), bits);
    return Rational(floor(r * Rational(scale) + Rational(Integer(1), Integer(2))), scale);
}

Integer m_of_n(const Integer &n)
{
    if (n <= 0) {
        throw DomainError("m_of_n requires n >= 1");
    }
    return floor_div(isqrt(5 * n * n) - n, Integer(2));
}

long m_of_n(long n)
{
    return m_of_n(Integer(n)).get_si();
}

std::string to_scientific(const Rational &r, int digits)
{
    if (r.is_zero()) {
        return "0";
    }
    // Enough binary precision for `digits` decimal digits plus guard bits.
    const auto prec = static_cast<mp_bitcnt_t>(digits * 4 + 64);
    mpf_class f(0, prec);
    f = r.raw();
    mp_exp_t exp10 = 0;
    std::string mant = f.get_str(exp10, 10, static_cast<std::size_t>(digits));
    std::string sign;
    if (!mant.empty() && mant.front() == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    mant.resize(static_cast<std::size_t>(digits), '0');
    const long e = static_cast<long>(exp10) - 1;
    std::string out = sign + mant.substr(0, 1) + "." + mant.substr(1) + "e";
    out += e < 0 ? "-" : "+";
    const std::string es = std::to_string(e < 0 ? -e : e);
    out += es.size() < 2 ? "0" + es : es;
    return out;
}

} // namespace tschakaloff
