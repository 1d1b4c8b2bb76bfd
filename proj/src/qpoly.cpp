#include "tschakaloff/qpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace tschakaloff {

QPolynomial::QPolynomial(long c)
{
    if (c != 0) {
        coeffs_.emplace_back(c);
    }
}

QPolynomial::QPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

QPolynomial QPolynomial::monomial(const Integer &c, std::size_t k)
{
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return QPolynomial(std::move(v));
}

void QPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

long QPolynomial::valuation() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            return static_cast<long>(i);
        }
    }
    return -1;
}

QPolynomial QPolynomial::operator-() const
{
    QPolynomial out = *this;
    for (auto &c : out.coeffs_) {
        c = -c;
    }
    return out;
}

QPolynomial &QPolynomial::operator+=(const QPolynomial &o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

QPolynomial &QPolynomial::operator-=(const QPolynomial &o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

QPolynomial operator*(const QPolynomial &a, const QPolynomial &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::shifted(std::size_t k) const
{
    if (is_zero()) {
        return {};
    }
    std::vector<Integer> v(k + coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
    return QPolynomial(std::move(v));
}

std::string QPolynomial::str() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Integer &c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        if (first) {
            os << c;
        } else if (c < 0) {
            os << " - " << Integer(-c);
        } else {
            os << " + " << c;
        }
        if (i == 1) {
            os << "*q";
        } else if (i > 1) {
            os << "*q^" << i;
        }
        first = false;
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const QPolynomial &p)
{
    return os << p.str();
}

QPolynomial poly_mul(const QPolynomial &a, const QPolynomial &b)
{
    return a * b;
}

PolyDivision poly_divmod(const QPolynomial &a, const QPolynomial &b)
{
    if (b.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    std::vector<Integer> rem = a.coeffs();
    const auto &div = b.coeffs();
    const std::size_t db = div.size() - 1;
    if (rem.size() < div.size()) {
        return {QPolynomial{}, a};
    }
    std::vector<Integer> quot(rem.size() - db);
    const Integer &lead = div.back();
    for (std::size_t i = quot.size(); i-- > 0;) {
        Integer &top = rem[i + db];
        if (top == 0) {
            continue;
        }
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
            throw InvariantViolation("non-integral quotient coefficient in polynomial division");
        }
        Integer c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_submul(rem[i + j].get_mpz_t(), c.get_mpz_t(), div[j].get_mpz_t());
        }
        quot[i] = std::move(c);
    }
    return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

QPolynomial exact_divide(const QPolynomial &a, const QPolynomial &b)
{
    auto d = poly_divmod(a, b);
    if (!d.remainder.is_zero()) {
        throw InvariantViolation("polynomial division left remainder " + d.remainder.str());
    }
    return std::move(d.quotient);
}

std::vector<QPolynomial> expand_R(long n)
{
    if (n < 1) {
        throw DomainError("expand_R requires n >= 1");
    }
    // Multiply in one factor (1 - q^j T) at a time: C_k <- C_k - q^j C_{k-1}.
    std::vector<QPolynomial> c(static_cast<std::size_t>(n) + 1);
    c[0] = QPolynomial(1);
    for (long j = 1; j <= n; ++j) {
        for (long k = j; k >= 1; --k) {
            c[static_cast<std::size_t>(k)] -= c[static_cast<std::size_t>(k - 1)].shifted(static_cast<std::size_t>(j));
        }
    }
    return c;
}

QPolynomial qfactorial(long k)
{
    if (k < 0) {
        throw DomainError("qfactorial requires k >= 0");
    }
    const QPolynomial q_minus_1(std::vector<Integer>{Integer(-1), Integer(1)});
    QPolynomial out(1);
    for (long j = 1; j <= k; ++j) {
        const QPolynomial qj_minus_1 = QPolynomial::monomial(Integer(1), static_cast<std::size_t>(j)) - QPolynomial(1);
        out = out * exact_divide(qj_minus_1, q_minus_1);
    }
    return out;
}

std::vector<QPolynomial> qbinom_row(long n)
{
    if (n < 0) {
        throw DomainError("qbinom requires n >= 0");
    }
    // [n k] = [n-1 k-1] + q^k [n-1 k], updated in place from the right.
    std::vector<QPolynomial> row{QPolynomial(1)};
    for (long i = 1; i <= n; ++i) {
        row.emplace_back(1);
        for (long k = i - 1; k >= 1; --k) {
            const auto uk = static_cast<std::size_t>(k);
            row[uk] = row[uk - 1] + row[uk].shifted(uk);
        }
    }
    return row;
}

QPolynomial qbinom(long n, long k)
{
    if (k < 0 || k > n) {
        throw DomainError("qbinom requires 0 <= k <= n");
    }
    return qbinom_row(n)[static_cast<std::size_t>(k)];
}

QPolynomial explicit_C(long n, long k)
{
    if (k < 0 || k > n) {
        throw DomainError("explicit_C requires 0 <= k <= n");
    }
    QPolynomial c = qbinom(n, k).shifted(static_cast<std::size_t>(k * (k + 1) / 2));
    return k % 2 == 0 ? c : -c;
}

Rational eval_at(const QPolynomial &p, const Rational &x)
{
    if (p.is_zero()) {
        return Rational(0);
    }
    // Homogenised Horner: sum c_i a^i b^(D-i), then divide by b^D.
    const Integer a = x.num();
    const Integer b = x.den();
    const auto &c = p.coeffs();
    Integer acc = 0;
    Integer b_pow = 1;
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= a;
        mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), b_pow.get_mpz_t());
        if (i > 0) {
            b_pow *= b;
        }
    }
    return Rational(acc, b_pow);
}

} // namespace tschakaloff
