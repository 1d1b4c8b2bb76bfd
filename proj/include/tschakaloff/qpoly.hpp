#pragma once

// Dense integer polynomials in q, and the q-analogues built from them:
// q-factorials, Gaussian binomial coefficients, and the T-coefficients
// C_k(q) of R_n(T; q) = (1 - qT)(1 - q^2 T)...(1 - q^n T).

#include <iosfwd>
#include <string>
#include <vector>

#include "tschakaloff/arith.hpp"

namespace tschakaloff {

class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(long c);
    // coeffs[i] is the coefficient of q^i; trailing zeros are dropped.
    explicit QPolynomial(std::vector<Integer> coeffs);

    // c * q^k
    static QPolynomial monomial(const Integer &c, std::size_t k);

    const std::vector<Integer> &coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    // Coefficient of q^i, zero past the degree.
    Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
    // Index of the lowest nonzero coefficient; -1 for zero.
    long valuation() const;

    QPolynomial operator-() const;
    QPolynomial &operator+=(const QPolynomial &o);
    QPolynomial &operator-=(const QPolynomial &o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial &b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial &b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial &a, const QPolynomial &b);

    // Multiplication by q^k.
    QPolynomial shifted(std::size_t k) const;

    friend bool operator==(const QPolynomial &, const QPolynomial &) = default;

    // `c0 + c1*q + c2*q^2 + ...` with zero terms omitted, "0" for zero.
    std::string str() const;

private:
    void trim();

    std::vector<Integer> coeffs_;
};

std::ostream &operator<<(std::ostream &os, const QPolynomial &p);

QPolynomial poly_mul(const QPolynomial &a, const QPolynomial &b);

struct PolyDivision {
    QPolynomial quotient;
    QPolynomial remainder;
};

// Division over Z. Throws DomainError for a zero divisor and
// InvariantViolation if a quotient coefficient is not integral.
PolyDivision poly_divmod(const QPolynomial &a, const QPolynomial &b);

// a / b, throwing InvariantViolation unless the remainder is zero.
QPolynomial exact_divide(const QPolynomial &a, const QPolynomial &b);

// Coefficients C_0..C_n (in T) of R_n(T; q). Throws DomainError for n < 1.
std::vector<QPolynomial> expand_R(long n);

// [k]_q! = prod_{j=1..k} (q^j - 1)/(q - 1). Throws DomainError for k < 0.
QPolynomial qfactorial(long k);

// Gaussian binomial coefficient by the Pascal-type recurrence.
// Throws DomainError unless 0 <= k <= n.
QPolynomial qbinom(long n, long k);

// All [n k]_q for k = 0..n.
std::vector<QPolynomial> qbinom_row(long n);

// (-1)^k [n k]_q q^{k(k+1)/2}
QPolynomial explicit_C(long n, long k);

// Exact evaluation at a rational point.
Rational eval_at(const QPolynomial &p, const Rational &x);

} // namespace tschakaloff
