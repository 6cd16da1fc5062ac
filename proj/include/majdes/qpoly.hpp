#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace majdes {

using Int = mpz_class;

Int binomial(long n, long k);
Int factorial(long n);
Int catalan_number(long j);

struct NotDivisible : std::domain_error {
    NotDivisible() : std::domain_error("polynomial division left a remainder") {}
};
struct ZeroPolynomial : std::domain_error {
    ZeroPolynomial() : std::domain_error("operation undefined for the zero polynomial") {}
};
struct DegreeExceedsWindow : std::domain_error {
    DegreeExceedsWindow() : std::domain_error("polynomial degree exceeds the reversal window") {}
};

/// Dense polynomial in q with exact integer coefficients, stored from an
/// explicit minimum degree upward. The zero polynomial is the empty
/// coefficient list and has no min/max degree; callers branch on is_zero()
/// before asking for either.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(long min_degree, std::vector<Int> coeffs);

    static QPolynomial constant(Int c);
    static QPolynomial one() { return constant(1); }
    static QPolynomial monomial(Int coeff, long degree);
    static QPolynomial power_sum(long lo, long hi);  // q^lo + q^(lo+1) + ... + q^hi
    static QPolynomial one_minus_power(long a);      // 1 - q^a

    bool is_zero() const { return coeffs_.empty(); }
    long min_degree() const;
    long max_degree() const;
    const std::vector<Int>& coefficients() const { return coeffs_; }
    Int coefficient(long degree) const;
    Int value_at_one() const;

    QPolynomial shifted(long d) const;  // multiply by q^d; d may be negative
    QPolynomial scaled(const Int& c) const;

    /// Canonical text: ascending degree, "5*q^4 + 5*q^5 + 5*q^6"; "0" when zero.
    std::string text() const;

    bool operator==(const QPolynomial&) const = default;

    friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    QPolynomial operator-() const;

private:
    void normalize();

    long min_degree_ = 0;
    std::vector<Int> coeffs_;
};

/// Quotient r with r*den == num exactly; throws NotDivisible otherwise.
QPolynomial exact_divide(const QPolynomial& num, const QPolynomial& den);

QPolynomial q_pochhammer(long n);                  // (q)_n = (1-q)(1-q^2)...(1-q^n)
QPolynomial q_binomial(long M, long N);            // [M+N choose N]_q, box form
QPolynomial q_binomial_tb(long top, long bottom);  // [top choose bottom]_q; 0 when top < bottom

struct ShapeReport {
    bool symmetric = false;
    bool unimodal = false;
    long center_times_two = 0;
    Int coefficient_sum = 0;
};

ShapeReport shape_report(const QPolynomial& p);

/// Coefficient of q^d in the result = coefficient of q^(window-d) in p.
QPolynomial reverse_within(const QPolynomial& p, long window);

}  // namespace majdes
