#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "majdes/qpoly.hpp"
#include "majdes/serialize.hpp"
#include "support.hpp"

using namespace majdes;

namespace {

QPolynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, 6), off(0, 4), coeff(-9, 9);
    std::vector<Int> c(static_cast<std::size_t>(len(rng)));
    for (Int& x : c) x = coeff(rng);
    return QPolynomial(off(rng), std::move(c));
}

}  // namespace

TEST_CASE("construction normalizes and keeps the invariants") {
    QPolynomial p(2, {0, 1, 1, 0});
    CHECK(p.min_degree() == 3);
    CHECK(p.max_degree() == 4);
    CHECK(p.coefficients().front() != 0);
    CHECK(p.coefficients().back() != 0);
    CHECK(QPolynomial(5, {0, 0}).is_zero());
    CHECK(QPolynomial().is_zero());
    CHECK_THROWS_AS(QPolynomial().min_degree(), ZeroPolynomial);
}

TEST_CASE("addition") {
    QPolynomial p = QPolynomial::power_sum(2, 3);
    CHECK(p + QPolynomial() == p);
    QPolynomial one_q = QPolynomial::one() + QPolynomial::monomial(1, 1);
    CHECK((one_q + one_q).text() == "2 + 2*q");
    QPolynomial q4 = QPolynomial::monomial(1, 4);
    CHECK((q4 + (-q4)).is_zero());
}

TEST_CASE("multiplication") {
    QPolynomial one_q = QPolynomial::one() + QPolynomial::monomial(1, 1);
    CHECK((one_q * one_q).text() == "1 + 2*q + q^2");
    QPolynomial p = QPolynomial::monomial(1, 4) * QPolynomial::power_sum(0, 2);
    CHECK(p == QPolynomial::power_sum(4, 6));
    // scaled by 5 this is the A_{5,2} slice of F_{321,5}
    CHECK(p.scaled(5).text() == "5*q^4 + 5*q^5 + 5*q^6");
    CHECK((p * QPolynomial()).is_zero());
    CHECK(p.shifted(-4) == QPolynomial::power_sum(0, 2));
    CHECK_THROWS_AS(p.shifted(-5), std::invalid_argument);
}

TEST_CASE("exact division") {
    QPolynomial one_q = QPolynomial::one() + QPolynomial::monomial(1, 1);
    CHECK(exact_divide(QPolynomial::power_sum(0, 3), one_q).text() == "1 + q^2");
    CHECK_THROWS_AS(exact_divide(QPolynomial::one() + QPolynomial::monomial(1, 2), one_q),
                    NotDivisible);
    CHECK_THROWS_AS(exact_divide(one_q, QPolynomial()), std::invalid_argument);
    CHECK(exact_divide(QPolynomial(), one_q).is_zero());
    // numerator of the (3,2)-shape, 2-descent distribution divides cleanly
    QPolynomial num = QPolynomial::monomial(1, 4) * QPolynomial::one_minus_power(2) *
                      QPolynomial::power_sum(0, 2);
    CHECK(exact_divide(num, QPolynomial::one_minus_power(2)) == QPolynomial::power_sum(4, 6));
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        QPolynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK(exact_divide(a * b, b) == a);
    }
}

TEST_CASE("q-binomial against the box-partition oracle") {
    CHECK(q_binomial(3, 0) == QPolynomial::one());
    CHECK(q_binomial(2, 1).text() == "1 + q + q^2");
    CHECK(q_binomial(2, 2).text() == "1 + q + 2*q^2 + q^3 + q^4");
    for (int M = 0; M <= 7; ++M)
        for (int N = 0; N <= 7; ++N)
            CHECK(q_binomial(M, N) == testing::box_partition_gf(M, N));
}

TEST_CASE("q-binomial special cases and symmetries") {
    CHECK(q_binomial_tb(5, 0) == QPolynomial::one());
    CHECK(q_binomial_tb(3, 5).is_zero());
    CHECK(q_binomial_tb(4, 2) == q_binomial(2, 2));
    for (int M = 0; M <= 12; ++M) {
        for (int N = 0; N <= 12; ++N) {
            QPolynomial g = q_binomial(M, N);
            CHECK(g == q_binomial(N, M));
            CHECK(g.value_at_one() == binomial(M + N, N));
            ShapeReport r = shape_report(g);
            CHECK(r.symmetric);
            CHECK(r.unimodal);
            CHECK(r.center_times_two == static_cast<long>(M) * N);
        }
    }
}

TEST_CASE("shape report") {
    ShapeReport flat = shape_report(QPolynomial::power_sum(4, 6).scaled(5));
    CHECK(flat.symmetric);
    CHECK(flat.unimodal);
    CHECK(flat.center_times_two == 10);
    CHECK(flat.coefficient_sum == 15);

    // two-descent slice of the length-5 132-avoider distribution: dips at q^4
    QPolynomial dip(3, {6, 5, 6, 2, 1});
    ShapeReport r = shape_report(dip);
    CHECK_FALSE(r.symmetric);
    CHECK_FALSE(r.unimodal);

    ShapeReport mono = shape_report(QPolynomial::monomial(1, 7));
    CHECK(mono.symmetric);
    CHECK(mono.unimodal);
    CHECK(mono.center_times_two == 14);

    CHECK_THROWS_AS(shape_report(QPolynomial()), ZeroPolynomial);
}

TEST_CASE("reverse within a window") {
    QPolynomial p(1, {4, 3, 2, 1});
    CHECK(reverse_within(p, 10).text() == "q^6 + 2*q^7 + 3*q^8 + 4*q^9");
    CHECK(reverse_within(QPolynomial::one(), 0) == QPolynomial::one());
    CHECK_THROWS_AS(reverse_within(p, 3), DegreeExceedsWindow);

    std::mt19937 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        QPolynomial a = random_poly(rng);
        long window = (a.is_zero() ? 0 : a.max_degree()) + trial % 3;
        CHECK(reverse_within(reverse_within(a, window), window) == a);
    }
    // a symmetric polynomial centered on window/2 is a fixed point
    QPolynomial sym(2, {1, 3, 3, 1});
    CHECK(reverse_within(sym, 7) == sym);
}

TEST_CASE("canonical text rendering") {
    CHECK(QPolynomial().text() == "0");
    CHECK(QPolynomial::one().text() == "1");
    CHECK(QPolynomial::monomial(4, 1).text() == "4*q");
    CHECK(QPolynomial::monomial(1, 10).text() == "q^10");
    CHECK((QPolynomial::one() - QPolynomial::monomial(1, 2)).text() == "1 - q^2");
    CHECK((-QPolynomial::monomial(3, 2)).text() == "-3*q^2");
}

TEST_CASE("json rendering") {
    QPolynomial p = QPolynomial::power_sum(4, 6).scaled(5);
    CHECK(to_json(p).dump() == R"({"coeffs":["5","5","5"],"min_degree":4})");
    CHECK(qpolynomial_from_json(to_json(p)) == p);
    CHECK(qpolynomial_from_json(to_json(QPolynomial())).is_zero());

    Int big("123456789012345678901234567890");
    QPolynomial huge = QPolynomial::monomial(big, 3);
    CHECK(qpolynomial_from_json(to_json(huge)) == huge);
}
