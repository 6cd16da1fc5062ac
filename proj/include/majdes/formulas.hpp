#pragma once

#include <array>
#include <utility>

#include "majdes/perm.hpp"
#include "majdes/qpoly.hpp"
#include "majdes/tableaux.hpp"

namespace majdes {

struct WrongShape : std::invalid_argument {
    explicit WrongShape(const std::string& what) : std::invalid_argument(what) {}
};
struct WrongDescentCount : std::invalid_argument {
    explicit WrongDescentCount(const std::string& what) : std::invalid_argument(what) {}
};
struct NotInImage : std::domain_error {
    NotInImage() : std::domain_error("tableau is not in the image of the forward bijection") {}
};
struct InvalidParams : std::invalid_argument {
    explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};
struct InvalidN : std::invalid_argument {
    explicit InvalidN(const std::string& what) : std::invalid_argument(what) {}
};

/// Indices of the two-row distribution f over SYT of shape (n-k,k) with i
/// descents. Out-of-range k or i make the formulas vanish rather than error.
struct TwoRowIndex {
    int n;
    int k;
    int i;
    auto operator<=>(const TwoRowIndex&) const = default;
};

/// Indices of the three-row distribution over SYT of shape (m,k,1).
struct ThreeRowIndex {
    int m;
    int k;
    int i;
    auto operator<=>(const ThreeRowIndex&) const = default;
};

/// Closed form q^(k+i^2-i) (1-q^(n-2k+1)) / (1-q^i) * [k-1, i-1]_q [n-k, i-1]_q.
QPolynomial f_two_row(TwoRowIndex idx);

/// Same distribution by the peel-off-the-last-entry recurrence, memoized.
QPolynomial f_two_row_recurrence(TwoRowIndex idx);

/// Major index over 321-avoiders with i descents:
/// A_{n,i} = sum_k f_two_row(n,k,i) * frt_multiplicity(n,k).
QPolynomial a_polynomial(int n, int i);

/// Closed form for shape (m,k,1), i >= 2 descents.
QPolynomial f_three_row(ThreeRowIndex idx);

/// Four-term recurrence for shape (m,k,1), grounded at i = 2.
QPolynomial f_three_row_recurrence(ThreeRowIndex idx);

/// Both sides of the two q-binomial summation identities, computed
/// independently; callers assert lhs == rhs.
/// which=1 takes (m, n):  sum_{j=0}^n q^j [m+j, m]_q  vs  [n+m+1, m+1]_q
/// which=2 takes (a, B):  sum_{j=a}^B q^(2j) [j, a]_q vs
///                        q^(2a) ([B+2, a+2]_q - q [B+1, a+2]_q)
std::pair<QPolynomial, QPolynomial> qbinomial_identity_check(int which,
                                                             std::pair<long, long> params);

/// Top t-coefficient of the 321 distribution: the flat Catalan-scale slice.
QPolynomial catalan_top_term(int n);

/// Distribution for 123/231/213/312 derived from the 132 distribution (or
/// from a_polynomial for 123) via the reversal and complement relations; the
/// target class itself is never enumerated.
BivariatePolynomial related_distribution(int pattern, int n);

/// (q^3, q^4, q^5) coefficients of g_{132,n,2}: (C(n-1,2), C(n-1,2)-1, n^2-4n+1).
std::array<Int, 3> g132_low_coefficients(int n);

/// Maj-incrementing bijection from 2-descent SYT of shape (m,k,1) to 2-descent
/// SYT of shape (m+1,k+1).
StandardYoungTableau mk1_bijection(const StandardYoungTableau& t);
StandardYoungTableau mk1_bijection_inverse(const StandardYoungTableau& t);

}  // namespace majdes
