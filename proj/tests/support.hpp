#pragma once

#include <vector>

#include "majdes/qpoly.hpp"

namespace majdes::testing {

// All partitions of n, parts nonincreasing, largest-first order.
inline std::vector<std::vector<int>> all_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto go = [&](auto&& self, int left, int max_part) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    go(go, n, n);
    return out;
}

// Generating function of partitions fitting in an M x N box, by direct
// enumeration; the independent oracle for q_binomial.
inline QPolynomial box_partition_gf(int M, int N) {
    std::vector<Int> coeffs(static_cast<std::size_t>(M) * N + 1, Int(0));
    std::vector<int> parts;
    auto go = [&](auto&& self, int rows_left, int max_part, long total) -> void {
        ++coeffs[static_cast<std::size_t>(total)];
        if (rows_left == 0) return;
        for (int p = 1; p <= max_part; ++p) self(self, rows_left - 1, p, total + p);
    };
    go(go, N, M, 0);
    return QPolynomial(0, std::move(coeffs));
}

inline QPolynomial one_plus_q_power(int n) {
    QPolynomial p = QPolynomial::one();
    QPolynomial base = QPolynomial::one() + QPolynomial::monomial(1, 1);
    for (int j = 0; j < n; ++j) p = p * base;
    return p;
}

}  // namespace majdes::testing
