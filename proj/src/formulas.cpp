#include "majdes/formulas.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace majdes {

namespace {

template <typename Key>
class MemoTable {
public:
    template <typename Fn>
    QPolynomial get_or_compute(const Key& key, Fn&& compute) {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        QPolynomial value = compute();
        std::unique_lock lock(mutex_);
        return table_.emplace(key, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, QPolynomial> table_;
};

}  // namespace

QPolynomial f_two_row(TwoRowIndex idx) {
    auto [n, k, i] = idx;
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (k < 0 || i < 0 || 2 * k > n) return {};
    if (i == 0) return k == 0 ? QPolynomial::one() : QPolynomial();
    if (k == 0 || i > k) return {};
    QPolynomial num = QPolynomial::monomial(1, k + static_cast<long>(i) * i - i) *
                      QPolynomial::one_minus_power(n - 2 * k + 1) *
                      q_binomial_tb(k - 1, i - 1) * q_binomial_tb(n - k, i - 1);
    return exact_divide(num, QPolynomial::one_minus_power(i));
}

QPolynomial f_two_row_recurrence(TwoRowIndex idx) {
    static MemoTable<TwoRowIndex> memo;
    auto [n, k, i] = idx;
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (k < 0 || i < 0 || 2 * k > n) return {};
    if (i == 0) return k == 0 ? QPolynomial::one() : QPolynomial();
    if (k == 0 || i > k) return {};
    if (i == 1) return QPolynomial::power_sum(k, n - k);
    return memo.get_or_compute(idx, [&] {
        // f_{(n-k,k),i} = f_{(n-k-1,k),i} + sum_{k0} q^(n-k+k0) f_{(n-k-1,k0),i-1},
        // with f on the non-shape (k-1,k) read as zero.
        QPolynomial acc;
        if (n - 1 >= 2 * k) acc = f_two_row_recurrence({n - 1, k, i});
        for (int k0 = i - 1; k0 <= k - 1; ++k0) {
            QPolynomial part = f_two_row_recurrence({n - 1 - k + k0, k0, i - 1});
            if (!part.is_zero()) acc = acc + part.shifted(n - k + k0);
        }
        return acc;
    });
}

QPolynomial a_polynomial(int n, int i) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (i < 0) return {};
    if (i == 0) return QPolynomial::one();
    QPolynomial acc;
    for (int k = i; 2 * k <= n; ++k)
        acc = acc + f_two_row({n, k, i}).scaled(frt_multiplicity(n, k));
    return acc;
}

QPolynomial f_three_row(ThreeRowIndex idx) {
    auto [m, k, i] = idx;
    if (m < 1 || k < 1 || k > m) throw InvalidShape("need m >= k >= 1 for shape (m,k,1)");
    if (i < 2) throw InvalidParams("three-row distributions start at i = 2");
    if (i - 1 > k || i - 1 > m + 1) return {};
    QPolynomial num = QPolynomial::monomial(1, k + static_cast<long>(i) * i - 2 * i + 2) *
                      QPolynomial::one_minus_power(m - k + 1) *
                      QPolynomial::one_minus_power(i - 1) * q_binomial_tb(k, i - 1) *
                      q_binomial_tb(m + 1, i - 1);
    return exact_divide(exact_divide(num, QPolynomial::one_minus_power(i)),
                        QPolynomial::one_minus_power(1));
}

QPolynomial f_three_row_recurrence(ThreeRowIndex idx) {
    static MemoTable<ThreeRowIndex> memo;
    auto [m, k, i] = idx;
    if (m < 1 || k < 1 || k > m) throw InvalidShape("need m >= k >= 1 for shape (m,k,1)");
    if (i < 2) throw InvalidParams("three-row distributions start at i = 2");
    if (i == 2) return f_three_row(idx);
    return memo.get_or_compute(idx, [&] {
        QPolynomial acc;
        if (m > k) acc = f_three_row_recurrence({m - 1, k, i});
        QPolynomial t2 = f_two_row({m + k, k, i - 1});
        if (!t2.is_zero()) acc = acc + t2.shifted(m + k);
        for (int k0 = 1; k0 <= k - 1; ++k0) {
            QPolynomial t3 = f_three_row_recurrence({m - 1, k0, i - 1});
            if (!t3.is_zero()) acc = acc + t3.shifted(m + k0 + 1);
            QPolynomial t4 = f_two_row({m + k0, k0, i - 1});
            if (!t4.is_zero()) acc = acc + t4.shifted(m + k0);
        }
        return acc;
    });
}

std::pair<QPolynomial, QPolynomial> qbinomial_identity_check(int which,
                                                             std::pair<long, long> params) {
    auto [p1, p2] = params;
    if (which == 1) {
        long m = p1, n = p2;
        if (m < 0 || n < 0) throw InvalidParams("identity 1 needs m, n >= 0");
        QPolynomial lhs;
        for (long j = 0; j <= n; ++j) lhs = lhs + q_binomial(j, m).shifted(j);
        return {lhs, q_binomial(n, m + 1)};
    }
    if (which == 2) {
        long a = p1, B = p2;
        if (a < 0 || B < a) throw InvalidParams("identity 2 needs 0 <= a <= B");
        QPolynomial lhs;
        for (long j = a; j <= B; ++j) lhs = lhs + q_binomial_tb(j, a).shifted(2 * j);
        QPolynomial rhs =
            (q_binomial_tb(B + 2, a + 2) - q_binomial_tb(B + 1, a + 2).shifted(1)).shifted(2 * a);
        return {lhs, rhs};
    }
    throw InvalidParams("identity selector must be 1 or 2");
}

QPolynomial catalan_top_term(int n) {
    if (n < 2) throw InvalidN("catalan_top_term needs n >= 2");
    long h = n / 2;
    // Even n: the unique recording tableau [1,3,5,...],[2,4,6,...] has
    // descents 1, 3, ..., n-1, so maj = h^2.
    if (n % 2 == 0) return QPolynomial::monomial(catalan_number(h), h * h);
    Int num = (4 * h + 2) * catalan_number(h);
    Int den(h + 2);
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("odd-case Catalan prefactor not integral");
    Int c;
    mpz_divexact(c.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return QPolynomial::power_sum(h * h, h * h + h).scaled(c);
}

BivariatePolynomial related_distribution(int pattern, int n) {
    if (n < 1) throw InvalidN("n must be positive");
    BivariatePolynomial out;
    long full = static_cast<long>(n) * (n - 1) / 2;
    if (pattern == 123) {
        // Reversal of the 321 class: i descents come from n-1-i descents,
        // maj shifts by n(n-1)/2 - n(n-1-i).
        for (int i = 0; i <= n - 1; ++i) {
            QPolynomial a = a_polynomial(n, n - 1 - i);
            if (!a.is_zero())
                out.set_term(i, a.shifted(full - static_cast<long>(n) * (n - 1 - i)));
        }
        return out;
    }
    if (pattern != 231 && pattern != 213 && pattern != 312)
        throw InvalidParams("derived distributions cover 123, 231, 213, 312");
    BivariatePolynomial base = distribution(n, Permutation::parse("132"));
    for (int i = 0; i <= n - 1; ++i) {
        QPolynomial g;
        switch (pattern) {
            case 231:
                g = base.term(n - 1 - i);
                if (!g.is_zero())
                    g = g.shifted(full - static_cast<long>(n) * (n - 1 - i));
                break;
            case 213:
                g = base.term(n - 1 - i);
                if (!g.is_zero()) g = reverse_within(g, full);
                break;
            case 312:
                g = base.term(i);
                if (!g.is_zero()) g = reverse_within(g, static_cast<long>(n) * i);
                break;
        }
        out.set_term(i, std::move(g));
    }
    return out;
}

std::array<Int, 3> g132_low_coefficients(int n) {
    if (n < 5) throw InvalidN("the low-coefficient formula needs n >= 5");
    Int c3 = binomial(n - 1, 2);
    return {c3, c3 - 1, Int(static_cast<long>(n) * n - 4 * n + 1)};
}

namespace {

void insert_sorted(std::vector<int>& row, int v) {
    row.insert(std::upper_bound(row.begin(), row.end(), v), v);
}

void erase_value(std::vector<int>& row, int v) {
    auto it = std::find(row.begin(), row.end(), v);
    if (it == row.end()) throw std::logic_error("value missing from row");
    row.erase(it);
}

// Length of the maximal initial run first, first+1, ... in a sorted row.
int initial_run_length(const std::vector<int>& row, int first) {
    int j = 0;
    while (j < static_cast<int>(row.size()) && row[static_cast<std::size_t>(j)] == first + j)
        ++j;
    return j;
}

void shift_values_from(std::vector<std::vector<int>>& rows, int threshold, int delta) {
    for (auto& row : rows)
        for (int& v : row)
            if (v >= threshold) v += delta;
}

}  // namespace

StandardYoungTableau mk1_bijection(const StandardYoungTableau& t) {
    const auto& r = t.rows();
    if (r.size() != 3 || r[2].size() != 1) throw WrongShape("expected shape (m,k,1)");
    PermStats st = tableau_statistics(t);
    if (st.des != 2) throw WrongDescentCount("expected exactly 2 descents");
    int i1 = st.descent_set[0];
    int i2 = st.descent_set[1];
    // Structure forced by 2 descents: third row holds i2+1, second row opens
    // with the run i1+1 .. i1+j.
    if (r[2][0] != i2 + 1 || r[1].empty() || r[1][0] != i1 + 1)
        throw std::logic_error("unexpected 2-descent tableau structure");
    int j = initial_run_length(r[1], i1 + 1);

    std::vector<std::vector<int>> out{r[0], r[1]};
    insert_sorted(out[1], i2 + 1);        // third row entry joins row 2
    erase_value(out[1], i1 + j);          // run end moves up...
    insert_sorted(out[0], i1 + j);        // ...to row 1, after i1
    shift_values_from(out, i1 + j, 1);    // renumber to make room
    insert_sorted(out[1], i1 + j);        // fresh run end in row 2
    StandardYoungTableau result(std::move(out));

    PermStats out_st = tableau_statistics(result);
    if (out_st.des != 2 || out_st.maj != st.maj + 1)
        throw std::logic_error("bijection output violated the maj+1 contract");
    return result;
}

StandardYoungTableau mk1_bijection_inverse(const StandardYoungTableau& t) {
    const auto& r = t.rows();
    if (r.size() != 2 || r[1].size() < 2) throw WrongShape("expected shape (m+1,k+1), k >= 1");
    PermStats st = tableau_statistics(t);
    if (st.des != 2) throw NotInImage();
    int d1 = st.descent_set[0];
    int d2 = st.descent_set[1];
    if (r[1][0] != d1 + 1) throw NotInImage();
    int j = initial_run_length(r[1], d1 + 1);
    if (d2 <= d1 + j) throw NotInImage();

    std::vector<std::vector<int>> out{r[0], r[1], {}};
    erase_value(out[1], d2 + 1);          // second descent bottom drops to row 3
    out[2].push_back(d2 + 1);
    erase_value(out[1], d1 + j);          // remove the run end entirely
    shift_values_from(out, d1 + j + 1, -1);
    auto moved = std::find(out[0].begin(), out[0].end(), d1 + j);
    if (moved == out[0].end()) throw NotInImage();
    out[0].erase(moved);                  // ex-(d1+j+1) returns to row 2
    insert_sorted(out[1], d1 + j);

    if (!StandardYoungTableau::valid(out)) throw NotInImage();
    StandardYoungTableau result(std::move(out));
    try {
        if (mk1_bijection(result) != t) throw NotInImage();
    } catch (const NotInImage&) {
        throw;
    } catch (const std::exception&) {
        throw NotInImage();
    }
    return result;
}

}  // namespace majdes
