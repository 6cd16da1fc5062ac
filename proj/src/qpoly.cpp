#include "majdes/qpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace majdes {

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative integer");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int catalan_number(long j) {
    if (j < 0) throw std::invalid_argument("Catalan number of a negative index");
    Int num = binomial(2 * j, j);
    Int den(j + 1);
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("Catalan quotient not integral");
    Int r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

QPolynomial::QPolynomial(long min_degree, std::vector<Int> coeffs)
    : min_degree_(min_degree), coeffs_(std::move(coeffs)) {
    normalize();
    if (!coeffs_.empty() && min_degree_ < 0)
        throw std::invalid_argument("negative minimum degree");
}

void QPolynomial::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        min_degree_ = 0;
        return;
    }
    std::size_t tail = coeffs_.size();
    while (tail > lead && coeffs_[tail - 1] == 0) --tail;
    if (lead > 0 || tail < coeffs_.size()) {
        coeffs_ = std::vector<Int>(coeffs_.begin() + static_cast<long>(lead),
                                   coeffs_.begin() + static_cast<long>(tail));
        min_degree_ += static_cast<long>(lead);
    }
}

QPolynomial QPolynomial::constant(Int c) {
    return monomial(std::move(c), 0);
}

QPolynomial QPolynomial::monomial(Int coeff, long degree) {
    if (coeff == 0) return {};
    std::vector<Int> v;
    v.push_back(std::move(coeff));
    return QPolynomial(degree, std::move(v));
}

QPolynomial QPolynomial::power_sum(long lo, long hi) {
    if (hi < lo) return {};
    return QPolynomial(lo, std::vector<Int>(static_cast<std::size_t>(hi - lo + 1), Int(1)));
}

QPolynomial QPolynomial::one_minus_power(long a) {
    if (a < 1) throw std::invalid_argument("one_minus_power needs a positive exponent");
    std::vector<Int> v(static_cast<std::size_t>(a) + 1, Int(0));
    v.front() = 1;
    v.back() = -1;
    return QPolynomial(0, std::move(v));
}

long QPolynomial::min_degree() const {
    if (is_zero()) throw ZeroPolynomial();
    return min_degree_;
}

long QPolynomial::max_degree() const {
    if (is_zero()) throw ZeroPolynomial();
    return min_degree_ + static_cast<long>(coeffs_.size()) - 1;
}

Int QPolynomial::coefficient(long degree) const {
    if (is_zero() || degree < min_degree_ ||
        degree > min_degree_ + static_cast<long>(coeffs_.size()) - 1)
        return 0;
    return coeffs_[static_cast<std::size_t>(degree - min_degree_)];
}

Int QPolynomial::value_at_one() const {
    Int s = 0;
    for (const Int& c : coeffs_) s += c;
    return s;
}

QPolynomial QPolynomial::shifted(long d) const {
    if (is_zero()) return {};
    if (min_degree_ + d < 0)
        throw std::invalid_argument("shift would produce negative degrees");
    QPolynomial r = *this;
    r.min_degree_ += d;
    return r;
}

QPolynomial QPolynomial::scaled(const Int& c) const {
    if (c == 0 || is_zero()) return {};
    QPolynomial r = *this;
    for (Int& x : r.coeffs_) x *= c;
    return r;
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long lo = std::min(a.min_degree_, b.min_degree_);
    long hi = std::max(a.max_degree(), b.max_degree());
    std::vector<Int> v(static_cast<std::size_t>(hi - lo + 1), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        v[static_cast<std::size_t>(a.min_degree_ - lo) + i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        v[static_cast<std::size_t>(b.min_degree_ - lo) + i] += b.coeffs_[i];
    return QPolynomial(lo, std::move(v));
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial r = *this;
    for (Int& c : r.coeffs_) c = -c;
    return r;
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
    return a + (-b);
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return QPolynomial(a.min_degree_ + b.min_degree_, std::move(v));
}

QPolynomial exact_divide(const QPolynomial& num, const QPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (num.is_zero()) return {};
    if (num.min_degree() < den.min_degree()) throw NotDivisible();
    const auto& n = num.coefficients();
    const auto& d = den.coefficients();
    if (n.size() < d.size()) throw NotDivisible();

    // High-end long division over Z; every quotient step must divide exactly.
    std::vector<Int> rem = n;
    std::vector<Int> quot(n.size() - d.size() + 1, Int(0));
    const Int& lead = d.back();
    for (long pos = static_cast<long>(rem.size()) - 1;
         pos >= static_cast<long>(d.size()) - 1; --pos) {
        Int& c = rem[static_cast<std::size_t>(pos)];
        if (c == 0) continue;
        if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) throw NotDivisible();
        Int q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
        std::size_t base = static_cast<std::size_t>(pos) - (d.size() - 1);
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (d[j] == 0) continue;
            mpz_submul(rem[base + j].get_mpz_t(), q.get_mpz_t(), d[j].get_mpz_t());
        }
        quot[base] = std::move(q);
    }
    for (const Int& c : rem)
        if (c != 0) throw NotDivisible();
    return QPolynomial(num.min_degree() - den.min_degree(), std::move(quot));
}

namespace {

std::shared_mutex poch_mutex;
std::vector<QPolynomial> poch_cache;  // poch_cache[j] = (q)_j

std::shared_mutex qbin_mutex;
std::map<std::pair<long, long>, QPolynomial> qbin_cache;

}  // namespace

QPolynomial q_pochhammer(long n) {
    if (n < 0) throw std::invalid_argument("q-Pochhammer of a negative index");
    {
        std::shared_lock lock(poch_mutex);
        if (static_cast<std::size_t>(n) < poch_cache.size())
            return poch_cache[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(poch_mutex);
    if (poch_cache.empty()) poch_cache.push_back(QPolynomial::one());
    while (static_cast<long>(poch_cache.size()) <= n) {
        long j = static_cast<long>(poch_cache.size());
        poch_cache.push_back(poch_cache.back() * QPolynomial::one_minus_power(j));
    }
    return poch_cache[static_cast<std::size_t>(n)];
}

QPolynomial q_binomial(long M, long N) {
    if (M < 0 || N < 0) throw std::invalid_argument("q-binomial box sides must be nonnegative");
    {
        std::shared_lock lock(qbin_mutex);
        auto it = qbin_cache.find({M, N});
        if (it != qbin_cache.end()) return it->second;
    }
    // (q)_{M+N} / ((q)_M (q)_N), each division checked exact.
    QPolynomial r = exact_divide(exact_divide(q_pochhammer(M + N), q_pochhammer(M)),
                                 q_pochhammer(N));
    std::unique_lock lock(qbin_mutex);
    return qbin_cache.emplace(std::make_pair(M, N), std::move(r)).first->second;
}

QPolynomial q_binomial_tb(long top, long bottom) {
    if (bottom < 0 || top < bottom) return {};
    return q_binomial(top - bottom, bottom);
}

ShapeReport shape_report(const QPolynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    const auto& c = p.coefficients();
    ShapeReport r;
    r.center_times_two = p.min_degree() + p.max_degree();
    r.coefficient_sum = p.value_at_one();
    r.symmetric = std::equal(c.begin(), c.end(), c.rbegin());
    std::size_t i = 1;
    while (i < c.size() && c[i] >= c[i - 1]) ++i;
    while (i < c.size() && c[i] <= c[i - 1]) ++i;
    r.unimodal = (i == c.size());
    return r;
}

QPolynomial reverse_within(const QPolynomial& p, long window) {
    if (window < 0) throw std::invalid_argument("negative reversal window");
    if (p.is_zero()) return {};
    if (p.max_degree() > window) throw DegreeExceedsWindow();
    std::vector<Int> c(p.coefficients().rbegin(), p.coefficients().rend());
    return QPolynomial(window - p.max_degree(), std::move(c));
}

std::string QPolynomial::text() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        long d = min_degree_ + static_cast<long>(i);
        bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Int a = abs(c);
        std::string term;
        if (d == 0) {
            term = a.get_str();
        } else {
            std::string qp = (d == 1) ? "q" : "q^" + std::to_string(d);
            term = (a == 1) ? qp : a.get_str() + "*" + qp;
        }
        out += term;
    }
    return out;
}

}  // namespace majdes
