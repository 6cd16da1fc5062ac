#include "majdes/tableaux.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace majdes {

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> v;
    if (s.empty()) return v;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        int x = 0;
        auto [p, ec] = std::from_chars(s.data() + pos, s.data() + next, x);
        if (ec != std::errc() || p != s.data() + next)
            throw std::invalid_argument("bad integer list: " + s);
        v.push_back(x);
        pos = next + 1;
    }
    return v;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1]))
            throw InvalidShape("parts must be nonincreasing positive integers");
    }
}

Shape Shape::parse(const std::string& s) { return Shape(parse_int_list(s)); }

int Shape::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

long Shape::b_statistic() const {
    long b = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) b += static_cast<long>(i) * parts_[i];
    return b;
}

std::string Shape::text() const { return join_ints(parts_); }

bool StandardYoungTableau::valid(const std::vector<std::vector<int>>& rows) {
    int n = 0;
    for (const auto& r : rows) {
        if (r.empty()) return false;
        n += static_cast<int>(r.size());
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            int x = rows[r][c];
            if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) return false;
            seen[static_cast<std::size_t>(x)] = true;
            if (c > 0 && rows[r][c - 1] >= x) return false;
            if (r > 0 && rows[r - 1][c] >= x) return false;
        }
    }
    return true;
}

StandardYoungTableau::StandardYoungTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
    if (!valid(rows_)) throw std::invalid_argument("not a standard Young tableau");
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    row_of_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (int x : rows_[r]) row_of_[static_cast<std::size_t>(x)] = static_cast<int>(r) + 1;
}

StandardYoungTableau StandardYoungTableau::parse(const std::string& s) {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find('/', pos);
        if (next == std::string::npos) next = s.size();
        rows.push_back(parse_int_list(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return StandardYoungTableau(std::move(rows));
}

Shape StandardYoungTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Shape(std::move(parts));
}

std::string StandardYoungTableau::text() const {
    std::string out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r > 0) out += '/';
        out += join_ints(rows_[r]);
    }
    return out;
}

void for_each_syt(const Shape& shape,
                  const std::function<void(const StandardYoungTableau&)>& visit) {
    const auto& parts = shape.parts();
    const int n = shape.size();
    std::vector<std::vector<int>> rows(parts.size());
    for (std::size_t r = 0; r < parts.size(); ++r)
        rows[r].reserve(static_cast<std::size_t>(parts[r]));
    if (n == 0) {
        visit(StandardYoungTableau({}));
        return;
    }
    std::function<void(int)> go = [&](int entry) {
        if (entry > n) {
            visit(StandardYoungTableau(rows));
            return;
        }
        for (std::size_t r = 0; r < parts.size(); ++r) {
            if (static_cast<int>(rows[r].size()) >= parts[r]) continue;
            if (r > 0 && rows[r - 1].size() <= rows[r].size()) continue;
            rows[r].push_back(entry);
            go(entry + 1);
            rows[r].pop_back();
        }
    };
    go(1);
}

std::vector<StandardYoungTableau> enumerate_syt(const Shape& shape) {
    std::vector<StandardYoungTableau> out;
    for_each_syt(shape, [&](const StandardYoungTableau& t) { out.push_back(t); });
    return out;
}

PermStats tableau_statistics(const StandardYoungTableau& t) {
    PermStats st;
    for (int i = 1; i < t.size(); ++i) {
        if (t.row_of(i) < t.row_of(i + 1)) {
            st.descent_set.push_back(i);
            st.maj += i;
        }
    }
    st.des = static_cast<int>(st.descent_set.size());
    return st;
}

std::vector<std::vector<int>> hook_lengths(const Shape& shape) {
    const auto& parts = shape.parts();
    std::vector<std::vector<int>> h(parts.size());
    for (std::size_t r = 0; r < parts.size(); ++r) {
        h[r].resize(static_cast<std::size_t>(parts[r]));
        for (int c = 0; c < parts[r]; ++c) {
            int arm = parts[r] - c - 1;
            int leg = 0;
            for (std::size_t r2 = r + 1; r2 < parts.size() && parts[r2] > c; ++r2) ++leg;
            h[r][static_cast<std::size_t>(c)] = arm + leg + 1;
        }
    }
    return h;
}

Int frt_count(const Shape& shape) {
    Int num = factorial(shape.size());
    Int den = 1;
    for (const auto& row : hook_lengths(shape))
        for (int h : row) den *= h;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("hook-length count not integral");
    Int r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

Int frt_multiplicity(int n, int k) {
    if (n < 0 || k < 0 || 2 * k > n) throw InvalidShape("need 0 <= k <= n/2");
    Int num = binomial(n, k) * (n - 2 * k + 1);
    Int den(n - k + 1);
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("two-row multiplicity not integral");
    Int r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

QPolynomial stanley_maj_gf(const Shape& shape) {
    QPolynomial p = q_pochhammer(shape.size()).shifted(shape.b_statistic());
    for (const auto& row : hook_lengths(shape))
        for (int h : row) p = exact_divide(p, QPolynomial::one_minus_power(h));
    return p;
}

std::map<int, QPolynomial> maj_distribution_by_descents(const Shape& shape) {
    std::map<int, std::vector<Int>> buckets;
    for_each_syt(shape, [&](const StandardYoungTableau& t) {
        PermStats st = tableau_statistics(t);
        auto& b = buckets[st.des];
        if (static_cast<long>(b.size()) <= st.maj) b.resize(static_cast<std::size_t>(st.maj) + 1);
        ++b[static_cast<std::size_t>(st.maj)];
    });
    std::map<int, QPolynomial> out;
    for (auto& [des, coeffs] : buckets) out.emplace(des, QPolynomial(0, std::move(coeffs)));
    return out;
}

std::pair<StandardYoungTableau, StandardYoungTableau> rsk(const Permutation& p) {
    std::vector<std::vector<int>> pr, qr;
    for (int j = 1; j <= p.size(); ++j) {
        int x = p.value_at(j);
        std::size_t r = 0;
        for (;; ++r) {
            if (r == pr.size()) {
                pr.push_back({x});
                qr.push_back({j});
                break;
            }
            auto it = std::upper_bound(pr[r].begin(), pr[r].end(), x);
            if (it == pr[r].end()) {
                pr[r].push_back(x);
                qr[r].push_back(j);
                break;
            }
            std::swap(*it, x);
        }
    }
    return {StandardYoungTableau(std::move(pr)), StandardYoungTableau(std::move(qr))};
}

LatticePath::LatticePath(std::string steps, std::vector<int> peaks)
    : steps_(std::move(steps)), peaks_(std::move(peaks)) {
    int east = 0, south = 0;
    std::vector<int> corners;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        char c = steps_[i];
        if (c == 'E')
            ++east;
        else if (c == 'S')
            ++south;
        else
            throw std::invalid_argument("steps must be 'E' or 'S'");
        if (south > east) throw std::invalid_argument("path dips below the diagonal");
        if (c == 'E' && i + 1 < steps_.size() && steps_[i + 1] == 'S')
            corners.push_back(static_cast<int>(i) + 1);
    }
    if (corners != peaks_) throw std::invalid_argument("peak set inconsistent with steps");
}

LatticePath LatticePath::from_steps(std::string steps) {
    std::vector<int> peaks;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i)
        if (steps[i] == 'E' && steps[i + 1] == 'S') peaks.push_back(static_cast<int>(i) + 1);
    return LatticePath(std::move(steps), std::move(peaks));
}

int LatticePath::east_count() const {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), 'E'));
}

int LatticePath::south_count() const {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), 'S'));
}

std::string LatticePath::text() const { return steps_ + " peaks=" + join_ints(peaks_); }

LatticePath syt_to_lattice_path(const StandardYoungTableau& t) {
    if (t.rows().size() > 2) throw TooManyRows();
    std::string steps(static_cast<std::size_t>(t.size()), 'E');
    for (int i = 1; i <= t.size(); ++i)
        if (t.row_of(i) == 2) steps[static_cast<std::size_t>(i - 1)] = 'S';
    return LatticePath::from_steps(std::move(steps));
}

StandardYoungTableau lattice_path_to_syt(const LatticePath& path) {
    std::vector<std::vector<int>> rows(1);
    if (path.south_count() > 0) rows.resize(2);
    for (std::size_t i = 0; i < path.steps().size(); ++i)
        rows[path.steps()[i] == 'E' ? 0 : 1].push_back(static_cast<int>(i) + 1);
    return StandardYoungTableau(std::move(rows));
}

}  // namespace majdes
