#include "majdes/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace majdes {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
        if (v < 1 || v > static_cast<int>(values_.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("values are not a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& s) {
    std::vector<int> v;
    if (s.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            int x = 0;
            auto [p, ec] = std::from_chars(s.data() + pos, s.data() + next, x);
            if (ec != std::errc() || p != s.data() + next)
                throw std::invalid_argument("bad permutation text: " + s);
            v.push_back(x);
            pos = next + 1;
        }
    } else {
        for (char c : s) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad permutation text: " + s);
            v.push_back(c - '0');
        }
    }
    return Permutation(std::move(v));
}

std::string Permutation::text() const {
    std::string out;
    bool digits = size() <= 9;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!digits && i > 0) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

PermStats statistics(const Permutation& p) {
    PermStats st;
    for (int i = 1; i < p.size(); ++i) {
        if (p.value_at(i) > p.value_at(i + 1)) {
            st.descent_set.push_back(i);
            st.maj += i;
        }
    }
    st.des = static_cast<int>(st.descent_set.size());
    return st;
}

namespace {

// Backtracking match of pattern slots to increasing text positions. When
// last_fixed, the final slot is pinned to the last element of the text.
bool match_pattern(const std::vector<int>& text, const std::vector<int>& pat, bool last_fixed) {
    const int L = static_cast<int>(pat.size());
    const int m = static_cast<int>(text.size());
    if (m < L) return false;
    std::vector<int> vals(static_cast<std::size_t>(L), 0);
    std::vector<bool> set(static_cast<std::size_t>(L), false);
    if (last_fixed) {
        vals[static_cast<std::size_t>(L - 1)] = text[static_cast<std::size_t>(m - 1)];
        set[static_cast<std::size_t>(L - 1)] = true;
    }
    auto compatible = [&](int slot, int v) {
        for (int s = 0; s < L; ++s) {
            if (!set[static_cast<std::size_t>(s)] || s == slot) continue;
            if ((pat[static_cast<std::size_t>(s)] < pat[static_cast<std::size_t>(slot)]) !=
                (vals[static_cast<std::size_t>(s)] < v))
                return false;
        }
        return true;
    };
    const int slots = last_fixed ? L - 1 : L;
    const int limit = last_fixed ? m - 1 : m;
    std::function<bool(int, int)> go = [&](int slot, int from) {
        if (slot == slots) return true;
        for (int pos = from; pos <= limit - (slots - slot); ++pos) {
            int v = text[static_cast<std::size_t>(pos)];
            if (!compatible(slot, v)) continue;
            vals[static_cast<std::size_t>(slot)] = v;
            set[static_cast<std::size_t>(slot)] = true;
            if (go(slot + 1, pos + 1)) return true;
            set[static_cast<std::size_t>(slot)] = false;
        }
        return false;
    };
    return go(0, 0);
}

}  // namespace

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
    if (pattern.size() < 1) throw std::invalid_argument("empty pattern");
    return match_pattern(p.values(), pattern.values(), false);
}

namespace {

// Incremental avoidance state for the 321 fast path: appending x completes a
// 321 iff some earlier value with a still-earlier larger value exceeds x.
struct State321 {
    int max_seen = 0;
    int max_with_larger_before = 0;

    bool append_ok(int x) const { return max_with_larger_before < x; }
    std::pair<int, int> push(int x) {
        auto saved = std::make_pair(max_seen, max_with_larger_before);
        if (x < max_seen) max_with_larger_before = std::max(max_with_larger_before, x);
        max_seen = std::max(max_seen, x);
        return saved;
    }
    void pop(std::pair<int, int> saved) {
        max_seen = saved.first;
        max_with_larger_before = saved.second;
    }
};

}  // namespace

void for_each_avoider(int n, const Permutation& pattern,
                      const std::function<void(const Permutation&)>& visit) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const auto& pat = pattern.values();
    const bool fast321 = (pat == std::vector<int>{3, 2, 1});

    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    State321 st;

    std::function<void()> go = [&]() {
        if (static_cast<int>(prefix.size()) == n) {
            visit(Permutation(prefix));
            return;
        }
        for (int x = 1; x <= n; ++x) {
            if (used[static_cast<std::size_t>(x)]) continue;
            if (fast321) {
                if (!st.append_ok(x)) continue;
                auto saved = st.push(x);
                used[static_cast<std::size_t>(x)] = true;
                prefix.push_back(x);
                go();
                prefix.pop_back();
                used[static_cast<std::size_t>(x)] = false;
                st.pop(saved);
            } else {
                prefix.push_back(x);
                if (match_pattern(prefix, pat, true)) {
                    prefix.pop_back();
                    continue;
                }
                used[static_cast<std::size_t>(x)] = true;
                go();
                used[static_cast<std::size_t>(x)] = false;
                prefix.pop_back();
            }
        }
    };
    go();
}

std::vector<Permutation> enumerate_avoiders(int n, const Permutation& pattern) {
    std::vector<Permutation> out;
    for_each_avoider(n, pattern, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

Permutation transform(const Permutation& p, Transform which) {
    std::vector<int> v = p.values();
    int n = p.size();
    if (which == Transform::Complement || which == Transform::ReverseComplement)
        for (int& x : v) x = n + 1 - x;
    if (which == Transform::Reverse || which == Transform::ReverseComplement)
        std::reverse(v.begin(), v.end());
    return Permutation(std::move(v));
}

void BivariatePolynomial::set_term(int i, QPolynomial p) {
    if (p.is_zero())
        terms_.erase(i);
    else
        terms_[i] = std::move(p);
}

QPolynomial BivariatePolynomial::term(int i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? QPolynomial() : it->second;
}

std::string BivariatePolynomial::text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [i, poly] : terms_) {
        if (!out.empty()) out += " + ";
        if (i == 0)
            out += poly.text();
        else if (i == 1)
            out += "(" + poly.text() + ")*t";
        else
            out += "(" + poly.text() + ")*t^" + std::to_string(i);
    }
    return out;
}

BivariatePolynomial distribution(int n, const Permutation& pattern) {
    long max_maj = static_cast<long>(n) * (n - 1) / 2;
    std::vector<std::vector<Int>> buckets(static_cast<std::size_t>(n),
                                          std::vector<Int>(static_cast<std::size_t>(max_maj) + 1,
                                                           Int(0)));
    for_each_avoider(n, pattern, [&](const Permutation& p) {
        PermStats st = statistics(p);
        ++buckets[static_cast<std::size_t>(st.des)][static_cast<std::size_t>(st.maj)];
    });
    BivariatePolynomial out;
    for (int i = 0; i < n; ++i)
        out.set_term(i, QPolynomial(0, buckets[static_cast<std::size_t>(i)]));
    return out;
}

}  // namespace majdes
