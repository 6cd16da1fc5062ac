#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "majdes/qpoly.hpp"

namespace majdes {

/// A permutation of 1..n. Positions are 1-based everywhere in the interface.
class Permutation {
public:
    explicit Permutation(std::vector<int> values);
    static Permutation identity(int n);
    static Permutation parse(const std::string& s);

    int size() const { return static_cast<int>(values_.size()); }
    int value_at(int pos) const { return values_[static_cast<std::size_t>(pos - 1)]; }
    const std::vector<int>& values() const { return values_; }

    /// "31425" for n <= 9, comma-separated otherwise.
    std::string text() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> values_;
};

struct PermStats {
    std::vector<int> descent_set;  // sorted positions i with the i-th entry above the next
    int des = 0;
    long maj = 0;
};

PermStats statistics(const Permutation& p);

/// True iff some subsequence of p is order-isomorphic to pattern.
bool contains_pattern(const Permutation& p, const Permutation& pattern);

/// Visits S_n(pattern) in lexicographic order of values. The generator prunes
/// prefixes that already contain the pattern, so it stays proportional to the
/// avoidance class rather than to n!.
void for_each_avoider(int n, const Permutation& pattern,
                      const std::function<void(const Permutation&)>& visit);

std::vector<Permutation> enumerate_avoiders(int n, const Permutation& pattern);

enum class Transform { Reverse, Complement, ReverseComplement };

Permutation transform(const Permutation& p, Transform which);

/// Polynomial in q and t: terms[i] is the q-polynomial multiplying t^i.
class BivariatePolynomial {
public:
    BivariatePolynomial() = default;

    void set_term(int i, QPolynomial p);  // zero polynomials are dropped
    QPolynomial term(int i) const;        // zero when absent
    const std::map<int, QPolynomial>& terms() const { return terms_; }
    int max_descents() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    /// "1 + (4*q + 9*q^2 + 9*q^3 + 4*q^4)*t + (5*q^4 + 5*q^5 + 5*q^6)*t^2"
    std::string text() const;

    bool operator==(const BivariatePolynomial&) const = default;

private:
    std::map<int, QPolynomial> terms_;
};

/// Joint (maj, des) distribution over S_n(pattern).
BivariatePolynomial distribution(int n, const Permutation& pattern);

}  // namespace majdes
