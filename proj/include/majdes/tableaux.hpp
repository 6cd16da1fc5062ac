#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "majdes/perm.hpp"
#include "majdes/qpoly.hpp"

namespace majdes {

struct InvalidShape : std::invalid_argument {
    explicit InvalidShape(const std::string& what) : std::invalid_argument(what) {}
};
struct TooManyRows : std::domain_error {
    TooManyRows() : std::domain_error("tableau has more than two rows") {}
};

/// Integer partition, parts nonincreasing and positive.
class Shape {
public:
    explicit Shape(std::vector<int> parts);
    static Shape parse(const std::string& s);  // "4,2,2,1"

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int size() const;
    long b_statistic() const;  // sum of (i-1)*lambda_i over rows i = 1..j

    std::string text() const;
    bool operator==(const Shape&) const = default;
    auto operator<=>(const Shape&) const = default;

private:
    std::vector<int> parts_;
};

class StandardYoungTableau {
public:
    explicit StandardYoungTableau(std::vector<std::vector<int>> rows);
    static StandardYoungTableau parse(const std::string& s);  // "1,2,4,9/3,6/5,7/8"
    static bool valid(const std::vector<std::vector<int>>& rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Shape shape() const;
    int size() const { return static_cast<int>(row_of_.size()) - 1; }
    int row_of(int entry) const { return row_of_[static_cast<std::size_t>(entry)]; }

    std::string text() const;
    bool operator==(const StandardYoungTableau& o) const { return rows_ == o.rows_; }
    bool operator<(const StandardYoungTableau& o) const { return rows_ < o.rows_; }

private:
    std::vector<std::vector<int>> rows_;
    std::vector<int> row_of_;  // 1-based entry -> 1-based row index
};

/// Visits every SYT of the shape once, ordered lexicographically by the word
/// of row choices for entries 1..n.
void for_each_syt(const Shape& shape,
                  const std::function<void(const StandardYoungTableau&)>& visit);

std::vector<StandardYoungTableau> enumerate_syt(const Shape& shape);

/// Descents of a tableau: entries i lying in a strictly higher row than i+1.
PermStats tableau_statistics(const StandardYoungTableau& t);

std::vector<std::vector<int>> hook_lengths(const Shape& shape);

/// Number of SYT of the shape, by the hook-length formula.
Int frt_count(const Shape& shape);

/// binom(n,k)*(n-2k+1)/(n-k+1): permutations sharing a fixed two-row recording
/// tableau of shape (n-k,k). Throws InvalidShape unless 0 <= k <= n/2.
Int frt_multiplicity(int n, int k);

/// Major-index generating function over SYT(shape) via the q-hook formula
/// q^b(shape) (q)_n / prod(1 - q^h); every division is checked exact.
QPolynomial stanley_maj_gf(const Shape& shape);

/// Brute-force bucketing of SYT(shape) by descent count: the independent
/// oracle against which the closed forms are checked.
std::map<int, QPolynomial> maj_distribution_by_descents(const Shape& shape);

/// Row-insertion Robinson-Schensted: (insertion tableau, recording tableau).
std::pair<StandardYoungTableau, StandardYoungTableau> rsk(const Permutation& p);

/// Monotone path of East/South steps in an (n-k) x k box, never dipping below
/// the diagonal; peaks are the East-to-South corner positions.
class LatticePath {
public:
    LatticePath(std::string steps, std::vector<int> peaks);  // validates consistency
    static LatticePath from_steps(std::string steps);

    const std::string& steps() const { return steps_; }
    const std::vector<int>& peaks() const { return peaks_; }
    int east_count() const;
    int south_count() const;

    std::string text() const;  // "EESEE... peaks=2,4,12"
    bool operator==(const LatticePath&) const = default;

private:
    std::string steps_;
    std::vector<int> peaks_;
};

LatticePath syt_to_lattice_path(const StandardYoungTableau& t);
StandardYoungTableau lattice_path_to_syt(const LatticePath& path);

}  // namespace majdes
