#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "majdes/tableaux.hpp"
#include "support.hpp"

using namespace majdes;

TEST_CASE("shapes") {
    CHECK(Shape::parse("4,2,2,1").size() == 9);
    CHECK(Shape({3, 2}).b_statistic() == 2);
    CHECK(Shape({4, 2, 2, 1}).b_statistic() == 0 * 4 + 1 * 2 + 2 * 2 + 3 * 1);
    CHECK_THROWS_AS(Shape({2, 3}), InvalidShape);
    CHECK_THROWS_AS(Shape({2, 0}), InvalidShape);
    CHECK(Shape({4, 2, 2, 1}).text() == "4,2,2,1");
}

TEST_CASE("tableau validation and text") {
    StandardYoungTableau t = StandardYoungTableau::parse("1,2,4,9/3,6/5,7/8");
    CHECK(t.shape() == Shape({4, 2, 2, 1}));
    CHECK(t.text() == "1,2,4,9/3,6/5,7/8");
    CHECK(t.row_of(5) == 3);
    CHECK_THROWS_AS(StandardYoungTableau({{1, 3}, {2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(StandardYoungTableau({{2, 3}, {1, 4}}), std::invalid_argument);  // column
    CHECK_FALSE(StandardYoungTableau::valid({{1}, {2, 3}}));
}

TEST_CASE("tableau enumeration") {
    CHECK(enumerate_syt(Shape({6})).size() == 1);
    auto two_two = enumerate_syt(Shape({2, 2}));
    REQUIRE(two_two.size() == 2);
    CHECK(two_two[0] == StandardYoungTableau({{1, 2}, {3, 4}}));
    CHECK(two_two[1] == StandardYoungTableau({{1, 3}, {2, 4}}));
    CHECK(enumerate_syt(Shape({4, 2, 2, 1})).size() == 216);
}

TEST_CASE("enumeration count equals the hook-length count, all shapes of n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& parts : testing::all_partitions(n)) {
            Shape shape(parts);
            long count = 0;
            for_each_syt(shape, [&](const StandardYoungTableau&) { ++count; });
            CHECK(Int(count) == frt_count(shape));
        }
    }
}

TEST_CASE("tableau statistics") {
    CHECK(tableau_statistics(StandardYoungTableau({{1, 2, 3, 4}})).descent_set.empty());

    PermStats st = tableau_statistics(StandardYoungTableau({{1, 2, 4}, {3, 5}}));
    CHECK(st.descent_set == std::vector<int>{2, 4});
    CHECK(st.maj == 6);

    StandardYoungTableau paper =
        StandardYoungTableau::parse("1,2,4,7,8,9,10,11,12,14/3,5,6,13");
    PermStats pst = tableau_statistics(paper);
    CHECK(pst.descent_set == std::vector<int>{2, 4, 12});
    CHECK(pst.maj == 18);
}

TEST_CASE("hook lengths") {
    CHECK(hook_lengths(Shape({4, 2, 2, 1})) ==
          std::vector<std::vector<int>>{{7, 5, 2, 1}, {4, 2}, {3, 1}, {1}});
    CHECK(hook_lengths(Shape({5})) == std::vector<std::vector<int>>{{5, 4, 3, 2, 1}});
    CHECK(hook_lengths(Shape({1, 1, 1})) == std::vector<std::vector<int>>{{3}, {2}, {1}});
}

TEST_CASE("hook-length counts") {
    CHECK(frt_count(Shape({4, 2, 2, 1})) == 216);
    CHECK(frt_count(Shape({3, 3})) == 5);
    CHECK(frt_count(Shape({9})) == 1);
}

TEST_CASE("two-row multiplicities") {
    CHECK(frt_multiplicity(5, 2) == 5);
    for (int k = 0; k <= 6; ++k) CHECK(frt_multiplicity(2 * k, k) == catalan_number(k));
    CHECK(frt_multiplicity(7, 0) == 1);
    CHECK_THROWS_AS(frt_multiplicity(5, 3), InvalidShape);
    for (int n = 1; n <= 20; ++n) {
        for (int k = 0; 2 * k <= n; ++k) {
            std::vector<int> parts{n - k};
            if (k > 0) parts.push_back(k);
            CHECK(frt_multiplicity(n, k) == frt_count(Shape(parts)));
        }
    }
}

TEST_CASE("q-hook maj generating function against enumeration") {
    CHECK(stanley_maj_gf(Shape({7})) == QPolynomial::one());
    for (int n = 1; n <= 10; ++n) {
        for (const auto& parts : testing::all_partitions(n)) {
            Shape shape(parts);
            std::map<long, Int> maj_counts;
            for_each_syt(shape, [&](const StandardYoungTableau& t) {
                ++maj_counts[tableau_statistics(t).maj];
            });
            QPolynomial oracle;
            for (const auto& [maj, c] : maj_counts)
                oracle = oracle + QPolynomial::monomial(c, maj);
            QPolynomial hook = stanley_maj_gf(shape);
            CHECK(hook == oracle);
            CHECK(hook.value_at_one() == frt_count(shape));
            QPolynomial by_descents;
            for (const auto& [i, poly] : maj_distribution_by_descents(shape))
                by_descents = by_descents + poly;
            CHECK(by_descents == hook);
        }
    }
}

TEST_CASE("maj distribution by descent count, named examples") {
    auto d32 = maj_distribution_by_descents(Shape({3, 2}));
    CHECK(d32.at(1) == QPolynomial::power_sum(2, 3));
    CHECK(d32.at(2) == QPolynomial::power_sum(4, 6));
    auto d211 = maj_distribution_by_descents(Shape({2, 1, 1}));
    CHECK(d211.at(2) == QPolynomial::power_sum(3, 5));
}

TEST_CASE("rsk basics") {
    auto [p, q] = rsk(Permutation::identity(5));
    CHECK(p == StandardYoungTableau({{1, 2, 3, 4, 5}}));
    CHECK(q == p);
}

TEST_CASE("rsk is injective and shape-sharing on S_n, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        std::set<std::string> seen;
        do {
            auto [p, q] = rsk(Permutation(v));
            CHECK(p.shape() == q.shape());
            CHECK(seen.insert(p.text() + "|" + q.text()).second);
        } while (std::next_permutation(v.begin(), v.end()));
    }
}

TEST_CASE("recording tableau descents equal permutation descents, S_6") {
    std::vector<int> v{1, 2, 3, 4, 5, 6};
    do {
        Permutation sigma(v);
        auto [p, q] = rsk(sigma);
        CHECK(statistics(sigma).descent_set == tableau_statistics(q).descent_set);
    } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("lattice paths") {
    StandardYoungTableau paper =
        StandardYoungTableau::parse("1,2,4,7,8,9,10,11,12,14/3,5,6,13");
    LatticePath path = syt_to_lattice_path(paper);
    CHECK(path.peaks() == std::vector<int>{2, 4, 12});
    CHECK(path.east_count() == 10);
    CHECK(path.south_count() == 4);
    CHECK(path.text() == "EESESSEEEEEESE peaks=2,4,12");
    CHECK(lattice_path_to_syt(path) == paper);

    LatticePath flat = syt_to_lattice_path(StandardYoungTableau({{1, 2, 3}}));
    CHECK(flat.peaks().empty());
    CHECK(flat.steps() == "EEE");

    CHECK_THROWS_AS(syt_to_lattice_path(StandardYoungTableau({{1, 2}, {3}, {4}})), TooManyRows);
    CHECK_THROWS_AS(LatticePath("SE", {}), std::invalid_argument);
    CHECK_THROWS_AS(LatticePath("ES", {}), std::invalid_argument);  // peaks inconsistent
}

TEST_CASE("path-tableau roundtrip over the whole 6x3 box") {
    std::string steps;
    long visited = 0;
    auto go = [&](auto&& self, int east, int south) -> void {
        if (east == 6 && south == 3) {
            LatticePath path = LatticePath::from_steps(steps);
            CHECK(syt_to_lattice_path(lattice_path_to_syt(path)) == path);
            ++visited;
            return;
        }
        if (east < 6) {
            steps.push_back('E');
            self(self, east + 1, south);
            steps.pop_back();
        }
        if (south < 3 && south < east) {
            steps.push_back('S');
            self(self, east, south + 1);
            steps.pop_back();
        }
    };
    go(go, 0, 0);
    CHECK(visited == frt_count(Shape({6, 3})).get_si());
}

TEST_CASE("peak sums match tableau major indices on two-row shapes, n <= 12") {
    for (int n = 1; n <= 12; ++n) {
        for (int k = 0; 2 * k <= n; ++k) {
            std::vector<int> parts{n - k};
            if (k > 0) parts.push_back(k);
            std::multiset<long> from_paths, from_stats;
            for_each_syt(Shape(parts), [&](const StandardYoungTableau& t) {
                LatticePath path = syt_to_lattice_path(t);
                long peak_sum = 0;
                for (int peak : path.peaks()) peak_sum += peak;
                from_paths.insert(peak_sum);
                from_stats.insert(tableau_statistics(t).maj);
            });
            CHECK(from_paths == from_stats);
        }
    }
}
