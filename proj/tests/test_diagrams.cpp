#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swlab/diagrams.hpp"

using namespace swlab;

namespace {

// independent oracle: count ballot words of a given shape by brute force
// over all {1,2}-sequences
int brute_force_tableau_count(int r1, int r2) {
    int n = r1 + r2, count = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        int c1 = 0, c2 = 0;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            ((mask >> i) & 1) ? ++c2 : ++c1;
            if (c2 > c1) ok = false;
        }
        if (ok && c1 == r1 && c2 == r2) ++count;
    }
    return count;
}

std::vector<StandardTableau> all_tableaux_at_level(int n) {
    std::vector<StandardTableau> out;
    for (const auto& d : enumerate_two_row_diagrams(n))
        for (auto& t : enumerate_tableaux(d)) out.push_back(std::move(t));
    return out;
}

}  // namespace

TEST_CASE("two-row diagram enumeration") {
    auto d3 = enumerate_two_row_diagrams(3);
    REQUIRE(d3.size() == 2);
    CHECK(d3[0] == YoungDiagram{3, 0});
    CHECK(d3[1] == YoungDiagram{2, 1});

    auto d4 = enumerate_two_row_diagrams(4);
    REQUIRE(d4.size() == 3);
    CHECK(d4[0] == YoungDiagram{4, 0});
    CHECK(d4[1] == YoungDiagram{3, 1});
    CHECK(d4[2] == YoungDiagram{2, 2});

    CHECK(enumerate_two_row_diagrams(10).size() == 6);
    CHECK(enumerate_two_row_diagrams(0).size() == 1);
}

TEST_CASE("tableau enumeration matches the ballot oracle") {
    auto t21 = enumerate_tableaux({2, 1});
    REQUIRE(t21.size() == 2);
    CHECK(t21[0] == StandardTableau{1, 1, 2});
    CHECK(t21[1] == StandardTableau{1, 2, 1});

    CHECK(enumerate_tableaux({1, 0}) == std::vector<StandardTableau>{StandardTableau{1}});
    CHECK(enumerate_tableaux({3, 3}).size() == 5);  // Catalan C_3

    for (int n = 0; n <= 12; ++n)
        for (const auto& d : enumerate_two_row_diagrams(n))
            CHECK(static_cast<int>(enumerate_tableaux(d).size()) ==
                  brute_force_tableau_count(d.row1, d.row2));
}

TEST_CASE("irrep dimensions") {
    CHECK(dim_irrep({2, 1}) == 2);
    CHECK(dim_irrep({7, 0}) == 1);
    CHECK(dim_irrep({6, 6}) == 132);  // Catalan C_6

    // Catalan numbers on the square diagonal
    std::int64_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012};
    for (int n = 1; n <= 12; ++n) CHECK(dim_irrep({n, n}) == catalan[n]);

    for (int n = 0; n <= 16; ++n)
        for (const auto& d : enumerate_two_row_diagrams(n))
            CHECK(dim_irrep(d) == static_cast<std::int64_t>(enumerate_tableaux(d).size()));
}

TEST_CASE("dimension side of the tensor decomposition") {
    for (int n = 1; n <= 24; ++n) {
        std::int64_t total = 0;
        for (const auto& d : enumerate_two_row_diagrams(n))
            total += dim_irrep(d) * (d.diff() + 1);
        CHECK(total == (std::int64_t{1} << n));
    }
}

TEST_CASE("axial distances") {
    CHECK(axial_distance(StandardTableau{1, 1, 2}, 2) == -2);
    CHECK(axial_distance(StandardTableau{1, 1}, 1) == 1);
    CHECK(axial_distance(StandardTableau{1, 2}, 1) == -1);
    CHECK_THROWS_AS(axial_distance(StandardTableau{1, 1}, 2), std::out_of_range);

    // |r| >= 1, with |r| = 1 only for adjacent cells
    for (int n = 2; n <= 10; ++n)
        for (const auto& t : all_tableaux_at_level(n))
            for (int i = 1; i < n; ++i) {
                int r = axial_distance(t, i);
                CHECK(std::abs(r) >= 1);
            }
}

TEST_CASE("nice pairs") {
    CHECK(is_nice({2, 1}, {3, 2}));
    CHECK_FALSE(is_nice({2, 1}, {4, 1}));
    CHECK(is_nice({2, 2}, {3, 3}));
    CHECK(paths_between({2, 2}, {3, 3}).size() == 1);
    CHECK_THROWS_AS(is_nice({2, 1}, {5, 2}), std::invalid_argument);
}

TEST_CASE("proper tableaux") {
    CHECK(is_proper(StandardTableau{1, 1, 1, 2, 2}));
    CHECK_FALSE(is_proper(StandardTableau{1, 1, 2}));
    CHECK(is_proper(StandardTableau{1}));
    CHECK(is_proper(StandardTableau{1, 2}));  // minimal-level convention

    // unique proper tableau at level 5 with k = 1
    std::vector<StandardTableau> proper5;
    for (const auto& t : all_tableaux_at_level(5))
        if (t.shape().diff() == 1 && is_proper(t)) proper5.push_back(t);
    REQUIRE(proper5.size() == 1);
    CHECK(proper5[0] == StandardTableau{1, 1, 1, 2, 2});

    // not proper whenever the final two-cell step is nice with distinct rows
    for (int n = 3; n <= 12; ++n)
        for (const auto& t : all_tableaux_at_level(n)) {
            auto base = t.prefix(n - 2);
            if (is_nice(base.shape(), t.shape()) && t.word[n - 1] != t.word[n - 2])
                CHECK_FALSE(is_proper(t));
        }
}

TEST_CASE("paths between diagrams") {
    auto p = paths_between({2, 1}, {3, 2});
    REQUIRE(p.size() == 2);
    CHECK(p[0] == ExtensionPattern::P12());
    CHECK(p[1] == ExtensionPattern::P21());

    CHECK(paths_between({1, 0}, {2, 1}).size() == 2);
    CHECK_THROWS_AS(paths_between({3, 1}, {2, 2}), std::invalid_argument);

    // nice pair with distinct row lengths: exactly {P21, P12}
    for (int n = 1; n <= 10; ++n)
        for (const auto& d : enumerate_two_row_diagrams(n)) {
            if (d.row1 == d.row2) continue;
            auto paths = paths_between(d, {d.row1 + 1, d.row2 + 1});
            REQUIRE(paths.size() == 2);
            CHECK((paths[0].isP12() || paths[0].isP21()));
            CHECK((paths[1].isP12() || paths[1].isP21()));
            CHECK(paths[0] != paths[1]);
        }

    // path count equals enumerated extension count for skew pairs
    for (const auto& lam : enumerate_two_row_diagrams(3))
        for (const auto& mu : enumerate_two_row_diagrams(7)) {
            if (!mu.contains(lam)) continue;
            int direct = 0;
            for (const auto& t : enumerate_tableaux(mu)) {
                StandardTableau head = t.prefix(3);
                if (head.shape() == lam) ++direct;
            }
            // every pattern applies to every head tableau
            auto paths = paths_between(lam, mu);
            auto heads = enumerate_tableaux(lam);
            CHECK(static_cast<int>(paths.size() * heads.size()) == direct);
        }
}

TEST_CASE("prefixes and extensions") {
    StandardTableau t{1, 2, 1, 1, 2};
    CHECK(t.prefix(3) == StandardTableau{1, 2, 1});
    CHECK(t.shape() == YoungDiagram{3, 2});
    CHECK(extend(t.prefix(3), ExtensionPattern{{1, 2}}) == StandardTableau{1, 2, 1, 1, 2});
    CHECK_THROWS_AS(extend(StandardTableau{1}, ExtensionPattern{{2, 2}}),
                    std::invalid_argument);
}
