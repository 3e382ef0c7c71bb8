#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "swlab/measures.hpp"

using namespace swlab;

TEST_CASE("proper tableaux enumeration") {
    // k = 1: the minimal-level convention keeps [1] proper; both level-3
    // tableaux of shape (2,1) end in a nice two-cell step, so none is proper
    auto p1 = enumerate_proper_tableaux(1, 1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0] == StandardTableau{1});
    CHECK(enumerate_proper_tableaux(1, 3).empty());
    auto p5 = enumerate_proper_tableaux(1, 5);
    REQUIRE(p5.size() == 1);
    CHECK(p5[0] == StandardTableau{1, 1, 1, 2, 2});
    for (const auto& t : enumerate_proper_tableaux(1, 7)) {
        CHECK(t.shape().diff() == 1);
        CHECK(t.word[5] == t.word[6]);
    }
    CHECK_THROWS_AS(enumerate_proper_tableaux(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_proper_tableaux(1, 0), std::invalid_argument);

    // k = 0: square shapes, last two entries in the same row
    for (const auto& t : enumerate_proper_tableaux(0, 6)) {
        CHECK(t.shape().row1 == t.shape().row2);
        CHECK(t.word[4] == t.word[5]);
    }
}

TEST_CASE("cylinder probabilities are a probability measure") {
    StandardTableau start{1};
    for (double alpha : {0.0, 0.25, 0.8, 1.0}) {
        auto m = WalkMeasure::stationaryWalk(start, alpha);
        for (int depth = 1; depth <= 4; ++depth) {
            // enumerate all pattern sequences of the given depth
            double total = 0.0;
            for (int mask = 0; mask < (1 << depth); ++mask) {
                std::vector<ExtensionPattern> pat;
                for (int i = 0; i < depth; ++i)
                    pat.push_back(((mask >> i) & 1) ? ExtensionPattern::P12()
                                                    : ExtensionPattern::P21());
                total += cylinder_probability(m, pat);
            }
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("cylinder masses") {
    auto m = WalkMeasure::stationaryWalk(StandardTableau{1}, 0.3);
    const double a = 0.3, b = 0.7;

    // mass of a walk-reachable tableau is the product of its step weights
    CHECK(cylinder_mass(1, m, StandardTableau{1, 2, 1}) == doctest::Approx(a).epsilon(1e-14));
    CHECK(cylinder_mass(1, m, StandardTableau{1, 1, 2}) == doctest::Approx(b).epsilon(1e-14));
    CHECK(cylinder_mass(1, m, StandardTableau{1, 2, 1, 2, 1}) ==
          doctest::Approx(a * a).epsilon(1e-14));

    // a same-row block cuts the walk: mass restarts at the proper prefix
    CHECK(cylinder_mass(1, m, StandardTableau{1, 1, 1, 2, 2}) == doctest::Approx(1.0));
    CHECK(cylinder_mass(1, m, StandardTableau{1, 1, 1, 2, 2, 2, 1}) ==
          doctest::Approx(a).epsilon(1e-14));

    // diagonal with the wrong shape difference carries no mu^(k) mass
    CHECK(cylinder_mass(1, m, StandardTableau{1, 1, 2, 2}) == 0.0);
}

TEST_CASE("sampler is deterministic and matches the weights") {
    StandardTableau start{1};
    auto m = WalkMeasure::stationaryWalk(start, 0.35);
    auto a = sample_path(m, 20, 123);
    auto b = sample_path(m, 20, 123);
    CHECK(a == b);
    CHECK(a.size() == 20);
    auto c = sample_path(m, 20, 124);
    CHECK(a != c);

    // degenerate weights pin the path entirely
    auto all21 = sample_path(WalkMeasure::stationaryWalk(start, 1.0), 10, 9);
    for (const auto& e : all21) CHECK(e.isP21());
    auto all12 = sample_path(WalkMeasure::stationaryWalk(start, 0.0), 10, 9);
    for (const auto& e : all12) CHECK(e.isP12());

    // first-step frequency approaches alpha (binomial, 1e5 draws)
    const int trials = 100000;
    int hits = 0;
    for (int i = 0; i < trials; ++i)
        if (sample_path(m, 1, 1000 + i)[0].isP21()) ++hits;
    double freq = static_cast<double>(hits) / trials;
    CHECK(std::abs(freq - 0.35) <= 4.0 * std::sqrt(0.35 * 0.65 / trials));
}

TEST_CASE("chi-square goodness of fit for depth-3 cylinders") {
    // 8 pattern sequences, df = 7, significance 1e-3 threshold 24.3219
    StandardTableau start{1};
    auto m = WalkMeasure::stationaryWalk(start, 0.4);
    const int samples = 100000;
    std::map<std::vector<bool>, int> counts;
    for (int i = 0; i < samples; ++i) {
        auto path = sample_path(m, 3, 555000 + i);
        std::vector<bool> key;
        for (const auto& e : path) key.push_back(e.isP21());
        ++counts[key];
    }
    double chi2 = 0.0;
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<ExtensionPattern> pat;
        std::vector<bool> key;
        for (int i = 0; i < 3; ++i) {
            bool p21 = (mask >> i) & 1;
            pat.push_back(p21 ? ExtensionPattern::P21() : ExtensionPattern::P12());
            key.push_back(p21);
        }
        double expected = samples * cylinder_probability(m, pat);
        double observed = counts.count(key) ? counts[key] : 0.0;
        chi2 += (observed - expected) * (observed - expected) / expected;
    }
    CHECK(chi2 <= 24.3219);
}

TEST_CASE("phi_t vectors form an isometry under the walk measure") {
    // k = 1, p = -1/2 embedding; Gram matrix of {phi_t : t proper, level <= 7}
    // at depth (9 - 1)/2 is the identity
    const double p = -0.5;
    auto spec = EmbeddingSpec::stationaryPair(1, p);
    auto m = WalkMeasure::fromSpec(StandardTableau{1}, spec);
    CHECK(m.weightAt(0).first == doctest::Approx(p * p).epsilon(1e-14));
    CHECK(m.weightAt(0).second == doctest::Approx(1.0 - p * p).epsilon(1e-14));

    std::vector<StandardTableau> props;
    for (int level = 1; level <= 7; level += 2)
        for (const auto& t : enumerate_proper_tableaux(1, level)) props.push_back(t);

    const int depth = 9;
    std::vector<CylinderFunction> fs;
    for (const auto& t : props) fs.push_back(phi_t_vector(1, spec, t, depth));
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i; j < fs.size(); ++j) {
            double g = cylinder_inner(1, m, fs[i], fs[j]);
            CHECK(g == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
        }
}

TEST_CASE("phi_t follows the Theorem-2 recursion") {
    const double p = 0.6;
    auto spec = EmbeddingSpec::stationaryPair(1, p);
    auto m = WalkMeasure::fromSpec(StandardTableau{1}, spec);

    // proper t: phi_t is the plain indicator of its cylinder
    auto f5 = phi_t_vector(1, spec, StandardTableau{1, 1, 1, 2, 2}, 5);
    REQUIRE(f5.coeffs.size() == 1);
    CHECK(f5.coeffs.begin()->second == doctest::Approx(1.0));

    // non-proper t at one step above its proper ancestor: coefficient 1/p on
    // the P21 branch, and the measure weight alpha = p^2 restores unit norm
    StandardTableau t{1, 2, 1};
    auto f = phi_t_vector(1, spec, t, 7);
    for (const auto& [word, val] : f.coeffs) CHECK(val == doctest::Approx(1.0 / p));
    double total = 0.0;
    for (const auto& [word, val] : f.coeffs)
        total += cylinder_mass(1, m, StandardTableau{RowWord(word)});
    CHECK(total == doctest::Approx(p * p).epsilon(1e-12));
    CHECK(cylinder_inner(1, m, f, f) == doctest::Approx(1.0).epsilon(1e-12));

    // zero parameter on a required branch is rejected
    auto degenerate = EmbeddingSpec::stationaryPair(1, 0.0);
    CHECK_THROWS_AS(phi_t_vector(1, degenerate, t, 7), std::invalid_argument);
}
