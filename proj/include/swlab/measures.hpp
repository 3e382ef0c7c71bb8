#pragma once

// Spectral measures of Schur-Weyl representations: proper tableaux, exact
// cylinder probabilities of the Bernoulli walk on the Young graph, a seeded
// sampler, and the finite-depth phi_t isometry.

#include <cstdint>
#include <map>
#include <vector>

#include "swlab/diagrams.hpp"
#include "swlab/embeddings.hpp"

namespace swlab {

struct WalkMeasure {
    StandardTableau start;                           // proper, shape difference k
    std::vector<std::pair<double, double>> weights;  // (alpha_j, beta_j); stationary: one pair
    bool stationary = true;

    static WalkMeasure stationaryWalk(const StandardTableau& start, double alpha);
    static WalkMeasure fromSpec(const StandardTableau& start, const EmbeddingSpec& spec);
    // step index j = (level - k)/2 counted from the minimal level
    std::pair<double, double> weightAt(int j) const;
    int k() const { return start.shape().diff(); }
};

// product over steps of alpha_j (P21) or beta_j (P12)
double cylinder_probability(const WalkMeasure& m, const std::vector<ExtensionPattern>& patterns);

// deterministic given seed; one splitmix64 stream per call
std::vector<ExtensionPattern> sample_path(const WalkMeasure& m, int depth, std::uint64_t seed);

std::vector<StandardTableau> enumerate_proper_tableaux(int k, int level);

struct CylinderFunction {
    int depth = 0;
    std::map<RowWord, double> coeffs;  // level-`depth` tableaux -> value
};

// Theorem-2 recursion: phi_t = (prod of 1/p or 1/q down to the proper
// ancestor) * indicator of passing through t, represented at `depth`
CylinderFunction phi_t_vector(int k, const EmbeddingSpec& spec, const StandardTableau& t,
                              int depth);

// mu^(k) mass of the cylinder of a depth-level tableau: walk probability
// from its highest proper prefix (0 if that prefix has a different k)
double cylinder_mass(int k, const WalkMeasure& m, const StandardTableau& s);

// measure-weighted inner product sum_s f(s) g(s) mass(s)
double cylinder_inner(int k, const WalkMeasure& m, const CylinderFunction& f,
                      const CylinderFunction& g);

}  // namespace swlab
