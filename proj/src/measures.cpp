#include "swlab/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace swlab {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
    return double(splitmix64(state) >> 11) / 9007199254740992.0;
}

}  // namespace

WalkMeasure WalkMeasure::stationaryWalk(const StandardTableau& start, double alpha) {
    if (!is_proper(start)) throw std::invalid_argument("walk must start at a proper tableau");
    if (alpha < 0 || alpha > 1) throw std::invalid_argument("alpha must lie in [0,1]");
    return {start, {{alpha, 1.0 - alpha}}, true};
}

WalkMeasure WalkMeasure::fromSpec(const StandardTableau& start, const EmbeddingSpec& spec) {
    if (!is_proper(start)) throw std::invalid_argument("walk must start at a proper tableau");
    WalkMeasure m;
    m.start = start;
    m.stationary = spec.stationary;
    for (const auto& h : spec.params) m.weights.push_back({h.p * h.p, h.q * h.q});
    if (m.weights.empty()) throw std::invalid_argument("spec carries no parameters");
    return m;
}

std::pair<double, double> WalkMeasure::weightAt(int j) const {
    if (stationary) return weights.front();
    if (j < 0 || j >= static_cast<int>(weights.size()))
        throw std::out_of_range("walk step index outside weight sequence");
    return weights[j];
}

double cylinder_probability(const WalkMeasure& m, const std::vector<ExtensionPattern>& patterns) {
    double prob = 1.0;
    int level = m.start.level();
    int kk = m.k();
    for (const auto& e : patterns) {
        if (!e.isP21() && !e.isP12())
            throw std::invalid_argument("walk steps must be two-cell nice patterns");
        auto [alpha, beta] = m.weightAt((level - kk) / 2);
        prob *= e.isP21() ? alpha : beta;
        level += 2;
    }
    return prob;
}

std::vector<ExtensionPattern> sample_path(const WalkMeasure& m, int depth, std::uint64_t seed) {
    if (depth < 0) throw std::invalid_argument("depth must be non-negative");
    std::uint64_t st = seed;
    std::vector<ExtensionPattern> out;
    int level = m.start.level();
    int kk = m.k();
    StandardTableau cur = m.start;
    for (int step = 0; step < depth; ++step) {
        auto [alpha, beta] = m.weightAt((level - kk) / 2);
        bool p21 = uniform01(st) < alpha;
        if (p21 && cur.shape().row1 == cur.shape().row2) p21 = false;  // alpha = 0 there
        auto e = p21 ? ExtensionPattern::P21() : ExtensionPattern::P12();
        cur = extend(cur, e);
        out.push_back(e);
        level += 2;
    }
    return out;
}

std::vector<StandardTableau> enumerate_proper_tableaux(int k, int level) {
    if (k < 0 || level < k) throw std::invalid_argument("level must be at least k");
    if ((level - k) % 2 != 0) throw std::invalid_argument("level and k must have equal parity");
    YoungDiagram shape{(level + k) / 2, (level - k) / 2};
    std::vector<StandardTableau> out;
    for (const auto& t : enumerate_tableaux(shape))
        if (is_proper(t)) out.push_back(t);
    return out;
}

namespace {

void collect_extensions(const StandardTableau& t, int depth, CylinderFunction& f, double c) {
    if (t.level() == depth) {
        f.coeffs[t.word] = c;
        return;
    }
    for (auto e : {ExtensionPattern::P21(), ExtensionPattern::P12()}) {
        if (e.isP21() && t.shape().row1 == t.shape().row2) continue;
        collect_extensions(extend(t, e), depth, f, c);
    }
}

}  // namespace

CylinderFunction phi_t_vector(int k, const EmbeddingSpec& spec, const StandardTableau& t,
                              int depth) {
    if (t.shape().diff() != k) throw std::invalid_argument("tableau shape difference must equal k");
    if (depth < t.level() || (depth - t.level()) % 2 != 0)
        throw std::invalid_argument("depth must be t's level plus an even number");

    // walk down to the proper ancestor, collecting 1/p and 1/q factors
    double c = 1.0;
    StandardTableau cur = t;
    while (!is_proper(cur)) {
        int n = cur.level();
        bool p21 = cur.word[n - 2] == 2;  // entry n-1 in the second row
        const auto& h = spec.pairAt((n - 2 - k) / 2);
        double denom = p21 ? h.p : h.q;
        if (std::abs(denom) < 1e-15)
            throw std::invalid_argument("zero embedding parameter on a required branch");
        c /= denom;
        cur = cur.prefix(n - 2);
    }

    CylinderFunction f;
    f.depth = depth;
    collect_extensions(t, depth, f, c);
    return f;
}

double cylinder_mass(int k, const WalkMeasure& m, const StandardTableau& s) {
    StandardTableau cur = s;
    double mass = 1.0;
    while (!is_proper(cur)) {
        int n = cur.level();
        bool p21 = cur.word[n - 2] == 2;
        auto [alpha, beta] = m.weightAt((n - 2 - k) / 2);
        mass *= p21 ? alpha : beta;
        cur = cur.prefix(n - 2);
    }
    if (cur.shape().diff() != k) return 0.0;  // ancestor belongs to another component
    return mass;
}

double cylinder_inner(int k, const WalkMeasure& m, const CylinderFunction& f,
                      const CylinderFunction& g) {
    if (f.depth != g.depth) throw std::invalid_argument("cylinder depths must match");
    double s = 0.0;
    const auto& small = f.coeffs.size() <= g.coeffs.size() ? f : g;
    const auto& big = f.coeffs.size() <= g.coeffs.size() ? g : f;
    for (const auto& [word, cf] : small.coeffs) {
        auto it = big.coeffs.find(word);
        if (it == big.coeffs.end()) continue;
        s += cf * it->second * cylinder_mass(k, m, StandardTableau(word));
    }
    return s;
}

}  // namespace swlab
