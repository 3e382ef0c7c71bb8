// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "swlab/diagrams.hpp"
#include "swlab/embeddings.hpp"
#include "swlab/laplace.hpp"
#include "swlab/measures.hpp"
#include "swlab/orthoform.hpp"
#include "swlab/tensorspace.hpp"

using namespace swlab;

namespace {

bool g_ok = true;

void report(int idx, const std::string& name, bool pass, double seconds) {
    std::printf("[%d/8] %-34s %s (%.2f s)\n", idx, name.c_str(), pass ? "PASS" : "FAIL",
                seconds);
    if (!pass) g_ok = false;
}

void criterion(int idx, const std::string& name, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        pass = body();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "  criterion %d threw: %s\n", idx, e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(idx, name, pass, dt);
}

double splitmix_unit(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<double>((z ^ (z >> 31)) >> 11) * 0x1.0p-53;
}

bool dimension_identity() {
    for (int n = 1; n <= 24; ++n) {
        std::int64_t total = 0;
        for (const auto& d : enumerate_two_row_diagrams(n))
            total += dim_irrep(d) * (d.diff() + 1);
        if (total != (std::int64_t{1} << n)) return false;
    }
    return true;
}

bool orthoform_relations() {
    for (int n = 2; n <= 12; ++n)
        for (const auto& d : enumerate_two_row_diagrams(n)) {
            std::vector<SparseOperator> gen;
            for (int i = 1; i < n; ++i) gen.push_back(coxeter_generator_matrix(d, i));
            for (std::size_t i = 0; i < gen.size(); ++i) {
                if (gen[i].multiply(gen[i]).maxAbsDiffIdentity() > 1e-12) return false;
                if (i + 1 < gen.size()) {
                    auto lhs = gen[i].multiply(gen[i + 1]).multiply(gen[i]);
                    auto rhs = gen[i + 1].multiply(gen[i]).multiply(gen[i + 1]);
                    if (lhs.maxAbsDiff(rhs) > 1e-12) return false;
                }
                for (std::size_t j = i + 2; j < gen.size(); ++j)
                    if (gen[i].multiply(gen[j]).maxAbsDiff(gen[j].multiply(gen[i])) > 1e-12)
                        return false;
            }
        }
    return true;
}

bool embedding_equivariance() {
    std::uint64_t s = 1;
    for (int trial = 0; trial < 20; ++trial) {
        double p = 2.0 * splitmix_unit(s) - 1.0;
        for (int n = 1; n <= 10; ++n)
            for (const auto& d : enumerate_two_row_diagrams(n)) {
                auto emb = block_embedding(d, (d.row1 == d.row2) ? UnitPair::fromP(0.0)
                                                                 : UnitPair::fromP(p));
                if (emb.isometryDefect() > 1e-12) return false;
                if (emb.intertwiningDefect() > 1e-12) return false;
            }
    }
    for (int nl = 1; nl <= 8; ++nl)
        for (const auto& lam : enumerate_two_row_diagrams(nl))
            for (int nm = nl; nm <= 8; ++nm)
                for (const auto& mu : enumerate_two_row_diagrams(nm)) {
                    if (!mu.contains(lam)) continue;
                    int expected = static_cast<int>(paths_between(lam, mu).size());
                    if (intertwiner_space_dim(lam, mu) != expected) return false;
                }
    return true;
}

bool tensor_embedding() {
    for (int n = 2; n <= 7; ++n)
        for (const auto& bp : extract_block_parameters(n)) {
            if (bp.k > 5) continue;
            double r = bp.k + 1.0;
            if (std::abs(bp.absP - std::sqrt((r - 1.0) / (2.0 * r))) > 1e-10) return false;
        }
    std::uint64_t s = 77;
    int trials = 0;
    for (int n = 1; n <= 8 && trials < 100; ++n)
        for (int rep = 0; rep < 13 && trials < 100; ++rep, ++trials) {
            TensorVector v;
            v.n = n;
            for (std::uint64_t b = 0; b < (1ULL << n); ++b)
                v.add(b, {splitmix_unit(s) - 0.5, splitmix_unit(s) - 0.5});
            auto image = tensor_step_embedding(v);
            auto moved = permute_tensor(image, Permutation::transposition(n + 2, n + 1, n + 2));
            if (moved.plus(image, 1.0).norm() > 1e-12 * std::max(1.0, image.norm()))
                return false;
        }
    const std::int64_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
    for (int k = 1; k <= 6; ++k)
        if (invariant_multiplicity(2 * k) != catalan[k]) return false;
    return true;
}

bool phi_law() {
    if (std::abs(phi(-0.5) - 1.25) > 1e-12) return false;
    auto mx = phi_maximizer(4000, 1e-13);
    if (std::abs(mx.pStar - (-0.95543)) > 1e-4) return false;
    if (std::abs(mx.phiStar - 1.3736684) > 1e-5) return false;

    auto tabs = enumerate_tableaux(YoungDiagram{2, 1});
    for (double p : {-0.9, -0.5, 0.0, 0.3, 0.7}) {
        auto spec = EmbeddingSpec::stationaryPair(1, p);
        double law = phi(p);
        for (int level = 7; level <= 13; level += 2)
            for (const auto& t : tabs)
                for (const auto& u : tabs) {
                    double expected = (t == u) ? law : 0.0;
                    if (std::abs(limit_matrix_element(1, spec, t, u, level) - expected) > 1e-10)
                        return false;
                }
    }
    return true;
}

bool antiferromagnetic_limit() {
    auto rows = ground_energy_scan(9, 1e-10);
    if (rows.size() != 9) return false;
    const auto& r1 = rows[0];
    if (std::abs(r1.lambdaMax - 3.0) > 1e-10 || std::abs(r1.perSite - 1.0) > 1e-10 ||
        std::abs(r1.prop7Ratio - 1.5) > 1e-10)
        return false;
    const double target = 1.38629436;
    for (std::size_t i = 3; i + 1 < rows.size(); ++i)
        if (std::abs(rows[i + 1].perSite - target) >= std::abs(rows[i].perSite - target))
            return false;
    auto [a, b] = fit_per_site(rows, 4);
    return std::abs(a - 1.386) <= 0.01;
}

bool measure_layer() {
    // cylinder probabilities over all depth-M pattern sequences sum to 1
    for (double alpha : {0.3, 0.5, 0.8}) {
        auto m = WalkMeasure::stationaryWalk(StandardTableau{1}, alpha);
        for (int depth = 1; depth <= 12; ++depth) {
            double total = 0.0;
            for (int mask = 0; mask < (1 << depth); ++mask) {
                std::vector<ExtensionPattern> pat;
                for (int b = 0; b < depth; ++b)
                    pat.push_back(((mask >> b) & 1) ? ExtensionPattern::P21()
                                                    : ExtensionPattern::P12());
                total += cylinder_probability(m, pat);
            }
            if (std::abs(total - 1.0) > 1e-10) return false;
        }
    }

    // Gram matrix of the cylinder functions, k = 1, depth 9
    auto spec = EmbeddingSpec::stationaryPair(1, -0.5);
    auto m = WalkMeasure::fromSpec(StandardTableau{1}, spec);
    std::vector<StandardTableau> props;
    for (int level = 1; level <= 7; level += 2)
        for (const auto& t : enumerate_proper_tableaux(1, level)) props.push_back(t);
    std::vector<CylinderFunction> fs;
    for (const auto& t : props) fs.push_back(phi_t_vector(1, spec, t, 9));
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < fs.size(); ++j)
            if (std::abs(cylinder_inner(1, m, fs[i], fs[j]) - (i == j ? 1.0 : 0.0)) > 1e-10)
                return false;

    // chi-square over the 8 depth-3 cylinders, 1e5 samples, significance 1e-3
    auto mc = WalkMeasure::stationaryWalk(StandardTableau{1}, 0.4);
    const int samples = 100000;
    int counts[8] = {0};
    for (int i = 0; i < samples; ++i) {
        auto path = sample_path(mc, 3, 90000 + static_cast<std::uint64_t>(i));
        int key = 0;
        for (int b = 0; b < 3; ++b)
            if (path[b].isP21()) key |= 1 << b;
        ++counts[key];
    }
    double chi2 = 0.0;
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<ExtensionPattern> pat;
        for (int b = 0; b < 3; ++b)
            pat.push_back(((mask >> b) & 1) ? ExtensionPattern::P21() : ExtensionPattern::P12());
        double expected = samples * cylinder_probability(mc, pat);
        chi2 += (counts[mask] - expected) * (counts[mask] - expected) / expected;
    }
    return chi2 <= 24.3219;
}

bool spin_identification() {
    for (int n = 1; n <= 10; ++n) {
        auto ab = adapted_basis_unitary(n);
        for (std::size_t i = 0; i < ab.labels.size(); ++i) {
            int k = ab.labels[i].tableau.shape().diff();
            for (auto [kc, mass] : spin_components(ab.vectors[i])) {
                double expected = (kc == k) ? 1.0 : 0.0;
                if (std::abs(mass - expected) > 1e-12) return false;
            }
        }
    }
    for (int n = 2; n <= 6; ++n) {
        // commutant dimension via the permutation characters on (C^2)^n
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        double acc = 0.0;
        std::int64_t order = 0;
        do {
            Permutation g{w};
            double tr = 0.0;
            for (std::uint64_t b = 0; b < (1ULL << n); ++b) {
                auto moved = permute_tensor(TensorVector::basisVector(n, b), g);
                auto it = moved.amps.find(b);
                if (it != moved.amps.end()) tr += it->second.real();
            }
            acc += tr * tr;
            ++order;
        } while (std::next_permutation(w.begin(), w.end()));
        std::int64_t expected = 0;
        for (const auto& d : enumerate_two_row_diagrams(n))
            expected += std::int64_t(d.diff() + 1) * (d.diff() + 1);
        if (n == 3 && expected != 20) return false;
        if (std::abs(acc / static_cast<double>(order) - static_cast<double>(expected)) > 1e-9)
            return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "dimension identity", dimension_identity);
    criterion(2, "orthogonal-form relations", orthoform_relations);
    criterion(3, "embedding equivariance", embedding_equivariance);
    criterion(4, "tensor embedding parameters", tensor_embedding);
    criterion(5, "phi(p) limit law", phi_law);
    criterion(6, "antiferromagnetic limit scan", antiferromagnetic_limit);
    criterion(7, "measure layer", measure_layer);
    criterion(8, "spin identification", spin_identification);
    return g_ok ? 0 : 1;
}
