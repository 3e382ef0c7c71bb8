#pragma once

// The periodic Coxeter-Laplace operator L_N = N e - (s_1 + ... + s_N) with
// s_N = (N, 1): construction in irrep or tensor mode, extremal eigenvalues,
// the phi(p) limit law, and the ground-energy scan toward 2 log 2.

#include <cstdint>
#include <functional>
#include <vector>

#include "swlab/diagrams.hpp"
#include "swlab/embeddings.hpp"
#include "swlab/orthoform.hpp"

namespace swlab {

struct LaplaceSpec {
    enum class Mode { Irrep, Tensor };
    int sites = 2;
    Mode mode = Mode::Irrep;
    YoungDiagram shape;  // irrep mode: level must equal sites
};

SparseOperator coxeter_laplace(const LaplaceSpec& spec);

// matrix-free symmetric operator
struct LinOp {
    int dim = 0;
    std::function<void(const double*, double*)> apply;
};

LinOp laplace_irrep_action(int sites, const YoungDiagram& shape);

struct TopEigen {
    double value = 0.0;
    double residual = 0.0;
    bool converged = false;
    int iterations = 0;
};

// Lanczos with full reorthogonalization; dense fallback below dim 2000.
// Deterministic seeded start vector; residual = ||A v - value v||.
TopEigen top_eigenvalue(const LinOp& a, double tol, std::uint64_t seed = 2024);

TopEigen top_eigenvalue(const SparseOperator& a, double tol, std::uint64_t seed = 2024);

// H = (J/4)(2 lambda - N)
double heisenberg_energy(double lambda, int n, double j);

// phi(p) = 13/12 + (8/6) p^4 - (7/6) p^2 - (sqrt(3)/2) p sqrt(1 - p^2)
double phi(double p);

struct PhiMax {
    double pStar = 0.0;
    double phiStar = 0.0;
    bool atBoundary = false;
};

// grid scan plus golden-section refinement over [lo, hi]
PhiMax phi_maximizer(int gridSize, double refineTol, double lo = -1.0, double hi = 1.0);

// l(t, s) = delta_{ts} - 1/2 ((s_{n+1} + s_{n+2}) i(t), i(s)) with i the chain
// embedding to `level`; level-independent beyond n+4 for stationary specs
double limit_matrix_element(int k, const EmbeddingSpec& spec, const StandardTableau& t,
                            const StandardTableau& s, int level);

// direct mode: (1/N)(L_N i(t), i(s)) extrapolated over N = n+4 .. maxLevel
// (iterated Shanks on the half-differences of N v(N))
double limit_matrix_element_direct(int k, const EmbeddingSpec& spec,
                                   const StandardTableau& t, const StandardTableau& s,
                                   int maxLevel);

struct ScanRow {
    int k = 0;
    int sites = 0;          // N = 2k + 1
    double lambdaMax = 0.0;
    double perSite = 0.0;   // lambdaMax / N
    double prop7Ratio = 0.0;  // lambdaMax / (2k)
    double residual = 0.0;
};

// lambda_max of L_{2k+1} on pi_(k+1,k) for k = 1..kMax; for k <= 3 the value
// is cross-checked against dense diagonalization of the full tensor space
std::vector<ScanRow> ground_energy_scan(int kMax, double tol);

// least-squares a + b/N^2 over rows with k >= kMin; returns (a, b)
std::pair<double, double> fit_per_site(const std::vector<ScanRow>& rows, int kMin);

}  // namespace swlab
