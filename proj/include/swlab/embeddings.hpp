#pragma once

// Schur-Weyl embeddings: block isometries pi_lambda -> pi_mu from a unit pair
// (p, q), composite chains, the tensor embedding v -> v x v0, generalized
// 2k-jump embeddings, and numerical verification of the classification.

#include <functional>
#include <optional>
#include <vector>

#include "swlab/diagrams.hpp"
#include "swlab/orthoform.hpp"
#include "swlab/tensorspace.hpp"

namespace swlab {

struct UnitPair {
    double p = 0.0;
    double q = 1.0;

    bool isUnit(double tol = 1e-12) const;
    static UnitPair fromP(double p);  // q = sqrt(1 - p^2) >= 0
};

struct EmbeddingSpec {
    int k = 0;
    bool stationary = true;
    std::vector<UnitPair> params;    // stationary: single entry reused per step
    int jumpHalfWidth = 1;           // kJump; 1 = plain two-cell steps
    std::vector<double> jumpCoeffs;  // generalized: unit vector over ladder patterns

    static EmbeddingSpec stationaryPair(int k, double p);
    const UnitPair& pairAt(int j) const;  // step index j = (level - k)/2
    bool isGeneralized() const { return jumpHalfWidth > 1 || !jumpCoeffs.empty(); }
};

struct BlockIsometry {
    YoungDiagram source;
    YoungDiagram target;
    SparseOperator matrix;  // dim pi_target x dim pi_source, orthonormal columns

    double isometryDefect() const;      // max |B^T B - I|
    double intertwiningDefect() const;  // max over i <= |source|-1 of |B s_i - s_i B|
};

// t -> p (t + P21) + q (t + P12); unique pattern with coefficient 1 when
// lambda is square
BlockIsometry block_embedding(const YoungDiagram& lambda, const UnitPair& h);

// composition of successive block (or ladder) embeddings with the spec's
// parameters, fromLevel -> toLevel
BlockIsometry chain_embedding(const EmbeddingSpec& spec, int fromLevel, int toLevel);

// v -> v x v0 with v0 the singlet pair
TensorVector tensor_step_embedding(const TensorVector& v);

struct BlockParameters {
    int k = 0;
    double absP = 0.0;
    double relativePhase = 0.0;  // arg of p once q is rotated positive
};

// Conjugates the tensor step by adapted bases at levels N and N+2 and reads
// off the (P21, P12) coefficient pair per spin block.
std::vector<BlockParameters> extract_block_parameters(int n);

// dim{X : X pi_lambda(s_i) = pi_mu(s_i) for all i <= |lambda|-1}
int intertwiner_space_dim(const YoungDiagram& lambda, const YoungDiagram& mu);

// --- generalized (2k-jump) embeddings ---

// Skew fillings of the translation-invariant ladder shape (rows of kJump
// cells, second row offset one column left), lexicographic order.
std::vector<ExtensionPattern> ladder_patterns(int kJump);

// t -> sum_e h_e (t + e) over ladder patterns; requires diff(lambda) >= 1
BlockIsometry generalized_block_embedding(const YoungDiagram& lambda, int kJump,
                                          const std::vector<double>& h);

struct GeneralizedEmbedding {
    EmbeddingSpec spec;
    std::function<BlockIsometry(const YoungDiagram&)> step;
};

GeneralizedEmbedding generalized_stationary_embedding(int kJump,
                                                      const std::vector<double>& h);

// h for Prop-7-style chains: coordinates of the top eigenvector of the
// periodic Coxeter Laplacian L_{2k+1} on pi_(k+1,k), under the tableau <->
// ladder-pattern bijection. Degenerate top eigenspace: deterministic
// tie-break toward the lexicographically first tableau, positive sign.
std::vector<double> top_eigenvector_coefficients(int kJump);

}  // namespace swlab
