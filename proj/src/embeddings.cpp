#include "swlab/embeddings.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>

namespace swlab {

bool UnitPair::isUnit(double tol) const { return std::abs(p * p + q * q - 1.0) <= tol; }

UnitPair UnitPair::fromP(double p) {
    if (std::abs(p) > 1.0) throw std::invalid_argument("|p| must be <= 1");
    return {p, std::sqrt(1.0 - p * p)};
}

EmbeddingSpec EmbeddingSpec::stationaryPair(int k, double p) {
    EmbeddingSpec s;
    s.k = k;
    s.stationary = true;
    s.params = {UnitPair::fromP(p)};
    return s;
}

const UnitPair& EmbeddingSpec::pairAt(int j) const {
    if (params.empty()) throw std::invalid_argument("embedding spec has no parameters");
    if (stationary) return params.front();
    if (j < 0 || j >= static_cast<int>(params.size()))
        throw std::out_of_range("step index outside parameter sequence");
    return params[j];
}

double BlockIsometry::isometryDefect() const {
    return matrix.transpose().multiply(matrix).maxAbsDiffIdentity();
}

double BlockIsometry::intertwiningDefect() const {
    double worst = 0;
    for (int i = 1; i < source.size(); ++i) {
        auto gs = coxeter_generator_matrix(source, i);
        auto gt = coxeter_generator_matrix(target, i);
        worst = std::max(worst, matrix.multiply(gs).maxAbsDiff(gt.multiply(matrix)));
    }
    return worst;
}

namespace {

std::map<RowWord, int> index_map(const std::vector<StandardTableau>& tabs) {
    std::map<RowWord, int> idx;
    for (std::size_t a = 0; a < tabs.size(); ++a) idx[tabs[a].word] = static_cast<int>(a);
    return idx;
}

}  // namespace

BlockIsometry block_embedding(const YoungDiagram& lambda, const UnitPair& h) {
    if (!lambda.valid()) throw std::invalid_argument("invalid shape");
    if (!h.isUnit()) throw std::invalid_argument("embedding pair must have unit norm");
    YoungDiagram mu{lambda.row1 + 1, lambda.row2 + 1};
    auto src = enumerate_tableaux(lambda);
    auto tgt = enumerate_tableaux(mu);
    auto tidx = index_map(tgt);

    SparseOperator m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c) {
        if (lambda.row1 == lambda.row2) {
            m.add(tidx.at(extend(src[c], ExtensionPattern::P12()).word),
                  static_cast<int>(c), 1.0);
        } else {
            m.add(tidx.at(extend(src[c], ExtensionPattern::P21()).word),
                  static_cast<int>(c), h.p);
            m.add(tidx.at(extend(src[c], ExtensionPattern::P12()).word),
                  static_cast<int>(c), h.q);
        }
    }
    m.basis = std::move(tgt);
    return {lambda, mu, std::move(m)};
}

BlockIsometry chain_embedding(const EmbeddingSpec& spec, int fromLevel, int toLevel) {
    int stepCells = 2 * spec.jumpHalfWidth;
    if (toLevel <= fromLevel || (toLevel - fromLevel) % stepCells != 0)
        throw std::invalid_argument("level span must be a positive multiple of the step size");
    if ((fromLevel - spec.k) % 2 != 0 || fromLevel < spec.k)
        throw std::invalid_argument("fromLevel inconsistent with k");

    YoungDiagram shape{spec.k + (fromLevel - spec.k) / 2, (fromLevel - spec.k) / 2};
    std::optional<BlockIsometry> acc;
    for (int lvl = fromLevel; lvl < toLevel; lvl += stepCells) {
        BlockIsometry step =
            spec.isGeneralized()
                ? generalized_block_embedding(shape, spec.jumpHalfWidth, spec.jumpCoeffs)
                : block_embedding(shape, spec.pairAt((lvl - spec.k) / 2));
        if (!acc) {
            acc = std::move(step);
        } else {
            acc->matrix = step.matrix.multiply(acc->matrix);
            acc->target = step.target;
        }
        shape = acc->target;
    }
    acc->matrix.basis = enumerate_tableaux(acc->target);
    return *acc;
}

TensorVector tensor_step_embedding(const TensorVector& v) {
    return tensor_product(v, TensorVector::singletPair());
}

std::vector<BlockParameters> extract_block_parameters(int n) {
    if (n < 1) throw std::invalid_argument("N must be positive");
    auto basisN = adapted_basis_unitary(n);
    auto basisN2 = adapted_basis_unitary(n + 2);

    std::vector<BlockParameters> out;
    for (const auto& lambda : enumerate_two_row_diagrams(n)) {
        int k = lambda.diff();
        StandardTableau t = enumerate_tableaux(lambda).front();
        int m = k;  // highest weight of the block
        TensorVector u = tensor_step_embedding(basisN.vectorOf(t, m));

        double q = std::real(basisN2.vectorOf(extend(t, ExtensionPattern::P12()), m).inner(u));
        double p = 0.0;
        if (lambda.row1 > lambda.row2)
            p = std::real(basisN2.vectorOf(extend(t, ExtensionPattern::P21()), m).inner(u));
        if (q < 0) { p = -p; q = -q; }  // rotate the pair so q >= 0
        BlockParameters bp;
        bp.k = k;
        if (lambda.row1 == lambda.row2) {
            // square shape: the P21 branch is absent and the P12 coefficient
            // carries the whole weight, so |p| = 0
            bp.absP = 0.0;
            bp.relativePhase = 0.0;
        } else {
            bp.absP = std::abs(p);
            bp.relativePhase = p >= 0 ? 0.0 : M_PI;
        }
        out.push_back(bp);
    }
    return out;
}

int intertwiner_space_dim(const YoungDiagram& lambda, const YoungDiagram& mu) {
    if (mu.size() < lambda.size()) throw std::invalid_argument("|mu| must be >= |lambda|");
    int dl = static_cast<int>(dim_irrep(lambda));
    int dm = static_cast<int>(dim_irrep(mu));
    int unknowns = dl * dm;

    std::vector<Eigen::MatrixXd> rows;
    for (int i = 1; i < lambda.size(); ++i) {
        auto glT = coxeter_generator_matrix(lambda, i).transpose();
        auto gm = coxeter_generator_matrix(mu, i);
        Eigen::MatrixXd block = Eigen::MatrixXd::Zero(unknowns, unknowns);
        // vec(X) ordering: X(r, c) at r * dl + c; constraint X gl - gm X = 0
        for (int r = 0; r < dm; ++r)
            for (int c = 0; c < dl; ++c) {
                for (const auto& [cc, v] : glT.row(c))
                    block(r * dl + c, r * dl + cc) += v;
                for (const auto& [rr, v] : gm.row(r))
                    block(r * dl + c, rr * dl + c) -= v;
            }
        rows.push_back(std::move(block));
    }
    if (rows.empty()) return unknowns;  // trivial constraint group

    Eigen::MatrixXd sys(unknowns * static_cast<int>(rows.size()), unknowns);
    for (std::size_t b = 0; b < rows.size(); ++b)
        sys.middleRows(static_cast<int>(b) * unknowns, unknowns) = rows[b];
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sys);
    qr.setThreshold(1e-8);
    return unknowns - static_cast<int>(qr.rank());
}

std::vector<ExtensionPattern> ladder_patterns(int kJump) {
    if (kJump < 1) throw std::invalid_argument("kJump must be >= 1");
    std::vector<ExtensionPattern> out;
    RowWord w;
    auto rec = [&](auto&& self, int r1, int r2) -> void {
        if (r1 + r2 == 2 * kJump) {
            out.push_back({w});
            return;
        }
        if (r1 < kJump) {
            w.push_back(1);
            self(self, r1 + 1, r2);
            w.pop_back();
        }
        if (r2 < kJump && r2 <= r1) {  // second row offset one column left
            w.push_back(2);
            self(self, r1, r2 + 1);
            w.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

BlockIsometry generalized_block_embedding(const YoungDiagram& lambda, int kJump,
                                          const std::vector<double>& h) {
    if (lambda.diff() < 1)
        throw std::invalid_argument("ladder steps need lambda_1 > lambda_2");
    auto patterns = ladder_patterns(kJump);
    if (h.size() != patterns.size())
        throw std::invalid_argument("coefficient vector does not match pattern count");
    double norm2 = 0;
    for (double x : h) norm2 += x * x;
    if (std::abs(norm2 - 1.0) > 1e-12) throw std::invalid_argument("coefficients must be unit");

    YoungDiagram mu{lambda.row1 + kJump, lambda.row2 + kJump};
    auto src = enumerate_tableaux(lambda);
    auto tgt = enumerate_tableaux(mu);
    auto tidx = index_map(tgt);
    SparseOperator m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c)
        for (std::size_t e = 0; e < patterns.size(); ++e)
            m.add(tidx.at(extend(src[c], patterns[e]).word), static_cast<int>(c), h[e]);
    m.basis = std::move(tgt);
    return {lambda, mu, std::move(m)};
}

GeneralizedEmbedding generalized_stationary_embedding(int kJump,
                                                      const std::vector<double>& h) {
    auto patterns = ladder_patterns(kJump);
    if (h.size() != patterns.size())
        throw std::invalid_argument("coefficient vector does not match pattern count");
    GeneralizedEmbedding g;
    g.spec.k = 1;
    g.spec.stationary = true;
    g.spec.jumpHalfWidth = kJump;
    g.spec.jumpCoeffs = h;
    g.step = [kJump, h](const YoungDiagram& lambda) {
        return generalized_block_embedding(lambda, kJump, h);
    };
    return g;
}

std::vector<double> top_eigenvector_coefficients(int kJump) {
    // dense L_{2k+1} on pi_(k+1,k)
    int n = 2 * kJump + 1;
    YoungDiagram shape{kJump + 1, kJump};
    int d = static_cast<int>(dim_irrep(shape));
    Eigen::MatrixXd l = double(n) * Eigen::MatrixXd::Identity(d, d);
    for (int i = 1; i < n; ++i) {
        auto g = coxeter_generator_matrix(shape, i);
        for (int r = 0; r < d; ++r)
            for (const auto& [c, v] : g.row(r)) l(r, c) -= v;
    }
    auto wrap = permutation_matrix(shape, Permutation::transposition(n, 1, n));
    for (int r = 0; r < d; ++r)
        for (const auto& [c, v] : wrap.row(r)) l(r, c) -= v;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l);
    double top = es.eigenvalues()(d - 1);
    // project the first basis tableau onto the top eigenspace (tie-break)
    Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
    for (int j = d - 1; j >= 0 && es.eigenvalues()(j) > top - 1e-8; --j)
        v += es.eigenvectors().col(j)(0) * es.eigenvectors().col(j);
    if (v.norm() < 1e-12) throw std::runtime_error("degenerate tie-break failed");
    v.normalize();
    for (int j = 0; j < d; ++j)
        if (std::abs(v(j)) > 1e-12) {
            if (v(j) < 0) v = -v;
            break;
        }
    // tableau of (k+1,k) <-> ladder pattern: drop the forced first entry
    return std::vector<double>(v.data(), v.data() + d);
}

}  // namespace swlab
