#include "swlab/laplace.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace swlab {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// factorization of the wrap-around transposition (1, N) into adjacent swaps
std::vector<int> wrap_factors(int n) {
    std::vector<int> f;
    for (int i = 1; i < n; ++i) f.push_back(i);
    for (int i = n - 2; i >= 1; --i) f.push_back(i);
    return f;
}

}  // namespace

SparseOperator coxeter_laplace(const LaplaceSpec& spec) {
    int n = spec.sites;
    if (n < 2) throw std::invalid_argument("need at least two sites");
    if (spec.mode == LaplaceSpec::Mode::Irrep) {
        if (!spec.shape.valid() || spec.shape.size() != n)
            throw std::invalid_argument("shape level must equal the site count");
        int d = static_cast<int>(dim_irrep(spec.shape));
        auto l = SparseOperator::identity(d).scaled(double(n));
        for (int i = 1; i < n; ++i)
            l = l.plus(coxeter_generator_matrix(spec.shape, i), -1.0);
        l = l.plus(permutation_matrix(spec.shape, Permutation::transposition(n, 1, n)), -1.0);
        l.basis = enumerate_tableaux(spec.shape);
        return l;
    }
    // tensor mode on bitstrings
    if (n > 24) throw std::invalid_argument("tensor mode limited to N <= 24");
    std::uint64_t dim = std::uint64_t{1} << n;
    SparseOperator l(static_cast<int>(dim), static_cast<int>(dim));
    for (std::uint64_t b = 0; b < dim; ++b) {
        double diag = n;
        for (int j = 0; j < n; ++j) {
            int j2 = (j + 1) % n;
            bool bi = (b >> j) & 1u, bj = (b >> j2) & 1u;
            if (bi == bj)
                diag -= 1.0;
            else
                l.add(static_cast<int>(b ^ (1ull << j) ^ (1ull << j2)),
                      static_cast<int>(b), -1.0);
        }
        if (diag != 0.0) l.add(static_cast<int>(b), static_cast<int>(b), diag);
    }
    return l;
}

LinOp laplace_irrep_action(int sites, const YoungDiagram& shape) {
    if (shape.size() != sites) throw std::invalid_argument("shape level must equal the site count");
    int d = static_cast<int>(dim_irrep(shape));
    auto gens = std::make_shared<std::vector<SparseOperator>>();
    for (int i = 1; i < sites; ++i) gens->push_back(coxeter_generator_matrix(shape, i));
    auto wrapSeq = wrap_factors(sites);

    LinOp op;
    op.dim = d;
    op.apply = [d, sites, gens, wrapSeq](const double* x, double* y) {
        std::vector<double> tmp(x, x + d), tmp2(d);
        for (int i = 0; i < d; ++i) y[i] = sites * x[i];
        for (const auto& g : *gens) {
            g.apply(x, tmp2.data());
            for (int i = 0; i < d; ++i) y[i] -= tmp2[i];
        }
        // wrap-around (1, N) applied through its factor chain
        for (int f : wrapSeq) {
            (*gens)[f - 1].apply(tmp.data(), tmp2.data());
            std::swap(tmp, tmp2);
        }
        for (int i = 0; i < d; ++i) y[i] -= tmp[i];
    };
    return op;
}

TopEigen top_eigenvalue(const LinOp& a, double tol, std::uint64_t seed) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    int d = a.dim;
    if (d == 1) {
        double x = 1.0, y = 0.0;
        a.apply(&x, &y);
        return {y, 0.0, true, 0};
    }
    if (d < 2000) {
        // dense fallback
        Eigen::MatrixXd m(d, d);
        std::vector<double> e(d, 0.0), col(d);
        for (int c = 0; c < d; ++c) {
            e[c] = 1.0;
            a.apply(e.data(), col.data());
            e[c] = 0.0;
            for (int r = 0; r < d; ++r) m(r, c) = col[r];
        }
        if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10)
            throw std::invalid_argument("operator is not symmetric");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
        double val = es.eigenvalues()(d - 1);
        Eigen::VectorXd v = es.eigenvectors().col(d - 1);
        double res = (m * v - val * v).norm();
        return {val, res, true, 0};
    }

    // Lanczos with full reorthogonalization
    int cap = static_cast<int>(10.0 * std::sqrt(double(d))) + 200;
    std::vector<std::vector<double>> basis;
    std::vector<double> alpha, beta;

    std::vector<double> v(d);
    std::uint64_t st = seed;
    for (auto& x : v) x = (double(splitmix64(st) >> 11) / 9007199254740992.0) - 0.5;
    double nv = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    for (auto& x : v) x /= nv;

    std::vector<double> w(d);
    double value = 0.0, resEst = 1e300;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    for (int it = 0; it < cap; ++it) {
        basis.push_back(v);
        a.apply(v.data(), w.data());
        double al = std::inner_product(w.begin(), w.end(), v.begin(), 0.0);
        alpha.push_back(al);
        for (int i = 0; i < d; ++i) w[i] -= al * v[i];
        if (!beta.empty())
            for (int i = 0; i < d; ++i) w[i] -= beta.back() * basis[basis.size() - 2][i];
        // full reorthogonalization
        for (const auto& q : basis) {
            double c = std::inner_product(w.begin(), w.end(), q.begin(), 0.0);
            for (int i = 0; i < d; ++i) w[i] -= c * q[i];
        }
        double bn = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));

        int m = static_cast<int>(alpha.size());
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            t(i, i) = alpha[i];
            if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
        }
        es.compute(t);
        value = es.eigenvalues()(m - 1);
        resEst = bn * std::abs(es.eigenvectors()(m - 1, m - 1));
        double scale = std::max(1.0, std::abs(value));
        if (resEst <= tol * scale || bn < kZeroTol) {
            // assemble the Ritz vector and measure the true residual
            std::vector<double> rv(d, 0.0);
            for (int i = 0; i < m; ++i) {
                double c = es.eigenvectors()(i, m - 1);
                for (int j = 0; j < d; ++j) rv[j] += c * basis[i][j];
            }
            a.apply(rv.data(), w.data());
            double res = 0;
            for (int i = 0; i < d; ++i) {
                double r = w[i] - value * rv[i];
                res += r * r;
            }
            return {value, std::sqrt(res), true, it + 1};
        }
        beta.push_back(bn);
        for (int i = 0; i < d; ++i) v[i] = w[i] / bn;
    }
    return {value, resEst, false, cap};
}

TopEigen top_eigenvalue(const SparseOperator& a, double tol, std::uint64_t seed) {
    if (a.rows() != a.cols()) throw std::invalid_argument("operator must be square");
    if (a.maxAbsDiff(a.transpose()) > 1e-10)
        throw std::invalid_argument("operator is not symmetric");
    LinOp op;
    op.dim = a.rows();
    op.apply = [&a](const double* x, double* y) { a.apply(x, y); };
    return top_eigenvalue(op, tol, seed);
}

double heisenberg_energy(double lambda, int n, double j) {
    return 0.25 * j * (2.0 * lambda - n);
}

double phi(double p) {
    if (std::abs(p) > 1.0) throw std::invalid_argument("|p| must be <= 1");
    return 13.0 / 12.0 + (8.0 / 6.0) * p * p * p * p - (7.0 / 6.0) * p * p -
           (std::sqrt(3.0) / 2.0) * p * std::sqrt(1.0 - p * p);
}

PhiMax phi_maximizer(int gridSize, double refineTol, double lo, double hi) {
    if (gridSize < 100) throw std::invalid_argument("grid must have at least 100 points");
    if (!(lo < hi) || lo < -1.0 || hi > 1.0) throw std::invalid_argument("bad domain");
    int best = 0;
    double bestVal = -1e300;
    for (int i = 0; i <= gridSize; ++i) {
        double p = lo + (hi - lo) * i / gridSize;
        double f = phi(p);
        if (f > bestVal) {
            bestVal = f;
            best = i;
        }
    }
    double a = lo + (hi - lo) * std::max(0, best - 1) / gridSize;
    double b = lo + (hi - lo) * std::min(gridSize, best + 1) / gridSize;
    // golden-section on [a, b]
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), dd = a + gr * (b - a);
    double fc = phi(c), fd = phi(dd);
    while (b - a > refineTol) {
        if (fc > fd) {
            b = dd;
            dd = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = phi(c);
        } else {
            a = c;
            c = dd;
            fc = fd;
            dd = a + gr * (b - a);
            fd = phi(dd);
        }
    }
    PhiMax out;
    out.pStar = 0.5 * (a + b);
    out.phiStar = phi(out.pStar);
    out.atBoundary = (best == 0 || best == gridSize);
    return out;
}

namespace {

// (L_N u, w) with wrap-around, both vectors in the irrep at the top level
double laplace_quadratic_form(int sites, const YoungDiagram& shape,
                              const std::vector<double>& u, const std::vector<double>& w) {
    auto op = laplace_irrep_action(sites, shape);
    std::vector<double> y(op.dim);
    op.apply(u.data(), y.data());
    return std::inner_product(y.begin(), y.end(), w.begin(), 0.0);
}

std::vector<double> column_of(const SparseOperator& m, int c) {
    std::vector<double> x(m.cols(), 0.0), y(m.rows());
    x[c] = 1.0;
    m.apply(x.data(), y.data());
    return y;
}

int tableau_index(const YoungDiagram& shape, const StandardTableau& t) {
    auto tabs = enumerate_tableaux(shape);
    auto it = std::find(tabs.begin(), tabs.end(), t);
    if (it == tabs.end()) throw std::invalid_argument("tableau does not have the expected shape");
    return static_cast<int>(it - tabs.begin());
}

}  // namespace

double limit_matrix_element(int k, const EmbeddingSpec& spec, const StandardTableau& t,
                            const StandardTableau& s, int level) {
    int n = t.level();
    if (s.level() != n || t.shape() != s.shape() || t.shape().diff() != k)
        throw std::invalid_argument("t, s must share a shape with difference k");
    if (level < n + 4 || (level - n) % 2 != 0)
        throw std::invalid_argument("level must be n + 4, n + 6, ...");

    auto chain = chain_embedding(spec, n, level);
    auto ut = column_of(chain.matrix, tableau_index(t.shape(), t));
    auto us = column_of(chain.matrix, tableau_index(s.shape(), s));

    auto g1 = coxeter_generator_matrix(chain.target, n + 1);
    auto g2 = coxeter_generator_matrix(chain.target, n + 2);
    auto y = g1.apply(ut);
    auto y2 = g2.apply(ut);
    double cross = 0;
    for (std::size_t i = 0; i < y.size(); ++i) cross += (y[i] + y2[i]) * us[i];
    double delta = (t == s) ? 1.0 : 0.0;
    return delta - 0.5 * cross;
}

double limit_matrix_element_direct(int k, const EmbeddingSpec& spec,
                                   const StandardTableau& t, const StandardTableau& s,
                                   int maxLevel) {
    int n = t.level();
    if (maxLevel < n + 8) throw std::invalid_argument("need at least three evaluation levels");
    double delta = (t == s) ? 1.0 : 0.0;

    // u(N) = N v(N) = N delta - (L'_N i(t), i(s)) where L' is the sum of
    // transpositions; the half-differences converge geometrically, so
    // iterated Shanks extrapolation recovers the limit
    std::vector<double> u;
    for (int level = n + 4; level <= maxLevel; level += 2) {
        auto chain = chain_embedding(spec, n, level);
        auto ut = column_of(chain.matrix, tableau_index(t.shape(), t));
        auto us = column_of(chain.matrix, tableau_index(s.shape(), s));
        double q = laplace_quadratic_form(level, chain.target, ut, us);
        u.push_back(q - level * std::inner_product(ut.begin(), ut.end(), us.begin(), 0.0) +
                    level * delta);
    }
    std::vector<double> d;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) d.push_back(0.5 * (u[i + 1] - u[i]));
    while (d.size() >= 3) {
        std::vector<double> next;
        for (std::size_t i = 0; i + 2 < d.size(); ++i) {
            double den = (d[i + 2] - d[i + 1]) - (d[i + 1] - d[i]);
            next.push_back(std::abs(den) > 1e-13
                               ? d[i + 2] - (d[i + 2] - d[i + 1]) * (d[i + 2] - d[i + 1]) / den
                               : d[i + 2]);
        }
        d = std::move(next);
    }
    return d.back();
}

std::vector<ScanRow> ground_energy_scan(int kMax, double tol) {
    if (kMax < 1) throw std::invalid_argument("kMax must be >= 1");
    std::vector<ScanRow> rows;
    for (int k = 1; k <= kMax; ++k) {
        int n = 2 * k + 1;
        YoungDiagram shape{k + 1, k};
        auto op = laplace_irrep_action(n, shape);
        auto top = top_eigenvalue(op, tol);
        if (!top.converged) throw std::runtime_error("eigensolver did not converge at k=" + std::to_string(k));
        ScanRow row{k, n, top.value, top.value / n, top.value / (2.0 * k), top.residual};
        if (k <= 3) {
            // dense tensor-space oracle: the global maximum lies in pi_(k+1,k)
            LaplaceSpec ts{n, LaplaceSpec::Mode::Tensor, {}};
            auto dense = top_eigenvalue(coxeter_laplace(ts), tol);
            if (std::abs(dense.value - top.value) > 1e-8)
                throw std::runtime_error("tensor-space cross-check failed at k=" + std::to_string(k));
        }
        rows.push_back(row);
    }
    return rows;
}

std::pair<double, double> fit_per_site(const std::vector<ScanRow>& rows, int kMin) {
    double s11 = 0, s1x = 0, sxx = 0, s1y = 0, sxy = 0;
    for (const auto& r : rows) {
        if (r.k < kMin) continue;
        double x = 1.0 / (double(r.sites) * r.sites);
        s11 += 1;
        s1x += x;
        sxx += x * x;
        s1y += r.perSite;
        sxy += x * r.perSite;
    }
    double det = s11 * sxx - s1x * s1x;
    if (s11 < 2 || std::abs(det) < 1e-300) throw std::invalid_argument("not enough rows to fit");
    return {(sxx * s1y - s1x * sxy) / det, (s11 * sxy - s1x * s1y) / det};
}

}  // namespace swlab
