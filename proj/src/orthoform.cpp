#include "swlab/orthoform.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace swlab {

SparseOperator SparseOperator::identity(int n) {
    SparseOperator a(n, n);
    for (int i = 0; i < n; ++i) a.add(i, i, 1.0);
    return a;
}

void SparseOperator::add(int r, int c, double v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("sparse entry index out of range");
    auto& row = rowData_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (std::abs(it->second) < kZeroTol) row.erase(it);
    } else if (std::abs(v) >= kZeroTol) {
        row.insert(it, {c, v});
    }
}

double SparseOperator::entry(int r, int c) const {
    const auto& row = rowData_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? it->second : 0.0;
}

std::size_t SparseOperator::nnz() const {
    std::size_t n = 0;
    for (const auto& r : rowData_) n += r.size();
    return n;
}

void SparseOperator::prune(double tol) {
    for (auto& row : rowData_)
        std::erase_if(row, [tol](const auto& e) { return std::abs(e.second) < tol; });
}

void SparseOperator::apply(const double* x, double* y) const {
    for (int r = 0; r < rows_; ++r) {
        double s = 0;
        for (const auto& [c, v] : rowData_[r]) s += v * x[c];
        y[r] = s;
    }
}

std::vector<double> SparseOperator::apply(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<double> y(rows_);
    apply(x.data(), y.data());
    return y;
}

std::vector<double> SparseOperator::applyTranspose(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != rows_) throw std::invalid_argument("applyTranspose: size mismatch");
    std::vector<double> y(cols_, 0.0);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : rowData_[r]) y[c] += v * x[r];
    return y;
}

SparseOperator SparseOperator::multiply(const SparseOperator& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("multiply: size mismatch");
    SparseOperator out(rows_, other.cols_);
    std::map<int, double> acc;
    for (int r = 0; r < rows_; ++r) {
        acc.clear();
        for (const auto& [k, va] : rowData_[r])
            for (const auto& [c, vb] : other.rowData_[k]) acc[c] += va * vb;
        for (const auto& [c, v] : acc)
            if (std::abs(v) >= kZeroTol) out.rowData_[r].push_back({c, v});
    }
    return out;
}

SparseOperator SparseOperator::transpose() const {
    SparseOperator out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : rowData_[r]) out.rowData_[c].push_back({r, v});
    for (auto& row : out.rowData_) std::sort(row.begin(), row.end());
    return out;
}

SparseOperator SparseOperator::plus(const SparseOperator& other, double scale) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("plus: size mismatch");
    SparseOperator out = *this;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : other.rowData_[r]) out.add(r, c, scale * v);
    return out;
}

SparseOperator SparseOperator::scaled(double s) const {
    SparseOperator out = *this;
    for (auto& row : out.rowData_)
        for (auto& e : row) e.second *= s;
    out.prune();
    return out;
}

double SparseOperator::maxAbsDiff(const SparseOperator& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("maxAbsDiff: size mismatch");
    double m = 0;
    for (int r = 0; r < rows_; ++r) {
        auto ia = rowData_[r].begin(), ea = rowData_[r].end();
        auto ib = other.rowData_[r].begin(), eb = other.rowData_[r].end();
        while (ia != ea || ib != eb) {
            if (ib == eb || (ia != ea && ia->first < ib->first))
                m = std::max(m, std::abs(ia++->second));
            else if (ia == ea || ib->first < ia->first)
                m = std::max(m, std::abs(ib++->second));
            else {
                m = std::max(m, std::abs(ia->second - ib->second));
                ++ia, ++ib;
            }
        }
    }
    return m;
}

double SparseOperator::maxAbsDiffIdentity() const {
    return maxAbsDiff(identity(rows_));
}

Permutation Permutation::identity(int n) {
    Permutation g;
    g.images.resize(n);
    std::iota(g.images.begin(), g.images.end(), 1);
    return g;
}

Permutation Permutation::transposition(int n, int a, int b) {
    auto g = identity(n);
    std::swap(g.images[a - 1], g.images[b - 1]);
    return g;
}

bool Permutation::isBijection() const {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 1 || v > size() || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw std::invalid_argument("size mismatch");
    Permutation out = identity(size());
    for (int i = 1; i <= size(); ++i) out.images[i - 1] = images[other.images[i - 1] - 1];
    return out;
}

std::vector<int> Permutation::adjacentFactorization() const {
    if (!isBijection()) throw std::invalid_argument("not a permutation");
    std::vector<int> w = images;
    std::vector<int> factors;
    // bubble w back to the identity; the recorded swaps, reversed, build g
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        for (std::size_t j = w.size() - 1; j > i; --j) {
            if (w[j - 1] > w[j]) {
                std::swap(w[j - 1], w[j]);
                factors.push_back(static_cast<int>(j));  // (j, j+1)
            }
        }
    }
    std::reverse(factors.begin(), factors.end());
    return factors;
}

SparseOperator coxeter_generator_matrix(const YoungDiagram& shape, int i) {
    int n = shape.size();
    if (i < 1 || i >= n) throw std::out_of_range("generator index out of range");
    auto tabs = enumerate_tableaux(shape);
    std::map<RowWord, int> index;
    for (std::size_t a = 0; a < tabs.size(); ++a) index[tabs[a].word] = static_cast<int>(a);

    SparseOperator m(static_cast<int>(tabs.size()), static_cast<int>(tabs.size()));
    for (std::size_t a = 0; a < tabs.size(); ++a) {
        const auto& t = tabs[a];
        int r = axial_distance(t, i);
        if (std::abs(r) == 1) {
            m.add(static_cast<int>(a), static_cast<int>(a), static_cast<double>(r));
        } else {
            m.add(static_cast<int>(a), static_cast<int>(a), 1.0 / r);
            RowWord w = t.word;
            std::swap(w[i - 1], w[i]);
            int b = index.at(w);
            m.add(b, static_cast<int>(a), std::sqrt(1.0 - 1.0 / (double(r) * r)));
        }
    }
    m.basis = std::move(tabs);
    return m;
}

SparseOperator permutation_matrix(const YoungDiagram& shape, const Permutation& g) {
    if (g.size() != shape.size()) throw std::invalid_argument("permutation size mismatch");
    auto factors = g.adjacentFactorization();
    SparseOperator acc = SparseOperator::identity(static_cast<int>(dim_irrep(shape)));
    for (int f : factors) acc = acc.multiply(coxeter_generator_matrix(shape, f));
    acc.basis = enumerate_tableaux(shape);
    return acc;
}

SparseOperator yjm_matrix(const YoungDiagram& shape, int i) {
    if (i < 1 || i > shape.size()) throw std::out_of_range("YJM index out of range");
    auto tabs = enumerate_tableaux(shape);
    SparseOperator m(static_cast<int>(tabs.size()), static_cast<int>(tabs.size()));
    for (std::size_t a = 0; a < tabs.size(); ++a)
        m.add(static_cast<int>(a), static_cast<int>(a), static_cast<double>(tabs[a].contentOf(i)));
    m.basis = std::move(tabs);
    return m;
}

}  // namespace swlab
