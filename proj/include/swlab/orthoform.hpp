#pragma once

// Young's orthogonal form on the standard-tableau basis of a two-row irrep:
// Coxeter generator matrices, arbitrary permutations via adjacent-transposition
// factorization, and the diagonal YJM elements.

#include <cmath>
#include <functional>
#include <vector>

#include "swlab/diagrams.hpp"

namespace swlab {

inline constexpr double kZeroTol = 1e-14;  // dropped on construction

// Real sparse operator, row-major adjacency. Rectangular in general
// (block isometries); square operators report dim() = rows.
class SparseOperator {
  public:
    SparseOperator() = default;
    SparseOperator(int rows, int cols) : rows_(rows), cols_(cols), rowData_(rows) {}

    static SparseOperator identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int dim() const { return rows_; }

    void add(int r, int c, double v);         // accumulates
    double entry(int r, int c) const;
    std::size_t nnz() const;
    void prune(double tol = kZeroTol);

    const std::vector<std::pair<int, double>>& row(int r) const { return rowData_[r]; }

    // y = A x  (x, y dense; y overwritten)
    void apply(const double* x, double* y) const;
    std::vector<double> apply(const std::vector<double>& x) const;
    // y = A^T x
    std::vector<double> applyTranspose(const std::vector<double>& x) const;

    SparseOperator multiply(const SparseOperator& other) const;  // this * other
    SparseOperator transpose() const;
    SparseOperator plus(const SparseOperator& other, double scale = 1.0) const;
    SparseOperator scaled(double s) const;

    double maxAbsDiff(const SparseOperator& other) const;
    double maxAbsDiffIdentity() const;

    std::vector<StandardTableau> basis;  // optional labels, row order

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::vector<std::pair<int, double>>> rowData_;  // sorted by col
};

struct Permutation {
    std::vector<int> images;  // 1-based, images[i-1] = g(i)

    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);
    int size() const { return static_cast<int>(images.size()); }
    bool isBijection() const;
    // composition (this after other): (a.compose(b))(i) = a(b(i))
    Permutation compose(const Permutation& other) const;
    // adjacent-transposition factorization (selection sort); indices i mean (i, i+1)
    std::vector<int> adjacentFactorization() const;
};

// sigma_i in Young's orthogonal form: diagonal 1/r, off-diagonal sqrt(1 - r^-2)
SparseOperator coxeter_generator_matrix(const YoungDiagram& shape, int i);

// product of generator matrices over an adjacent-transposition factorization
SparseOperator permutation_matrix(const YoungDiagram& shape, const Permutation& g);

// YJM element X_i = sum_{j<i} (j,i): diagonal with the content of entry i
SparseOperator yjm_matrix(const YoungDiagram& shape, int i);

}  // namespace swlab
