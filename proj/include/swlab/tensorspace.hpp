#pragma once

// The concrete space (C^2)^{tensor N}: factor permutations, the summed sl2
// action and its Casimir, and the adapted basis built by iterated two-spin
// coupling, on which permutations act through Young's orthogonal form.

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "swlab/diagrams.hpp"
#include "swlab/orthoform.hpp"

namespace swlab {

using Amplitude = std::complex<double>;

// Bitstring basis, little-endian: bit (i-1) of the key holds factor i,
// 0 <-> e1 (spin up), 1 <-> e2 (spin down).
struct TensorVector {
    int n = 0;
    std::map<std::uint64_t, Amplitude> amps;

    static TensorVector basisVector(int n, std::uint64_t bits);
    static TensorVector singletPair();  // v0 = (e1 x e2 - e2 x e1)/sqrt(2), n = 2

    void add(std::uint64_t bits, Amplitude a);
    void prune(double tol = kZeroTol);
    double norm() const;
    double squaredNorm() const;
    TensorVector& scale(Amplitude s);
    TensorVector plus(const TensorVector& other, Amplitude scale = 1.0) const;
    Amplitude inner(const TensorVector& other) const;  // <this|other>, conjugate-linear first
};

TensorVector tensor_product(const TensorVector& a, const TensorVector& b);

// (g v)(b) = v(b o g) with (b o g)(i) = b(g(i)); factor-permutation action
TensorVector permute_tensor(const TensorVector& v, const Permutation& g);

enum class Sl2Gen { E, F, H };  // E: e2 -> e1, F: e1 -> e2, H: e1 -> +e1, e2 -> -e2

TensorVector sl2_apply(const TensorVector& v, Sl2Gen gen);

// Squared norms of projections onto Casimir eigenspaces, k(k+2)/2 on M_{k+1}
std::vector<std::pair<int, double>> spin_components(const TensorVector& v);

// Dimension of the joint kernel of E, F, H on (C^2)^{tensor N}; Catalan C_{N/2}
std::int64_t invariant_multiplicity(int n);

struct AdaptedLabel {
    StandardTableau tableau;
    int m = 0;  // 2 * (spin z-component), |m| <= diff(shape), same parity

    friend bool operator==(const AdaptedLabel&, const AdaptedLabel&) = default;
    friend auto operator<=>(const AdaptedLabel&, const AdaptedLabel&) = default;
};

// Orthonormal basis of (C^2)^{tensor N} labeled by (tableau, weight). Built by
// coupling one spin-1/2 factor at a time with Condon-Shortley phases.
struct AdaptedBasis {
    int n = 0;
    std::vector<AdaptedLabel> labels;   // sorted by (tableau word, m)
    std::vector<TensorVector> vectors;  // same order, unit norm

    int indexOf(const StandardTableau& t, int m) const;
    const TensorVector& vectorOf(const StandardTableau& t, int m) const;
};

AdaptedBasis adapted_basis_unitary(int n);

}  // namespace swlab
