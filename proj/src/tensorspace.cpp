#include "swlab/tensorspace.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace swlab {

TensorVector TensorVector::basisVector(int n, std::uint64_t bits) {
    TensorVector v;
    v.n = n;
    v.amps[bits] = 1.0;
    return v;
}

TensorVector TensorVector::singletPair() {
    TensorVector v;
    v.n = 2;
    const double s = 1.0 / std::sqrt(2.0);
    v.amps[0b10] = s;   // e1 x e2: factor 1 up, factor 2 down
    v.amps[0b01] = -s;  // e2 x e1
    return v;
}

void TensorVector::add(std::uint64_t bits, Amplitude a) {
    auto& slot = amps[bits];
    slot += a;
    if (std::abs(slot) < kZeroTol) amps.erase(bits);
}

void TensorVector::prune(double tol) {
    std::erase_if(amps, [tol](const auto& e) { return std::abs(e.second) < tol; });
}

double TensorVector::squaredNorm() const {
    double s = 0;
    for (const auto& [b, a] : amps) s += std::norm(a);
    return s;
}

double TensorVector::norm() const { return std::sqrt(squaredNorm()); }

TensorVector& TensorVector::scale(Amplitude s) {
    for (auto& [b, a] : amps) a *= s;
    return *this;
}

TensorVector TensorVector::plus(const TensorVector& other, Amplitude scale) const {
    if (n != other.n) throw std::invalid_argument("tensor length mismatch");
    TensorVector out = *this;
    for (const auto& [b, a] : other.amps) out.add(b, scale * a);
    return out;
}

Amplitude TensorVector::inner(const TensorVector& other) const {
    if (n != other.n) throw std::invalid_argument("tensor length mismatch");
    const auto *small = &amps, *big = &other.amps;
    Amplitude s = 0;
    for (const auto& [b, a] : *small) {
        auto it = big->find(b);
        if (it != big->end()) s += std::conj(a) * it->second;
    }
    return s;
}

TensorVector tensor_product(const TensorVector& a, const TensorVector& b) {
    TensorVector out;
    out.n = a.n + b.n;
    for (const auto& [ba, va] : a.amps)
        for (const auto& [bb, vb] : b.amps) out.add(ba | (bb << a.n), va * vb);
    return out;
}

TensorVector permute_tensor(const TensorVector& v, const Permutation& g) {
    if (g.size() != v.n) throw std::invalid_argument("permutation size mismatch");
    if (!g.isBijection()) throw std::invalid_argument("not a permutation");
    TensorVector out;
    out.n = v.n;
    for (const auto& [a, amp] : v.amps) {
        // output bitstring b with b(g(i)) = a(i)
        std::uint64_t b = 0;
        for (int i = 1; i <= v.n; ++i)
            if ((a >> (i - 1)) & 1u) b |= std::uint64_t{1} << (g.images[i - 1] - 1);
        out.add(b, amp);
    }
    return out;
}

TensorVector sl2_apply(const TensorVector& v, Sl2Gen gen) {
    TensorVector out;
    out.n = v.n;
    for (const auto& [b, a] : v.amps) {
        switch (gen) {
            case Sl2Gen::H: {
                int down = std::popcount(b);
                out.add(b, a * double(v.n - 2 * down));
                break;
            }
            case Sl2Gen::E:  // e2 -> e1 at each factor: clear a set bit
                for (int i = 0; i < v.n; ++i)
                    if ((b >> i) & 1u) out.add(b ^ (std::uint64_t{1} << i), a);
                break;
            case Sl2Gen::F:  // e1 -> e2: set a clear bit
                for (int i = 0; i < v.n; ++i)
                    if (!((b >> i) & 1u)) out.add(b ^ (std::uint64_t{1} << i), a);
                break;
        }
    }
    return out;
}

namespace {

TensorVector casimir_apply(const TensorVector& v) {
    // C = EF + FE + H^2/2
    auto ef = sl2_apply(sl2_apply(v, Sl2Gen::F), Sl2Gen::E);
    auto fe = sl2_apply(sl2_apply(v, Sl2Gen::E), Sl2Gen::F);
    auto hh = sl2_apply(sl2_apply(v, Sl2Gen::H), Sl2Gen::H);
    return ef.plus(fe).plus(hh, 0.5);
}

}  // namespace

std::vector<std::pair<int, double>> spin_components(const TensorVector& v) {
    std::vector<int> ks;
    for (int k = v.n % 2; k <= v.n; k += 2) ks.push_back(k);
    std::vector<std::pair<int, double>> out;
    for (int k : ks) {
        double ck = 0.5 * k * (k + 2);
        // polynomial filter through the other admissible eigenvalues
        TensorVector w = v;
        for (int j : ks) {
            if (j == k) continue;
            double cj = 0.5 * j * (j + 2);
            w = casimir_apply(w).plus(w, -cj);
            w.scale(1.0 / (ck - cj));
            w.prune();
        }
        out.push_back({k, w.squaredNorm()});
    }
    return out;
}

std::int64_t invariant_multiplicity(int n) {
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("invariant multiplicity needs even N > 0");
    // weight-zero subspace: bitstrings with n/2 set bits; invariants = ker E there
    std::vector<std::uint64_t> zero, up;
    std::map<std::uint64_t, int> upIndex;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        int pc = std::popcount(b);
        if (pc == n / 2) zero.push_back(b);
        else if (pc == n / 2 - 1) up.push_back(b);
    }
    for (std::size_t i = 0; i < up.size(); ++i) upIndex[up[i]] = static_cast<int>(i);

    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(static_cast<int>(up.size()),
                                              static_cast<int>(zero.size()));
    for (std::size_t c = 0; c < zero.size(); ++c)
        for (int i = 0; i < n; ++i)
            if ((zero[c] >> i) & 1u)
                e(upIndex.at(zero[c] ^ (std::uint64_t{1} << i)), static_cast<int>(c)) += 1.0;

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(e);
    qr.setThreshold(1e-10);
    return static_cast<std::int64_t>(zero.size()) - qr.rank();
}

int AdaptedBasis::indexOf(const StandardTableau& t, int m) const {
    AdaptedLabel key{t, m};
    auto it = std::lower_bound(labels.begin(), labels.end(), key);
    if (it == labels.end() || !(*it == key)) throw std::out_of_range("label not in adapted basis");
    return static_cast<int>(it - labels.begin());
}

const TensorVector& AdaptedBasis::vectorOf(const StandardTableau& t, int m) const {
    return vectors[indexOf(t, m)];
}

AdaptedBasis adapted_basis_unitary(int n) {
    if (n < 1) throw std::invalid_argument("adapted basis needs N >= 1");
    AdaptedBasis cur;
    cur.n = 1;
    cur.labels = {{StandardTableau{1}, -1}, {StandardTableau{1}, 1}};
    cur.vectors = {TensorVector::basisVector(1, 1), TensorVector::basisVector(1, 0)};

    for (int level = 2; level <= n; ++level) {
        AdaptedBasis next;
        next.n = level;
        std::map<AdaptedLabel, TensorVector> built;
        for (std::size_t i = 0; i < cur.labels.size(); ++i) {
            const auto& [pt, pm] = cur.labels[i];
            int kp = pt.shape().diff();
            for (std::uint8_t row : {std::uint8_t{1}, std::uint8_t{2}}) {
                StandardTableau t = pt;
                t.word.push_back(row);
                if (!t.isValid()) continue;
                int k = t.shape().diff();  // kp + 1 (row 1) or kp - 1 (row 2)
                // factor bit: up (0) raises m by 1, down (1) lowers it
                for (int bit : {0, 1}) {
                    int m = pm + (bit == 0 ? 1 : -1);
                    if (std::abs(m) > k) continue;
                    // two-spin coupling j1 x 1/2 with Condon-Shortley signs,
                    // written in the integer variables k = 2J, m = 2M
                    double c;
                    if (k == kp + 1)
                        c = std::sqrt((bit == 0 ? kp + m + 1 : kp - m + 1) /
                                      (2.0 * (kp + 1)));
                    else
                        c = (bit == 0 ? -1.0 : 1.0) *
                            std::sqrt((bit == 0 ? kp - m + 1 : kp + m + 1) /
                                      (2.0 * (kp + 1)));
                    if (std::abs(c) < kZeroTol) continue;
                    TensorVector contrib = cur.vectors[i];
                    contrib.n = level;
                    if (bit == 1) {
                        TensorVector shifted;
                        shifted.n = level;
                        for (const auto& [b, a] : contrib.amps)
                            shifted.amps[b | (std::uint64_t{1} << (level - 1))] = a;
                        contrib = std::move(shifted);
                    }
                    contrib.scale(c);
                    auto& slot = built[{t, m}];
                    slot.n = level;
                    for (const auto& [b, a] : contrib.amps) slot.add(b, a);
                }
            }
        }
        for (auto& [label, vec] : built) {
            next.labels.push_back(label);
            next.vectors.push_back(std::move(vec));
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace swlab
