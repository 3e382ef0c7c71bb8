#include "swlab/diagrams.hpp"

#include <algorithm>

namespace swlab {

YoungDiagram StandardTableau::shape() const {
    int r1 = 0, r2 = 0;
    for (auto c : word) (c == 1 ? r1 : r2)++;
    return {r1, r2};
}

bool StandardTableau::isValid() const {
    int r1 = 0, r2 = 0;
    for (auto c : word) {
        if (c != 1 && c != 2) return false;
        (c == 1 ? r1 : r2)++;
        if (r2 > r1) return false;
    }
    return true;
}

StandardTableau StandardTableau::prefix(int m) const {
    if (m < 0 || m > level()) throw std::out_of_range("prefix length out of range");
    return StandardTableau(RowWord(word.begin(), word.begin() + m));
}

int StandardTableau::colOf(int i) const {
    if (i < 1 || i > level()) throw std::out_of_range("tableau entry out of range");
    int r = word[i - 1], col = 0;
    for (int j = 0; j < i; ++j)
        if (word[j] == r) ++col;
    return col;
}

std::string StandardTableau::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(int(word[i]));
    }
    return s + "]";
}

StandardTableau extend(const StandardTableau& t, const ExtensionPattern& e) {
    StandardTableau out = t;
    for (auto c : e.cells) out.word.push_back(c);
    if (!out.isValid()) throw std::invalid_argument("extension violates ballot condition");
    return out;
}

std::vector<YoungDiagram> enumerate_two_row_diagrams(int n) {
    if (n < 0) throw std::invalid_argument("negative cell count");
    std::vector<YoungDiagram> out;
    for (int r2 = 0; 2 * r2 <= n; ++r2) out.push_back({n - r2, r2});
    return out;
}

std::vector<StandardTableau> enumerate_tableaux(const YoungDiagram& shape) {
    if (!shape.valid()) throw std::invalid_argument("invalid shape");
    std::vector<StandardTableau> out;
    RowWord w;
    auto rec = [&](auto&& self, int r1, int r2) -> void {
        if (r1 + r2 == shape.size()) {
            out.emplace_back(w);
            return;
        }
        if (r1 < shape.row1) {
            w.push_back(1);
            self(self, r1 + 1, r2);
            w.pop_back();
        }
        if (r2 < shape.row2 && r2 < r1) {
            w.push_back(2);
            self(self, r1, r2 + 1);
            w.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::int64_t dim_irrep(const YoungDiagram& shape) {
    if (!shape.valid()) throw std::invalid_argument("invalid shape");
    int n = shape.size();
    return binomial(n, shape.row2) - binomial(n, shape.row2 - 1);
}

int axial_distance(const StandardTableau& t, int i) {
    if (i < 1 || i >= t.level()) throw std::out_of_range("axial distance index out of range");
    return t.contentOf(i + 1) - t.contentOf(i);
}

bool is_nice(const YoungDiagram& lambda, const YoungDiagram& mu) {
    if (mu.size() != lambda.size() + 2) throw std::invalid_argument("sizes must differ by 2");
    return lambda.valid() && mu.valid() &&
           mu.row1 == lambda.row1 + 1 && mu.row2 == lambda.row2 + 1;
}

bool is_proper(const StandardTableau& t) {
    int n = t.level();
    if (n <= 2) return true;
    return t.word[n - 1] == t.word[n - 2];
}

std::vector<ExtensionPattern> paths_between(const YoungDiagram& lambda,
                                            const YoungDiagram& mu) {
    if (!lambda.valid() || !mu.valid() || !mu.contains(lambda))
        throw std::invalid_argument("lambda is not contained in mu");
    std::vector<ExtensionPattern> out;
    RowWord w;
    auto rec = [&](auto&& self, int r1, int r2) -> void {
        if (r1 == mu.row1 && r2 == mu.row2) {
            out.push_back({w});
            return;
        }
        if (r1 < mu.row1) {
            w.push_back(1);
            self(self, r1 + 1, r2);
            w.pop_back();
        }
        if (r2 < mu.row2 && r2 < r1) {
            w.push_back(2);
            self(self, r1, r2 + 1);
            w.pop_back();
        }
    };
    rec(rec, lambda.row1, lambda.row2);
    return out;
}

}  // namespace swlab
