#pragma once

// Two-row Young diagrams and standard tableaux, encoded as paths in the
// Young graph. A tableau is stored as its row word: entry i of the word
// gives the row (1 or 2) containing i.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace swlab {

struct YoungDiagram {
    int row1 = 0;
    int row2 = 0;

    int size() const { return row1 + row2; }
    int diff() const { return row1 - row2; }  // k = lambda_1 - lambda_2
    bool valid() const { return row1 >= row2 && row2 >= 0; }
    bool contains(const YoungDiagram& other) const {
        return row1 >= other.row1 && row2 >= other.row2;
    }
    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
    friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;
    std::string str() const {
        return "(" + std::to_string(row1) + "," + std::to_string(row2) + ")";
    }
};

using RowWord = std::vector<std::uint8_t>;  // entries in {1,2}

struct StandardTableau {
    RowWord word;

    StandardTableau() = default;
    explicit StandardTableau(RowWord w) : word(std::move(w)) {}
    StandardTableau(std::initializer_list<int> w) {
        for (int r : w) word.push_back(static_cast<std::uint8_t>(r));
    }

    int level() const { return static_cast<int>(word.size()); }
    YoungDiagram shape() const;
    bool isValid() const;  // ballot condition on every prefix
    StandardTableau prefix(int m) const;

    // row/column/content of the cell containing entry i (1-based)
    int rowOf(int i) const { return word.at(i - 1); }
    int colOf(int i) const;
    int contentOf(int i) const { return colOf(i) - rowOf(i); }

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
    friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;
    std::string str() const;
};

// Skew extension: a row word appended on top of an existing tableau.
// Two-cell nice steps are P21 (row 2 then row 1) and P12 (row 1 then row 2).
struct ExtensionPattern {
    RowWord cells;

    static ExtensionPattern P21() { return {{2, 1}}; }
    static ExtensionPattern P12() { return {{1, 2}}; }
    bool isP21() const { return cells == RowWord{2, 1}; }
    bool isP12() const { return cells == RowWord{1, 2}; }

    friend bool operator==(const ExtensionPattern&, const ExtensionPattern&) = default;
    friend auto operator<=>(const ExtensionPattern&, const ExtensionPattern&) = default;
};

// Appends the pattern; throws if the result violates the ballot condition.
StandardTableau extend(const StandardTableau& t, const ExtensionPattern& e);

// All diagrams with N cells and at most two rows, in decreasing row1 order.
std::vector<YoungDiagram> enumerate_two_row_diagrams(int n);

// All standard tableaux of the given shape, lexicographic in the row word.
std::vector<StandardTableau> enumerate_tableaux(const YoungDiagram& shape);

// dim pi_lambda = C(N, row2) - C(N, row2 - 1)
std::int64_t dim_irrep(const YoungDiagram& shape);

std::int64_t binomial(int n, int k);

// content(i+1) - content(i); |r| >= 1 always
int axial_distance(const StandardTableau& t, int i);

// mu = lambda + one cell in each row
bool is_nice(const YoungDiagram& lambda, const YoungDiagram& mu);

// last two entries in the same row, or level <= 2 (minimal-level convention)
bool is_proper(const StandardTableau& t);

// All skew row words from lambda to mu, lexicographic order.
std::vector<ExtensionPattern> paths_between(const YoungDiagram& lambda,
                                            const YoungDiagram& mu);

}  // namespace swlab
