#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/combinat.hpp"
#include "schubert/poly.hpp"

namespace schubert {

// Row indices (1-based) of the boxes in one column, strictly increasing.
using Column = std::vector<int>;

/// n columns of boxes in an n x n grid.
class Diagram {
public:
    Diagram() = default;
    Diagram(std::size_t n, std::vector<Column> columns);
    static Diagram empty(std::size_t n) { return Diagram(n, std::vector<Column>(n)); }

    std::size_t size() const { return n_; }
    const std::vector<Column>& columns() const { return columns_; }
    // D_j, 1-based.
    const Column& column(std::size_t j) const { return columns_[j - 1]; }
    std::size_t box_count() const;

    // "[[],[2,3],[2],[]]"
    std::string to_string() const;

    bool operator==(const Diagram&) const = default;
    auto operator<=>(const Diagram&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Column> columns_;
};

// Accepts the text form produced by Diagram::to_string (whitespace allowed).
Diagram parse_diagram(std::string_view text);

// D(w)_j = { i : w_i > j, i < w^{-1}(j) }
Diagram rothe_diagram(const Permutation& w);

// Row i holds its first alpha_i boxes; the grid is max(len, max part) wide.
Diagram skyline_diagram(const Composition& a);

// |C_j| = |D_j| and the k-th least element of C_j is at most that of D_j.
bool column_leq(const Column& c, const Column& d);
bool diagram_leq(const Diagram& c, const Diagram& d);

// Every C_j <= D_j (the bases of the Schubert matroid of D_j), in lexicographic order.
std::vector<Column> column_bases(const Column& d);
BigInt count_column_bases(const Column& d);

// Cartesian product of per-column bases: columns left to right, each in lexicographic order.
void for_each_sub_diagram(const Diagram& d, const std::function<void(const Diagram&)>& visit);
std::vector<Diagram> enumerate_sub_diagrams(const Diagram& d);
BigInt count_sub_diagrams(const Diagram& d);

// x^C: exponent of x_i is the number of columns containing row i.
Exponents monomial_of(const Diagram& c);

Poly min_poly(const Diagram& d);
Poly max_poly(const Diagram& d);

}  // namespace schubert
