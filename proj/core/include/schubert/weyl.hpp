#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubert/combinat.hpp"
#include "schubert/diagram.hpp"
#include "schubert/poly.hpp"

namespace schubert {

// One factor y_{row,col} of the generic upper-triangular matrix Y; row <= col.
struct YVar {
    int row = 0;
    int col = 0;
    auto operator<=>(const YVar&) const = default;
};

/// A product of y_{ij} with i <= j, stored as a sorted factor list.
class YMonomial {
public:
    YMonomial() = default;
    explicit YMonomial(std::vector<YVar> factors);

    const std::vector<YVar>& factors() const { return factors_; }
    std::size_t degree() const { return factors_.size(); }

    friend YMonomial operator*(const YMonomial& a, const YMonomial& b);
    auto operator<=>(const YMonomial&) const = default;

private:
    std::vector<YVar> factors_;
};

class YPoly {
public:
    using Terms = std::map<YMonomial, BigInt>;

    YPoly() = default;
    static YPoly one() {
        YPoly p;
        p.add_term(YMonomial{}, 1);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const YMonomial& m, const BigInt& c);

    YPoly& operator+=(const YPoly& g);
    YPoly& operator-=(const YPoly& g);
    friend YPoly operator+(YPoly f, const YPoly& g) { return f += g; }
    friend YPoly operator-(YPoly f, const YPoly& g) { return f -= g; }
    friend YPoly operator*(const YPoly& f, const YPoly& g);
    bool operator==(const YPoly&) const = default;

private:
    Terms terms_;
};

// "y12*y23 - y13*y22"
std::string to_string(const YPoly& f);

// det(Y^R_S) with rows R and columns S. Zero exactly when R is not <= S.
YPoly minor(const Column& rows, const Column& cols);

// f_C(Y) = prod_j det(Y^{C_j}_{D_j}).
YPoly f_c(const Diagram& c, const Diagram& d);

// Exact rank over Q of the coefficient matrix of the given polynomials.
std::size_t span_rank(const std::vector<YPoly>& polys);

// Rank of an integer matrix by fraction-free elimination.
std::size_t integer_rank(std::vector<std::vector<BigInt>> m);

struct WeightSpaceReport {
    Exponents weight;
    std::vector<std::pair<Diagram, YPoly>> members;
    std::size_t rank = 0;
};

// The span of f_C over C <= D with x^C equal to the weight.
WeightSpaceReport weight_space_rank(const Diagram& d, const Exponents& weight);

// sum over weights of rank(weight) * x^weight.
Poly dual_character(const Diagram& d);

/// Positions i0 < k0 < p0, q0 of an occurrence of 1432 or 1423.
struct PatternOccurrence {
    std::size_t i0 = 0;
    std::size_t k0 = 0;
    std::size_t p0 = 0;
    std::size_t q0 = 0;
    auto operator<=>(const PatternOccurrence&) const = default;
};

// Largest i0, then smallest k0, then the lexicographically smallest (p0, q0).
std::optional<PatternOccurrence> canonical_occurrence(const Permutation& w);

/// Rows i0 < k0 and columns j0 < l0 that frame the local configuration:
/// column j0 holds rows i0+1..k0 but not i0, column l0 holds k0 but none of i0..k0-1.
struct FamilyAnchor {
    std::size_t i0 = 0;
    std::size_t k0 = 0;
    std::size_t j0 = 0;
    std::size_t l0 = 0;
};

// C^(m) for m = 1..k0-i0+1: row k0 of column l0 moves up to i0+m-1 while
// column j0 trades row i0+m-1 for i0. Throws InvalidOccurrenceError when the
// anchor does not frame the configuration above.
std::vector<Diagram> dependent_family(const Diagram& d, const FamilyAnchor& anchor);

// Throws InvalidOccurrenceError unless occ is an occurrence with the extremal
// choice of i0 and k0.
std::vector<Diagram> dependent_family(const Permutation& w, const PatternOccurrence& occ);

// Anchor from the (0,2) occurrence with largest i0, then smallest k0.
std::optional<FamilyAnchor> key_family_anchor(const Composition& a);

struct DependenceGuard {
    int max_b = 7;
};

// g_m = y_{mb} det(Y^{[b] \ {m}}_{[2,b]}); checks g_b = g_{b-1} - g_{b-2} + ... + (-1)^b g_1.
bool verify_dependence_identity(int b, const DependenceGuard& guard = {});

// D'_j = D_j \ [a_j] where a_j is the largest a with [a] inside D_j.
std::vector<Column> reduced_columns(const Diagram& d);
bool reduced_columns_disjoint(const Diagram& d);

}  // namespace schubert
