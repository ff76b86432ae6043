#pragma once

#include <cstddef>
#include <vector>

#include "schubert/poly.hpp"

namespace schubert {

/// Nonempty set of exponent vectors sharing one total degree.
class SupportSet {
public:
    // Throws NotHomogeneousError on unequal degrees and std::invalid_argument when empty.
    explicit SupportSet(std::vector<Exponents> points);

    template <typename Coef>
    static SupportSet of(const BasicPoly<Coef>& f) {
        std::vector<Exponents> points;
        for (const auto& [e, c] : f.terms()) points.push_back(e);
        return SupportSet(std::move(points));
    }

    const std::vector<Exponents>& points() const { return points_; }
    unsigned degree() const { return degree_; }
    bool contains(const Exponents& e) const;

private:
    std::vector<Exponents> points_;  // sorted, unique
    unsigned degree_ = 0;
};

// Exchange axiom: for a, b in S and a_i > b_i there is j with a_j < b_j and a - e_i + e_j in S.
bool is_m_convex(const SupportSet& s);

class SymmetricRationalMatrix {
public:
    explicit SymmetricRationalMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}
    // Throws std::invalid_argument unless rows form a symmetric square matrix.
    explicit SymmetricRationalMatrix(const std::vector<std::vector<BigRational>>& rows);

    std::size_t size() const { return n_; }
    const BigRational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    // Writes both (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, const BigRational& v);

private:
    std::size_t n_;
    std::vector<BigRational> entries_;
};

// Coefficients of det(lambda I - H), highest degree first (leading 1), by the
// division-free Berkowitz recursion.
std::vector<BigRational> characteristic_polynomial(const SymmetricRationalMatrix& h);

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};

// Exact eigenvalue sign counts. Descartes' rule is exact here because a
// symmetric matrix has only real eigenvalues.
Inertia inertia(const SymmetricRationalMatrix& h);
std::size_t positive_eigenvalue_count(const SymmetricRationalMatrix& h);

struct LorentzGuard {
    unsigned max_degree = 8;
    std::size_t max_vars = 6;
};

// Hessian of d^mu f for |mu| = deg f - 2: entry (i, j) is the coefficient of
// x^{mu + e_i + e_j} times (mu + e_i + e_j)!.
SymmetricRationalMatrix derivative_hessian(const RatPoly& f, const Exponents& mu);

// Homogeneous with nonnegative coefficients, M-convex support, and every
// (d-2)-th partial derivative has a Hessian with at most one positive
// eigenvalue. Throws RangeError past the guard.
bool is_lorentzian(const Poly& f, const LorentzGuard& guard = {});
bool is_lorentzian(const RatPoly& f, const LorentzGuard& guard = {});

RatPoly to_rational(const Poly& f);

}  // namespace schubert
