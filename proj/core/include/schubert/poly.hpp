#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schubert/errors.hpp"

namespace schubert {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exponent of x_i sits at position i-1.
using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

/// Sparse polynomial in x_1..x_n with exact coefficients.
///
/// Terms are kept in a map keyed by exponent vector, so iteration is always
/// in ascending lexicographic order and no stored coefficient is zero.
template <typename Coef>
class BasicPoly {
public:
    using Terms = std::map<Exponents, Coef>;

    BasicPoly() = default;
    explicit BasicPoly(std::size_t nvars) : n_(nvars) {}

    static BasicPoly constant(std::size_t nvars, const Coef& c) {
        BasicPoly p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }

    static BasicPoly monomial(Exponents e, const Coef& c = Coef(1)) {
        BasicPoly p(e.size());
        p.add_term(e, c);
        return p;
    }

    // x_i, 1-based.
    static BasicPoly variable(std::size_t nvars, std::size_t i) {
        if (i < 1 || i > nvars) throw IndexError("variable index out of range");
        Exponents e(nvars, 0);
        e[i - 1] = 1;
        return monomial(std::move(e));
    }

    std::size_t nvars() const { return n_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Coef coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coef(0) : it->second;
    }

    void add_term(const Exponents& e, const Coef& c) {
        if (e.size() != n_) throw DimensionError("exponent vector length does not match variable count");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Total degree when every term has the same degree; -1 for the zero polynomial
    // and -2 when the polynomial is not homogeneous.
    long homogeneous_degree() const {
        if (terms_.empty()) return -1;
        const unsigned d = total_degree(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != d) return -2;
        return d;
    }

    bool has_nonnegative_coefficients() const {
        for (const auto& [e, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    // Re-embed into m variables; shrinking is allowed only over unused variables.
    BasicPoly resized(std::size_t m) const {
        BasicPoly out(m);
        for (const auto& [e, c] : terms_) {
            Exponents f(m, 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i < m) {
                    f[i] = e[i];
                } else if (e[i] != 0) {
                    throw DimensionError("cannot drop a variable that occurs in the polynomial");
                }
            }
            out.terms_.emplace(std::move(f), c);
        }
        return out;
    }

    // s_i f: exchange x_i and x_{i+1} (1-based).
    BasicPoly swapped(std::size_t i) const {
        check_operator_index(i);
        BasicPoly out(n_);
        for (const auto& [a, c] : terms_) {
            Exponents e = a;
            std::swap(e[i - 1], e[i]);
            out.terms_.emplace(std::move(e), c);
        }
        return out;
    }

    void check_operator_index(std::size_t i) const {
        if (i < 1 || i + 1 > n_) throw IndexError("operator index must satisfy 1 <= i <= n-1");
    }

    BasicPoly& operator+=(const BasicPoly& g) {
        check_same_space(g);
        for (const auto& [e, c] : g.terms_) add_term(e, c);
        return *this;
    }

    BasicPoly& operator-=(const BasicPoly& g) {
        check_same_space(g);
        for (const auto& [e, c] : g.terms_) add_term(e, -c);
        return *this;
    }

    BasicPoly& operator*=(const Coef& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend BasicPoly operator+(BasicPoly f, const BasicPoly& g) { return f += g; }
    friend BasicPoly operator-(BasicPoly f, const BasicPoly& g) { return f -= g; }
    friend BasicPoly operator-(BasicPoly f) { return f *= Coef(-1); }
    friend BasicPoly operator*(BasicPoly f, const Coef& s) { return f *= s; }

    friend BasicPoly operator*(const BasicPoly& f, const BasicPoly& g) {
        f.check_same_space(g);
        BasicPoly out(f.n_);
        Exponents e(f.n_);
        for (const auto& [a, ca] : f.terms_) {
            for (const auto& [b, cb] : g.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const BasicPoly& f, const BasicPoly& g) {
        return f.n_ == g.n_ && f.terms_ == g.terms_;
    }

    void check_same_space(const BasicPoly& g) const {
        if (n_ != g.n_) throw DimensionError("polynomials live in different variable counts");
    }

private:
    std::size_t n_ = 0;
    Terms terms_;
};

using Poly = BasicPoly<BigInt>;
using RatPoly = BasicPoly<BigRational>;

// (f - s_i f) / (x_i - x_{i+1}), computed termwise from the closed-form
// quotient of x_i^p x_{i+1}^q - x_i^q x_{i+1}^p.
Poly divided_difference(const Poly& f, std::size_t i);

// pi_i f = d_i(x_i f).
Poly demazure(const Poly& f, std::size_t i);

// x^mu -> x^mu / mu!
RatPoly normalize_n(const Poly& f);

template <typename Coef>
bool coeffwise_leq(const BasicPoly<Coef>& f, const BasicPoly<Coef>& g) {
    f.check_same_space(g);
    for (const auto& [e, c] : f.terms())
        if (c > g.coefficient(e)) return false;
    // Terms of g that are absent from f compare against an implicit zero.
    for (const auto& [e, c] : g.terms())
        if (c < 0 && f.coefficient(e) > c) return false;
    return true;
}

// "x1^2*x2 + 2*x1*x2*x3 - x3", leading (lexicographically largest) term first.
std::string to_string(const Poly& f);
std::string to_string(const RatPoly& f);
std::string to_string(const Exponents& e);

}  // namespace schubert
