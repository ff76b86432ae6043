#include "schubert/lorentz.hpp"

#include <algorithm>
#include <functional>

namespace schubert {

SupportSet::SupportSet(std::vector<Exponents> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("support set must be nonempty");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    degree_ = total_degree(points_.front());
    const std::size_t n = points_.front().size();
    for (const Exponents& p : points_) {
        if (p.size() != n) throw DimensionError("support points have different lengths");
        if (total_degree(p) != degree_) throw NotHomogeneousError("support points have different degrees");
    }
}

bool SupportSet::contains(const Exponents& e) const { return std::binary_search(points_.begin(), points_.end(), e); }

bool is_m_convex(const SupportSet& s) {
    const auto& pts = s.points();
    const std::size_t n = pts.front().size();
    Exponents moved;
    for (const Exponents& a : pts) {
        for (const Exponents& b : pts) {
            for (std::size_t i = 0; i < n; ++i) {
                if (a[i] <= b[i]) continue;
                bool exchanged = false;
                for (std::size_t j = 0; j < n && !exchanged; ++j) {
                    if (a[j] >= b[j]) continue;
                    moved = a;
                    --moved[i];
                    ++moved[j];
                    exchanged = s.contains(moved);
                }
                if (!exchanged) return false;
            }
        }
    }
    return true;
}

SymmetricRationalMatrix::SymmetricRationalMatrix(const std::vector<std::vector<BigRational>>& rows)
    : n_(rows.size()), entries_(rows.size() * rows.size()) {
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_) throw std::invalid_argument("matrix is not square");
        for (std::size_t j = 0; j < n_; ++j) entries_[i * n_ + j] = rows[i][j];
    }
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (entries_[i * n_ + j] != entries_[j * n_ + i]) throw std::invalid_argument("matrix is not symmetric");
}

void SymmetricRationalMatrix::set(std::size_t i, std::size_t j, const BigRational& v) {
    entries_[i * n_ + j] = v;
    entries_[j * n_ + i] = v;
}

std::vector<BigRational> characteristic_polynomial(const SymmetricRationalMatrix& h) {
    const std::size_t n = h.size();
    std::vector<BigRational> p{1};
    // Grow the leading principal submatrix one row/column at a time:
    //   A_{k+1} = [[A_k, c], [r, a]],
    // p_{k+1} = T p_k with T lower-triangular Toeplitz on
    //   (1, -a, -r c, -r A_k c, ..., -r A_k^{k-1} c).
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<BigRational> toeplitz{1, -h(k, k)};
        std::vector<BigRational> v(k);
        for (std::size_t i = 0; i < k; ++i) v[i] = h(i, k);
        for (std::size_t power = 0; power < k; ++power) {
            BigRational dot = 0;
            for (std::size_t i = 0; i < k; ++i) dot += h(k, i) * v[i];
            toeplitz.push_back(-dot);
            std::vector<BigRational> next(k, 0);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) next[i] += h(i, j) * v[j];
            v = std::move(next);
        }
        std::vector<BigRational> q(k + 2, 0);
        for (std::size_t i = 0; i < k + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, k); ++j) q[i] += toeplitz[i - j] * p[j];
        p = std::move(q);
    }
    return p;
}

namespace {

template <typename Sequence>
std::size_t sign_variations(const Sequence& coeffs) {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& c : coeffs) {
        const int s = c > 0 ? 1 : (c < 0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

Inertia inertia(const SymmetricRationalMatrix& h) {
    const auto p = characteristic_polynomial(h);
    const std::size_t n = h.size();
    Inertia out;
    // p[i] multiplies lambda^{n-i}; zero roots are the vanishing low-order coefficients.
    while (out.zero < n && p[n - out.zero] == 0) ++out.zero;
    out.positive = sign_variations(p);
    std::vector<BigRational> mirrored(p.begin(), p.end());
    for (std::size_t i = 0; i <= n; ++i)
        if ((n - i) % 2 == 1) mirrored[i] = -mirrored[i];
    out.negative = sign_variations(mirrored);
    return out;
}

std::size_t positive_eigenvalue_count(const SymmetricRationalMatrix& h) { return inertia(h).positive; }

RatPoly to_rational(const Poly& f) {
    RatPoly out(f.nvars());
    for (const auto& [e, c] : f.terms()) out.add_term(e, BigRational(c));
    return out;
}

SymmetricRationalMatrix derivative_hessian(const RatPoly& f, const Exponents& mu) {
    const std::size_t n = f.nvars();
    SymmetricRationalMatrix h(n);
    Exponents e = mu;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            ++e[i];
            ++e[j];
            const BigRational c = f.coefficient(e);
            if (c != 0) {
                BigInt factorial = 1;
                for (unsigned m : e)
                    for (unsigned t = 2; t <= m; ++t) factorial *= t;
                h.set(i, j, c * factorial);
            }
            --e[i];
            --e[j];
        }
    }
    return h;
}

bool is_lorentzian(const RatPoly& f, const LorentzGuard& guard) {
    if (f.is_zero()) return true;
    if (!f.has_nonnegative_coefficients()) return false;
    const long degree = f.homogeneous_degree();
    if (degree < 0) return false;
    if (degree <= 1) return true;
    const std::size_t n = f.nvars();
    if (static_cast<unsigned long>(degree) > guard.max_degree || n > guard.max_vars)
        throw RangeError("polynomial exceeds the Lorentzian checker's degree/variable guard");

    if (!is_m_convex(SupportSet::of(f))) return false;

    // Every mu with |mu| = degree - 2, enumerated recursively.
    Exponents mu(n, 0);
    std::function<bool(std::size_t, unsigned)> all_hessians_ok = [&](std::size_t i, unsigned remaining) {
        if (i + 1 == n) {
            mu[i] = remaining;
            const bool ok = positive_eigenvalue_count(derivative_hessian(f, mu)) <= 1;
            mu[i] = 0;
            return ok;
        }
        for (unsigned v = 0; v <= remaining; ++v) {
            mu[i] = v;
            if (!all_hessians_ok(i + 1, remaining - v)) {
                mu[i] = 0;
                return false;
            }
        }
        mu[i] = 0;
        return true;
    };
    return all_hessians_ok(0, static_cast<unsigned>(degree - 2));
}

bool is_lorentzian(const Poly& f, const LorentzGuard& guard) { return is_lorentzian(to_rational(f), guard); }

}  // namespace schubert
