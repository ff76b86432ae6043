#include "schubert/poly.hpp"

#include <numeric>
#include <sstream>

namespace schubert {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

Poly divided_difference(const Poly& f, std::size_t i) {
    f.check_operator_index(i);
    const std::size_t lo = i - 1;
    const std::size_t hi = i;
    Poly out(f.nvars());
    for (const auto& [a, c] : f.terms()) {
        const unsigned p = a[lo];
        const unsigned q = a[hi];
        if (p == q) continue;
        // x_i^p x_{i+1}^q - x_i^q x_{i+1}^p over (x_i - x_{i+1}) equals
        //   (x_i x_{i+1})^q * sum_{k=0}^{p-q-1} x_i^{p-q-1-k} x_{i+1}^k   if p > q,
        // and the negation of the mirrored sum otherwise.
        const unsigned base = std::min(p, q);
        const unsigned span = (p > q ? p - q : q - p) - 1;
        const BigInt sign = p > q ? BigInt(1) : BigInt(-1);
        Exponents e = a;
        for (unsigned k = 0; k <= span; ++k) {
            e[lo] = base + span - k;
            e[hi] = base + k;
            out.add_term(e, sign * c);
        }
    }
    return out;
}

Poly demazure(const Poly& f, std::size_t i) {
    f.check_operator_index(i);
    Poly shifted(f.nvars());
    for (const auto& [a, c] : f.terms()) {
        Exponents e = a;
        ++e[i - 1];
        shifted.add_term(e, c);
    }
    return divided_difference(shifted, i);
}

RatPoly normalize_n(const Poly& f) {
    RatPoly out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        BigInt denom = 1;
        for (unsigned m : e)
            for (unsigned k = 2; k <= m; ++k) denom *= k;
        out.add_term(e, BigRational(c, denom));
    }
    return out;
}

namespace {

template <typename Coef>
std::string render(const BasicPoly<Coef>& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        const Coef magnitude = negative ? Coef(-c) : c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const std::string mono = to_string(e);
        if (mono == "1") {
            os << magnitude;
        } else if (magnitude == 1) {
            os << mono;
        } else {
            os << magnitude << '*' << mono;
        }
    }
    return os.str();
}

}  // namespace

std::string to_string(const Exponents& e) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << 'x' << (i + 1);
        if (e[i] > 1) os << '^' << e[i];
    }
    return first ? "1" : os.str();
}

std::string to_string(const Poly& f) { return render(f); }
std::string to_string(const RatPoly& f) { return render(f); }

}  // namespace schubert
