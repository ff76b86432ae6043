#include "schubert/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace schubert {

YMonomial::YMonomial(std::vector<YVar> factors) : factors_(std::move(factors)) {
    for (const YVar& v : factors_)
        if (v.row > v.col) throw std::invalid_argument("y_ij with i > j is identically zero");
    std::sort(factors_.begin(), factors_.end());
}

YMonomial operator*(const YMonomial& a, const YMonomial& b) {
    YMonomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
               std::back_inserter(out.factors_));
    return out;
}

void YPoly::add_term(const YMonomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

YPoly& YPoly::operator+=(const YPoly& g) {
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
}

YPoly& YPoly::operator-=(const YPoly& g) {
    for (const auto& [m, c] : g.terms_) add_term(m, -c);
    return *this;
}

YPoly operator*(const YPoly& f, const YPoly& g) {
    YPoly out;
    for (const auto& [a, ca] : f.terms_)
        for (const auto& [b, cb] : g.terms_) out.add_term(a * b, ca * cb);
    return out;
}

std::string to_string(const YPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const bool negative = c < 0;
        const BigInt magnitude = negative ? BigInt(-c) : c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        std::string mono;
        for (const YVar& v : m.factors()) {
            if (!mono.empty()) mono += '*';
            mono += 'y' + std::to_string(v.row) + std::to_string(v.col);
        }
        if (mono.empty()) {
            os << magnitude;
        } else if (magnitude == 1) {
            os << mono;
        } else {
            os << magnitude << '*' << mono;
        }
    }
    return os.str();
}

YPoly minor(const Column& rows, const Column& cols) {
    if (rows.size() != cols.size()) throw DimensionError("minor needs as many rows as columns");
    const std::size_t k = rows.size();
    YPoly out;
    std::vector<bool> used(k, false);
    std::vector<YVar> factors;
    factors.reserve(k);
    // Laplace expansion along successive rows; entries below the diagonal of Y
    // are structurally zero and pruned before descending.
    std::function<void(std::size_t, int)> expand = [&](std::size_t t, int sign) {
        if (t == k) {
            out.add_term(YMonomial(factors), sign);
            return;
        }
        int skipped = 0;  // unused columns to the left of the chosen one
        for (std::size_t c = 0; c < k; ++c) {
            if (used[c]) continue;
            if (rows[t] <= cols[c]) {
                used[c] = true;
                factors.push_back({rows[t], cols[c]});
                expand(t + 1, skipped % 2 == 0 ? sign : -sign);
                factors.pop_back();
                used[c] = false;
            }
            ++skipped;
        }
    };
    expand(0, 1);
    return out;
}

YPoly f_c(const Diagram& c, const Diagram& d) {
    if (c.size() != d.size()) throw DimensionError("diagrams have different grid sizes");
    YPoly out = YPoly::one();
    for (std::size_t j = 0; j < d.size(); ++j) {
        const Column& cj = c.columns()[j];
        const Column& dj = d.columns()[j];
        if (cj.size() != dj.size()) throw DimensionError("column sizes differ");
        if (dj.empty()) continue;
        out = out * minor(cj, dj);
        if (out.is_zero()) break;
    }
    return out;
}

std::size_t integer_rank(std::vector<std::vector<BigInt>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m.front().size();
    BigInt previous = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const BigInt& p = m[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                BigInt numerator = p * m[r][c] - m[r][col] * m[rank][c];
                BigInt remainder;
                boost::multiprecision::divide_qr(numerator, previous, m[r][c], remainder);
                if (remainder != 0) throw std::logic_error("fraction-free elimination produced an inexact quotient");
            }
            m[r][col] = 0;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

std::size_t span_rank(const std::vector<YPoly>& polys) {
    std::map<YMonomial, std::size_t> index;
    for (const YPoly& f : polys)
        for (const auto& [mono, c] : f.terms()) index.try_emplace(mono, index.size());
    std::vector<std::vector<BigInt>> m(polys.size(), std::vector<BigInt>(index.size(), 0));
    for (std::size_t r = 0; r < polys.size(); ++r)
        for (const auto& [mono, c] : polys[r].terms()) m[r][index.at(mono)] = c;
    return integer_rank(std::move(m));
}

WeightSpaceReport weight_space_rank(const Diagram& d, const Exponents& weight) {
    if (weight.size() != d.size()) throw DimensionError("weight length does not match the grid size");
    WeightSpaceReport report;
    report.weight = weight;
    std::vector<YPoly> polys;
    for_each_sub_diagram(d, [&](const Diagram& c) {
        if (monomial_of(c) != weight) return;
        YPoly f = f_c(c, d);
        assert(!f.is_zero());
        polys.push_back(f);
        report.members.emplace_back(c, std::move(f));
    });
    report.rank = span_rank(polys);
    return report;
}

Poly dual_character(const Diagram& d) {
    std::map<Exponents, std::vector<YPoly>> spaces;
    for_each_sub_diagram(d, [&](const Diagram& c) { spaces[monomial_of(c)].push_back(f_c(c, d)); });
    Poly out(d.size());
    for (const auto& [weight, polys] : spaces) out.add_term(weight, static_cast<unsigned long>(span_rank(polys)));
    return out;
}

namespace {

// w_i < min(w_p, w_q) and max(w_p, w_q) < w_k: the shape shared by 1432 and 1423.
bool frames_occurrence(const Permutation& w, std::size_t i, std::size_t k, std::size_t p, std::size_t q) {
    const std::size_t n = w.size();
    if (!(1 <= i && i < k && k < p && k < q && p != q && p <= n && q <= n)) return false;
    return w(i) < std::min(w(p), w(q)) && std::max(w(p), w(q)) < w(k);
}

std::vector<PatternOccurrence> all_occurrences(const Permutation& w) {
    std::vector<PatternOccurrence> out;
    const std::size_t n = w.size();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t k = i + 1; k <= n; ++k)
            for (std::size_t p = k + 1; p <= n; ++p)
                for (std::size_t q = k + 1; q <= n; ++q)
                    if (frames_occurrence(w, i, k, p, q)) out.push_back({i, k, p, q});
    return out;
}

}  // namespace

std::optional<PatternOccurrence> canonical_occurrence(const Permutation& w) {
    const auto occurrences = all_occurrences(w);
    if (occurrences.empty()) return std::nullopt;
    std::size_t i0 = 0;
    for (const auto& o : occurrences) i0 = std::max(i0, o.i0);
    std::optional<PatternOccurrence> best;
    for (const auto& o : occurrences) {
        if (o.i0 != i0) continue;
        if (!best || o.k0 < best->k0 || (o.k0 == best->k0 && std::pair(o.p0, o.q0) < std::pair(best->p0, best->q0)))
            best = o;
    }
    return best;
}

std::vector<Diagram> dependent_family(const Diagram& d, const FamilyAnchor& a) {
    const std::size_t n = d.size();
    if (!(1 <= a.i0 && a.i0 < a.k0 && a.k0 <= n && 1 <= a.j0 && a.j0 < a.l0 && a.l0 <= n))
        throw InvalidOccurrenceError("anchor indices out of order or out of range");
    auto contains = [](const Column& col, std::size_t row) {
        return std::binary_search(col.begin(), col.end(), static_cast<int>(row));
    };
    const Column& dj = d.column(a.j0);
    const Column& dl = d.column(a.l0);
    if (contains(dj, a.i0) || !contains(dl, a.k0))
        throw InvalidOccurrenceError("anchor does not frame the diagram");
    for (std::size_t r = a.i0; r <= a.k0; ++r) {
        if (r > a.i0 && !contains(dj, r)) throw InvalidOccurrenceError("column j0 is missing a row in (i0, k0]");
        if (r < a.k0 && contains(dl, r)) throw InvalidOccurrenceError("column l0 has a row in [i0, k0)");
    }

    std::vector<Diagram> family;
    for (std::size_t r = a.i0; r <= a.k0; ++r) {
        std::vector<Column> columns = d.columns();
        Column& cl = columns[a.l0 - 1];
        cl.erase(std::find(cl.begin(), cl.end(), static_cast<int>(a.k0)));
        cl.push_back(static_cast<int>(r));
        std::sort(cl.begin(), cl.end());

        Column& cj = columns[a.j0 - 1];
        cj.push_back(static_cast<int>(a.i0));
        std::sort(cj.begin(), cj.end());
        cj.erase(std::find(cj.begin(), cj.end(), static_cast<int>(r)));

        family.emplace_back(n, std::move(columns));
    }
    return family;
}

std::vector<Diagram> dependent_family(const Permutation& w, const PatternOccurrence& occ) {
    if (!frames_occurrence(w, occ.i0, occ.k0, occ.p0, occ.q0))
        throw InvalidOccurrenceError("positions do not form an occurrence of 1432 or 1423");
    const auto canonical = canonical_occurrence(w);
    if (occ.i0 != canonical->i0 || occ.k0 != canonical->k0)
        throw InvalidOccurrenceError("occurrence does not use the largest i0 and then the smallest k0");
    const auto lo = static_cast<std::size_t>(std::min(w(occ.p0), w(occ.q0)));
    const auto hi = static_cast<std::size_t>(std::max(w(occ.p0), w(occ.q0)));
    return dependent_family(rothe_diagram(w), FamilyAnchor{occ.i0, occ.k0, lo, hi});
}

std::optional<FamilyAnchor> key_family_anchor(const Composition& a) {
    const std::size_t n = a.size();
    for (std::size_t i = n; i >= 1; --i) {
        for (std::size_t k = i + 1; k <= n; ++k) {
            if (a(k) >= a(i) + 2) return FamilyAnchor{i, k, a(i) + 1u, a(k)};
        }
    }
    return std::nullopt;
}

bool verify_dependence_identity(int b, const DependenceGuard& guard) {
    if (b < 2 || b > guard.max_b) throw RangeError("b must satisfy 2 <= b <= " + std::to_string(guard.max_b));
    Column cols;
    for (int c = 2; c <= b; ++c) cols.push_back(c);
    auto g = [&](int m) {
        Column rows;
        for (int r = 1; r <= b; ++r)
            if (r != m) rows.push_back(r);
        YPoly factor;
        factor.add_term(YMonomial({{m, b}}), 1);
        return factor * minor(rows, cols);
    };
    YPoly rhs;
    for (int m = b - 1; m >= 1; --m) {
        if ((b - 1 - m) % 2 == 0) {
            rhs += g(m);
        } else {
            rhs -= g(m);
        }
    }
    return g(b) == rhs;
}

std::vector<Column> reduced_columns(const Diagram& d) {
    std::vector<Column> out;
    out.reserve(d.size());
    for (const Column& col : d.columns()) {
        std::size_t a = 0;
        while (a < col.size() && col[a] == static_cast<int>(a + 1)) ++a;
        out.emplace_back(col.begin() + static_cast<std::ptrdiff_t>(a), col.end());
    }
    return out;
}

bool reduced_columns_disjoint(const Diagram& d) {
    std::vector<bool> seen(d.size() + 1, false);
    for (const Column& col : reduced_columns(d)) {
        for (int row : col) {
            if (seen[row]) return false;
            seen[row] = true;
        }
    }
    return true;
}

}  // namespace schubert
