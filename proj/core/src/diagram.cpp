#include "schubert/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace schubert {

Diagram::Diagram(std::size_t n, std::vector<Column> columns) : n_(n), columns_(std::move(columns)) {
    if (columns_.size() != n_) throw DimensionError("a diagram needs exactly n columns");
    for (const Column& col : columns_) {
        for (std::size_t k = 0; k < col.size(); ++k) {
            if (col[k] < 1 || static_cast<std::size_t>(col[k]) > n_)
                throw std::invalid_argument("row index outside 1..n");
            if (k > 0 && col[k - 1] >= col[k]) throw std::invalid_argument("column rows must be strictly increasing");
        }
    }
}

std::size_t Diagram::box_count() const {
    std::size_t count = 0;
    for (const Column& col : columns_) count += col.size();
    return count;
}

std::string Diagram::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (j) os << ',';
        os << '[';
        for (std::size_t k = 0; k < columns_[j].size(); ++k) os << (k ? "," : "") << columns_[j][k];
        os << ']';
    }
    os << ']';
    return os.str();
}

Diagram parse_diagram(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char ch) {
        skip_ws();
        if (pos >= text.size() || text[pos] != ch) throw ParseError(std::string("expected '") + ch + "'", pos);
        ++pos;
    };
    auto peek = [&] {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    };

    std::vector<Column> columns;
    expect('[');
    if (peek() != ']') {
        while (true) {
            expect('[');
            Column col;
            if (peek() != ']') {
                while (true) {
                    skip_ws();
                    const std::size_t start = pos;
                    int value = 0;
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                        value = value * 10 + (text[pos] - '0');
                        if (value > 1'000'000) throw ParseError("row index too large", pos);
                        ++pos;
                    }
                    if (pos == start) throw ParseError("expected a row index", pos);
                    col.push_back(value);
                    if (peek() == ',') {
                        ++pos;
                        continue;
                    }
                    break;
                }
            }
            expect(']');
            columns.push_back(std::move(col));
            if (peek() == ',') {
                ++pos;
                continue;
            }
            break;
        }
    }
    expect(']');
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing characters", pos);

    const std::size_t n = columns.size();
    for (Column& col : columns) std::sort(col.begin(), col.end());
    try {
        return Diagram(n, std::move(columns));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

Diagram rothe_diagram(const Permutation& w) {
    const std::size_t n = w.size();
    const Permutation inv = w.inverse();
    std::vector<Column> columns(n);
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 1; i <= n; ++i)
            if (w(i) > static_cast<int>(j) && static_cast<int>(i) < inv(j)) columns[j - 1].push_back(static_cast<int>(i));
    return Diagram(n, std::move(columns));
}

Diagram skyline_diagram(const Composition& a) {
    const std::size_t n = std::max<std::size_t>(a.size(), a.max_part());
    std::vector<Column> columns(n);
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 1; i <= a.size(); ++i)
            if (a(i) >= j) columns[j - 1].push_back(static_cast<int>(i));
    return Diagram(n, std::move(columns));
}

bool column_leq(const Column& c, const Column& d) {
    if (c.size() != d.size()) return false;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] > d[k]) return false;
    return true;
}

bool diagram_leq(const Diagram& c, const Diagram& d) {
    if (c.size() != d.size()) return false;
    for (std::size_t j = 0; j < c.size(); ++j)
        if (!column_leq(c.columns()[j], d.columns()[j])) return false;
    return true;
}

std::vector<Column> column_bases(const Column& d) {
    std::vector<Column> out;
    Column current;
    current.reserve(d.size());
    // The k-th element ranges over (previous, d[k]].
    std::function<void(std::size_t, int)> descend = [&](std::size_t k, int previous) {
        if (k == d.size()) {
            out.push_back(current);
            return;
        }
        for (int v = previous + 1; v <= d[k]; ++v) {
            current.push_back(v);
            descend(k + 1, v);
            current.pop_back();
        }
    };
    descend(0, 0);
    return out;
}

BigInt count_column_bases(const Column& d) {
    if (d.empty()) return 1;
    // ways[v]: sequences of the current length ending at value v.
    std::vector<BigInt> ways(d.back() + 1, 0);
    for (int v = 1; v <= d[0]; ++v) ways[v] = 1;
    for (std::size_t k = 1; k < d.size(); ++k) {
        std::vector<BigInt> next(ways.size(), 0);
        BigInt prefix = 0;
        for (int v = 1; v <= d[k]; ++v) {
            next[v] = prefix;
            prefix += ways[v];
        }
        ways = std::move(next);
    }
    BigInt total = 0;
    for (const BigInt& x : ways) total += x;
    return total;
}

void for_each_sub_diagram(const Diagram& d, const std::function<void(const Diagram&)>& visit) {
    const std::size_t n = d.size();
    std::vector<std::vector<Column>> bases;
    bases.reserve(n);
    for (const Column& col : d.columns()) bases.push_back(column_bases(col));
    if (std::any_of(bases.begin(), bases.end(), [](const auto& b) { return b.empty(); })) return;

    std::vector<std::size_t> choice(n, 0);
    std::vector<Column> columns(n);
    while (true) {
        for (std::size_t j = 0; j < n; ++j) columns[j] = bases[j][choice[j]];
        visit(Diagram(n, columns));
        // Odometer with the last column varying fastest.
        std::size_t j = n;
        while (j > 0 && choice[j - 1] + 1 == bases[j - 1].size()) choice[--j] = 0;
        if (j == 0) return;
        ++choice[j - 1];
    }
}

std::vector<Diagram> enumerate_sub_diagrams(const Diagram& d) {
    std::vector<Diagram> out;
    for_each_sub_diagram(d, [&](const Diagram& c) { out.push_back(c); });
    return out;
}

BigInt count_sub_diagrams(const Diagram& d) {
    BigInt total = 1;
    for (const Column& col : d.columns()) total *= count_column_bases(col);
    return total;
}

Exponents monomial_of(const Diagram& c) {
    Exponents e(c.size(), 0);
    for (const Column& col : c.columns())
        for (int row : col) ++e[row - 1];
    return e;
}

Poly min_poly(const Diagram& d) {
    Poly out(d.size());
    for_each_sub_diagram(d, [&](const Diagram& c) {
        const Exponents e = monomial_of(c);
        if (out.coefficient(e) == 0) out.add_term(e, 1);
    });
    return out;
}

Poly max_poly(const Diagram& d) {
    Poly out(d.size());
    for_each_sub_diagram(d, [&](const Diagram& c) { out.add_term(monomial_of(c), 1); });
    return out;
}

}  // namespace schubert
