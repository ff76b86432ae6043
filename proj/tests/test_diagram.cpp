#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "schubert/diagram.hpp"

using namespace schubert;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
Diagram D(const char* s) { return parse_diagram(s); }
}  // namespace

TEST_CASE("Rothe diagrams") {
    CHECK(rothe_diagram(P("1432")) == D("[[],[2,3],[2],[]]"));
    CHECK(rothe_diagram(P("1423")) == D("[[],[2],[2],[]]"));
    CHECK(rothe_diagram(Permutation::identity(5)) == Diagram::empty(5));
    CHECK(rothe_diagram(P("321")) == D("[[1,2],[1],[]]"));
    for_each_permutation(6, [](const Permutation& w) {
        REQUIRE(rothe_diagram(w).box_count() == w.inversions());
        REQUIRE(total_degree(monomial_of(rothe_diagram(w))) == w.inversions());
    });
}

TEST_CASE("skyline diagrams") {
    CHECK(skyline_diagram(parse_composition("1,3,0,2")) == D("[[1,2,4],[2,4],[2],[]]"));
    CHECK(skyline_diagram(parse_composition("0,0,0")) == Diagram::empty(3));
    CHECK(skyline_diagram(parse_composition("2,0")) == D("[[1],[1]]"));
    // The grid widens to fit the longest row.
    CHECK(skyline_diagram(parse_composition("0,3")).size() == 3);
}

TEST_CASE("diagram text form") {
    const Diagram d = D(" [ [], [2, 3] ,[2],[] ] ");
    CHECK(d.to_string() == "[[],[2,3],[2],[]]");
    CHECK(D("[]").size() == 0);
    CHECK_THROWS_AS(D("[[],[5],[],[]]"), ParseError);
    CHECK_THROWS_AS(D("[[1],[2]"), ParseError);
    CHECK_THROWS_AS(D("[[1],[2]]x"), ParseError);
    CHECK_THROWS_AS(Diagram(2, {{1}}), DimensionError);
}

TEST_CASE("column dominance") {
    CHECK(column_leq({1, 3}, {2, 3}));
    CHECK_FALSE(column_leq({1, 4}, {2, 3}));
    CHECK_FALSE(column_leq({1}, {2, 3}));
    CHECK(column_leq({}, {}));
}

TEST_CASE("sub-diagrams of D(1432) are the six listed ones") {
    const auto subs = enumerate_sub_diagrams(rothe_diagram(P("1432")));
    const std::set<Diagram> got(subs.begin(), subs.end());
    const std::set<Diagram> listed{D("[[],[1,2],[1],[]]"), D("[[],[1,3],[1],[]]"), D("[[],[2,3],[1],[]]"),
                                   D("[[],[1,2],[2],[]]"), D("[[],[1,3],[2],[]]"), D("[[],[2,3],[2],[]]")};
    CHECK(subs.size() == 6);
    CHECK(got == listed);
    CHECK(std::is_sorted(subs.begin(), subs.end(), [](const Diagram& a, const Diagram& b) {
        return a.columns() < b.columns();
    }));
}

TEST_CASE("sub-diagram enumeration edge cases") {
    CHECK(enumerate_sub_diagrams(Diagram::empty(3)).size() == 1);
    for (int k = 1; k <= 5; ++k) {
        Diagram d(5, {Column{k}, {}, {}, {}, {}});
        const auto subs = enumerate_sub_diagrams(d);
        CHECK(subs.size() == oracle::column_bases_by_subsets({k}, 5).size());
        CHECK(subs.size() == static_cast<std::size_t>(k));
    }
}

TEST_CASE("column bases match subset filtering and the counting recursion") {
    const int n = 6;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Column d;
        for (int r = 1; r <= n; ++r)
            if (mask & (1u << (r - 1))) d.push_back(r);
        const auto bases = column_bases(d);
        REQUIRE(bases == oracle::column_bases_by_subsets(d, n));
        REQUIRE(count_column_bases(d) == bases.size());
        for (const Column& c : bases) REQUIRE(column_leq(c, d));
    }
}

TEST_CASE("sub-diagram count is the product of column counts") {
    for_each_permutation(5, [](const Permutation& w) {
        const Diagram d = rothe_diagram(w);
        REQUIRE(count_sub_diagrams(d) == enumerate_sub_diagrams(d).size());
        REQUIRE(diagram_leq(d, d));
    });
}

TEST_CASE("monomials of diagrams") {
    CHECK(monomial_of(D("[[],[2,3],[2],[]]")) == Exponents{0, 2, 1, 0});
    CHECK(monomial_of(Diagram::empty(4)) == Exponents{0, 0, 0, 0});
    CHECK(monomial_of(D("[[],[1,2],[1],[]]")) == Exponents{2, 1, 0, 0});
}

TEST_CASE("Min and Max of D(1432)") {
    const Diagram d = rothe_diagram(P("1432"));
    const Poly mx = max_poly(d);
    // Six sub-diagrams; C(3) and C(5) share x1 x2 x3.
    Poly expected(4);
    expected.add_term({2, 1, 0, 0}, 1);
    expected.add_term({2, 0, 1, 0}, 1);
    expected.add_term({1, 1, 1, 0}, 2);
    expected.add_term({1, 2, 0, 0}, 1);
    expected.add_term({0, 2, 1, 0}, 1);
    CHECK(mx == expected);
    Poly low = expected;
    low.add_term({1, 1, 1, 0}, -1);
    CHECK(min_poly(d) == low);
    CHECK(min_poly(Diagram::empty(3)) == Poly::constant(3, 1));
    CHECK(max_poly(Diagram::empty(3)) == Poly::constant(3, 1));
}

TEST_CASE("Min <= Max with equality iff monomials never collide") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 4;
        std::vector<Column> cols(n);
        for (auto& c : cols)
            for (int r = 1; r <= n; ++r)
                if (rng() % 3 == 0) c.push_back(r);
        const Diagram d(n, cols);
        const Poly lo = min_poly(d), hi = max_poly(d);
        REQUIRE(coeffwise_leq(lo, hi));
        std::set<Exponents> seen;
        bool collision = false;
        for (const auto& c : enumerate_sub_diagrams(d)) collision |= !seen.insert(monomial_of(c)).second;
        REQUIRE((lo == hi) == !collision);
    }
}
