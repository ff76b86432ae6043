#include <doctest.h>

#include <set>

#include "schubert/characters.hpp"
#include "schubert/diagram.hpp"
#include "schubert/weyl.hpp"

using namespace schubert;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
Composition A(const char* s) { return parse_composition(s); }
}  // namespace

TEST_CASE("Schubert polynomial anchors") {
    CHECK(schubert_poly(P("321")) == Poly::monomial({2, 1, 0}));
    CHECK(to_string(schubert_poly(P("1432"))) == "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3");
    CHECK(schubert_poly(Permutation::identity(4)) == Poly::constant(4, 1));
    CHECK(schubert_poly(P("213")) == Poly::monomial({1, 0, 0}));
    CHECK(schubert_poly(P("132")) == Poly::monomial({1, 0, 0}) + Poly::monomial({0, 1, 0}));
}

TEST_CASE("Schubert polynomials are homogeneous of degree inv(w)") {
    SchubertCache cache;
    for_each_permutation(6, [&](const Permutation& w) {
        const Poly& s = cache.get(w);
        REQUIRE(s.homogeneous_degree() == static_cast<long>(w.inversions()));
        REQUIRE(s.has_nonnegative_coefficients());
    });
}

TEST_CASE("recursion does not depend on the ascent chosen") {
    for (std::size_t n = 2; n <= 5; ++n) {
        SchubertCache cache;
        for_each_permutation(n, [&](const Permutation& w) {
            const Poly& canonical = cache.get(w);
            for (std::size_t i : w.ascents()) REQUIRE(cache.via_ascent(w, i) == canonical);
        });
    }
    SchubertCache cache;
    CHECK_THROWS_AS(cache.via_ascent(P("321"), 1), IndexError);
}

TEST_CASE("key polynomial anchors") {
    CHECK(key_poly(A("2,0")) == Poly::monomial({2, 0}));
    const Poly k02 = key_poly(A("0,2"));
    CHECK(k02 == Poly::monomial({2, 0}) + Poly::monomial({1, 1}) + Poly::monomial({0, 2}));
    // kappa_(0,2) coincides with S_1423 once both live in the same variables.
    CHECK(k02.resized(4) == schubert_poly(P("1423")));
    CHECK(key_poly(A("0,0,0")) == Poly::constant(3, 1));
}

TEST_CASE("key_poly((1,3,0,2)) matches the dual-character route") {
    const Composition a = A("1,3,0,2");
    const Poly via_weyl = dual_character(skyline_diagram(a));
    // Frozen from the dual-character computation above.
    const char* frozen =
        "x1^3*x2^2*x3 + x1^3*x2^2*x4 + x1^3*x2*x3^2 + x1^3*x2*x3*x4 + x1^3*x2*x4^2 + x1^2*x2^3*x3 + "
        "x1^2*x2^3*x4 + x1^2*x2^2*x3^2 + x1^2*x2^2*x3*x4 + x1^2*x2^2*x4^2 + x1*x2^3*x3^2 + x1*x2^3*x3*x4 + "
        "x1*x2^3*x4^2";
    CHECK(to_string(via_weyl) == frozen);
    CHECK(key_poly(a) == via_weyl);
}

TEST_CASE("key polynomials are homogeneous of degree |alpha|") {
    for_each_composition(4, 3, [](const Composition& a) {
        REQUIRE(key_poly(a).homogeneous_degree() == static_cast<long>(a.total()));
    });
}

TEST_CASE("sandwich Min <= S_w <= Max over S_n, n <= 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        SchubertCache cache;
        for_each_permutation(n, [&](const Permutation& w) {
            const Diagram d = rothe_diagram(w);
            const Poly& s = cache.get(w);
            REQUIRE(coeffwise_leq(min_poly(d), s));
            REQUIRE(coeffwise_leq(s, max_poly(d)));
        });
    }
}

TEST_CASE("sandwich Min <= kappa <= Max for compositions of length <= 4, parts <= 4") {
    for (std::size_t len = 1; len <= 4; ++len) {
        for_each_composition(len, 4, [](const Composition& a) {
            const Diagram d = skyline_diagram(a);
            const Poly k = key_poly(a).resized(d.size());
            REQUIRE(coeffwise_leq(min_poly(d), k));
            REQUIRE(coeffwise_leq(k, max_poly(d)));
        });
    }
}

TEST_CASE("support of S_w is exactly the set of x^C") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for_each_permutation(n, [](const Permutation& w) {
            const Poly s = schubert_poly(w);
            std::set<Exponents> support;
            for (const auto& [e, c] : s.terms()) support.insert(e);
            std::set<Exponents> monomials;
            for_each_sub_diagram(rothe_diagram(w), [&](const Diagram& c) { monomials.insert(monomial_of(c)); });
            REQUIRE(support == monomials);
        });
    }
}
