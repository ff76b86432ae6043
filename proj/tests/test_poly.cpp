#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "schubert/poly.hpp"

using namespace schubert;

namespace {

Poly x(std::size_t n, std::size_t i) { return Poly::variable(n, i); }
Poly one(std::size_t n) { return Poly::constant(n, 1); }

}  // namespace

TEST_CASE("ring operations prune zeros and keep lexicographic order") {
    CHECK((x(3, 1) + (-x(3, 1))).is_zero());
    CHECK((x(3, 1) + x(3, 2)) * x(3, 1) == x(3, 1) * x(3, 1) + x(3, 1) * x(3, 2));
    const Poly a = x(3, 1) * x(3, 1) * x(3, 2);
    CHECK(a * x(3, 3) == Poly::monomial({2, 1, 1}));

    const Poly f = x(3, 3) + x(3, 1) * x(3, 1) + x(3, 2);
    std::vector<Exponents> keys;
    for (const auto& [e, c] : f.terms()) keys.push_back(e);
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(to_string(f) == "x1^2 + x2 + x3");
}

TEST_CASE("mismatched ambient spaces are rejected") {
    CHECK_THROWS_AS(x(2, 1) + x(3, 1), DimensionError);
    CHECK_THROWS_AS(x(2, 1) * x(3, 1), DimensionError);
    CHECK_THROWS_AS(coeffwise_leq(x(2, 1), x(3, 1)), DimensionError);
}

TEST_CASE("divided difference on small inputs") {
    CHECK(divided_difference(x(2, 1), 1) == one(2));
    CHECK(divided_difference(x(2, 1) * x(2, 2), 1).is_zero());
    // Oracle-confirmed: (x1^2 x2 - x1 x2^2) / (x1 - x2) = x1 x2.
    const Poly f = Poly::monomial({2, 1});
    CHECK(oracle::divided_difference_by_division(f, 1) == x(2, 1) * x(2, 2));
    CHECK(divided_difference(f, 1) == x(2, 1) * x(2, 2));
}

TEST_CASE("divided difference index errors") {
    CHECK_THROWS_AS(divided_difference(x(3, 1), 0), IndexError);
    CHECK_THROWS_AS(divided_difference(x(3, 1), 3), IndexError);
    CHECK_THROWS_AS(demazure(x(3, 1), 3), IndexError);
}

TEST_CASE("demazure operator values fixed by the division oracle") {
    CHECK(demazure(one(2), 1) == one(2));
    const Poly sq = Poly::monomial({2, 0});
    const Poly expected = Poly::monomial({2, 0}) + Poly::monomial({1, 1}) + Poly::monomial({0, 2});
    CHECK(oracle::divided_difference_by_division(x(2, 1) * sq, 1) == expected);
    CHECK(demazure(sq, 1) == expected);
    // pi_1 x2 = d_1(x1 x2), and x1 x2 is symmetric.
    CHECK(oracle::divided_difference_by_division(x(2, 1) * x(2, 2), 1).is_zero());
    CHECK(demazure(x(2, 2), 1).is_zero());
}

TEST_CASE("normalize_n divides by mu!") {
    CHECK(normalize_n(x(2, 1)) == RatPoly::monomial({1, 0}));
    CHECK(normalize_n(Poly::monomial({2, 1})) == RatPoly::monomial({2, 1}, BigRational(1, 2)));
    const Poly f = Poly::monomial({2, 2}) + Poly::monomial({1, 1});
    CHECK(normalize_n(f) == RatPoly::monomial({2, 2}, BigRational(1, 4)) + RatPoly::monomial({1, 1}));
    CHECK(to_string(normalize_n(Poly::monomial({3, 0}, 3))) == "1/2*x1^3");
}

TEST_CASE("coefficientwise comparison") {
    CHECK(coeffwise_leq(x(2, 1), x(2, 1) + x(2, 2)));
    CHECK_FALSE(coeffwise_leq(x(2, 1) * BigInt(2), x(2, 1)));
    CHECK(coeffwise_leq(Poly(2), x(2, 1) + x(2, 2) * BigInt(3)));
    CHECK_FALSE(coeffwise_leq(Poly(2), -x(2, 2)));
}

TEST_CASE("resizing keeps terms and refuses to drop used variables") {
    const Poly f = x(2, 1) * x(2, 2);
    CHECK(f.resized(4) == Poly::monomial({1, 1, 0, 0}));
    CHECK(f.resized(4).resized(2) == f);
    CHECK_THROWS_AS(f.resized(1), DimensionError);
}

TEST_CASE("operator properties on random polynomials") {
    std::mt19937 rng(20240917);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 3;  // 2..4 variables
        const Poly f = oracle::random_poly(rng, n, 5, 6);
        for (std::size_t i = 1; i < n; ++i) {
            const Poly d = divided_difference(f, i);
            CHECK(d == oracle::divided_difference_by_division(f, i));
            CHECK(d.swapped(i) == d);
            CHECK(divided_difference(d, i).is_zero());
            const Poly p = demazure(f, i);
            CHECK(demazure(p, i) == p);
        }
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t j = i + 2; j < n; ++j)
                CHECK(divided_difference(divided_difference(f, i), j) ==
                      divided_difference(divided_difference(f, j), i));
            if (i + 1 < n) {
                const Poly lhs = divided_difference(divided_difference(divided_difference(f, i), i + 1), i);
                const Poly rhs = divided_difference(divided_difference(divided_difference(f, i + 1), i), i + 1);
                CHECK(lhs == rhs);
            }
        }
    }
}
