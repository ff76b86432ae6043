#include <doctest.h>

#include "oracles.hpp"
#include "schubert/combinat.hpp"

using namespace schubert;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
Composition A(const char* s) { return parse_composition(s); }
}  // namespace

TEST_CASE("permutation parsing and validation") {
    CHECK(P("1432").word().size() == 4);
    CHECK(P("1,4,3,2") == P("1432"));
    CHECK(P("(2,1)") == P("21"));
    CHECK_THROWS_AS(P("1442"), ParseError);
    CHECK_THROWS_AS(P("1,4,,2"), ParseError);
    try {
        P("14x2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
    }
    CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
    CHECK(P("1432").inversions() == 3);
    CHECK(P("1432").inverse() == P("1432"));
    CHECK(P("2314").inverse() == P("3124"));
    CHECK(P("1,2,3,4,5,6,7,8,9,10").to_string() == "1,2,3,4,5,6,7,8,9,10");
}

TEST_CASE("composition parsing") {
    CHECK(A("1,3,0,2").parts().size() == 4);
    CHECK(A("(0,2)") == A("0,2"));
    CHECK(A("7").total() == 7);
    CHECK(A("3,3,1").is_partition());
    CHECK_FALSE(A("0,2").is_partition());
    CHECK_THROWS_AS(A("0,-2"), ParseError);
    CHECK_THROWS_AS(A(""), ParseError);
}

TEST_CASE("permutation pattern containment") {
    CHECK(perm_contains_pattern(P("1432"), P("1432")));
    CHECK(oracle::contains_by_subsets(P("21543"), P("1432")));
    CHECK(perm_contains_pattern(P("21543"), P("1432")));
    CHECK_FALSE(perm_contains_pattern(P("123456"), P("1432")));
    CHECK_FALSE(perm_contains_pattern(P("132"), P("1432")));

    const auto occ = pattern_occurrences(P("21543"), P("1432"));
    REQUIRE(occ.size() == 2);
    CHECK(occ[0] == std::vector<std::size_t>{1, 3, 4, 5});
    CHECK(occ[1] == std::vector<std::size_t>{2, 3, 4, 5});
}

TEST_CASE("backtracking search agrees with subset enumeration on S_6 against all of S_4") {
    const auto patterns = enumerate_permutations(4);
    for_each_permutation(6, [&](const Permutation& w) {
        for (const auto& p : patterns) REQUIRE(perm_contains_pattern(w, p) == oracle::contains_by_subsets(w, p));
    });
}

TEST_CASE("composition pattern containment") {
    CHECK(comp_contains_pattern(A("1,3,0,2"), A("0,2")));
    CHECK_FALSE(oracle::comp_contains_by_subsets(A("2,2,1"), A("0,2")));
    CHECK_FALSE(comp_contains_pattern(A("2,2,1"), A("0,2")));
    CHECK(comp_contains_pattern(A("0,1,2"), A("0,1,2")));
    // Ties in the pattern demand ties in the text.
    CHECK_FALSE(comp_contains_pattern(A("0,1,3,2"), A("0,0,2,2")));
    CHECK(comp_contains_pattern(A("1,1,3,3"), A("0,0,2,2")));
    CHECK_FALSE(comp_contains_pattern(A("0"), A("0,2")));

    for (const auto& pattern : key_min_patterns()) {
        for_each_composition(5, 3, [&](const Composition& a) {
            REQUIRE(comp_contains_pattern(a, pattern) == oracle::comp_contains_by_subsets(a, pattern));
        });
    }
}

TEST_CASE("fixed pattern lists") {
    CHECK(schubert_max_patterns().size() == 2);
    CHECK(schubert_min_patterns().size() == 12);
    CHECK(key_max_patterns().size() == 1);
    CHECK(key_min_patterns().size() == 5);
    CHECK_FALSE(avoids_schubert_max(P("1432")));
    CHECK_FALSE(avoids_schubert_max(P("1423")));
    CHECK(avoids_schubert_max(P("2143")));
    CHECK(avoids_key_max(A("2,1,1")));
    CHECK_FALSE(avoids_key_max(A("0,2")));
    CHECK_FALSE(avoids_schubert_min(P("21543")));
    CHECK(avoids_schubert_min(P("1432")));
    CHECK_FALSE(avoids_key_min(A("0,1,2")));
}

TEST_CASE("constant compositions avoid (0,2)") {
    for (unsigned c = 0; c <= 5; ++c)
        for (std::size_t len = 1; len <= 6; ++len)
            CHECK_FALSE(comp_contains_pattern(Composition(std::vector<unsigned>(len, c)), A("0,2")));
}

TEST_CASE("containment is inherited by words containing the text as a pattern") {
    // If w contains p and v contains w, then v contains p.
    const auto s4 = enumerate_permutations(4);
    const auto s5 = enumerate_permutations(5);
    const auto s3 = enumerate_permutations(3);
    for (const auto& v : s5)
        for (const auto& w : s4) {
            if (!perm_contains_pattern(v, w)) continue;
            for (const auto& p : s3)
                if (perm_contains_pattern(w, p)) REQUIRE(perm_contains_pattern(v, p));
        }
    for (const auto& w : s4) CHECK(perm_contains_pattern(w, w));
}

TEST_CASE("enumeration order and guards") {
    const auto s3 = enumerate_permutations(3);
    std::vector<std::string> words;
    for (const auto& w : s3) words.push_back(w.to_string());
    CHECK(words == std::vector<std::string>{"123", "132", "213", "231", "312", "321"});
    CHECK(enumerate_permutations(1).size() == 1);
    CHECK(enumerate_permutations(6).size() == 720);
    CHECK_THROWS_AS(enumerate_permutations(10), RangeError);
    CHECK(enumerate_permutations(3, EnumerationGuard{3}).size() == 6);

    const auto comps = enumerate_compositions(2, 1);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == A("0,0"));
    CHECK(comps[1] == A("0,1"));
    CHECK(comps[2] == A("1,0"));
    CHECK(comps[3] == A("1,1"));
    CHECK(enumerate_compositions(4, 4).size() == 625);
    CHECK_THROWS_AS(enumerate_compositions(3, 9, EnumerationGuard{9, 100}), RangeError);
}

TEST_CASE("Schroeder numbers and the avoider count") {
    const std::vector<int> listed{1, 2, 6, 22, 90, 394, 1806, 8558, 41586};
    for (std::size_t k = 0; k < listed.size(); ++k) CHECK(schroeder(k) == listed[k]);
    CHECK(count_max_avoiders(1) == 1);
    CHECK(count_max_avoiders(5) == 90);
    for (std::size_t n = 1; n <= 7; ++n) CHECK(BigInt(count_max_avoiders(n)) == schroeder(n - 1));
}
