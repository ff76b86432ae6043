#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "schubert/poly.hpp"

namespace schubert {

/// A permutation w = w_1 ... w_n of {1..n} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(std::size_t n);
    static Permutation longest(std::size_t n);

    std::size_t size() const { return word_.size(); }
    std::span<const int> word() const { return word_; }

    // w_i, 1-based.
    int operator()(std::size_t i) const { return word_[i - 1]; }

    Permutation inverse() const;
    std::size_t inversions() const;
    bool is_ascent(std::size_t i) const { return word_[i - 1] < word_[i]; }
    std::vector<std::size_t> ascents() const;

    // w s_i: the word with positions i and i+1 exchanged.
    Permutation times_transposition(std::size_t i) const;

    // "1432" when every letter is a single digit, "1,4,3,10,..." otherwise.
    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

/// A weak composition alpha = (alpha_1, ..., alpha_n).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {}

    std::size_t size() const { return parts_.size(); }
    std::span<const unsigned> parts() const { return parts_; }
    unsigned operator()(std::size_t i) const { return parts_[i - 1]; }

    unsigned total() const;
    unsigned max_part() const;
    // Weakly decreasing.
    bool is_partition() const;

    // "(1,3,0,2)"
    std::string to_string() const;

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<unsigned> parts_;
};

Permutation parse_permutation(std::string_view text);
Composition parse_composition(std::string_view text);

// Positions (1-based) of every occurrence of p in w, in lexicographic order.
std::vector<std::vector<std::size_t>> pattern_occurrences(const Permutation& w, const Permutation& p);

bool perm_contains_pattern(const Permutation& w, const Permutation& p);
bool comp_contains_pattern(const Composition& a, const Composition& b);

bool avoids_all(const Permutation& w, std::span<const Permutation> patterns);
bool avoids_all(const Composition& a, std::span<const Composition> patterns);

const std::vector<Permutation>& schubert_max_patterns();
const std::vector<Permutation>& schubert_min_patterns();
const std::vector<Composition>& key_max_patterns();
const std::vector<Composition>& key_min_patterns();

bool avoids_schubert_max(const Permutation& w);
bool avoids_schubert_min(const Permutation& w);
bool avoids_key_max(const Composition& a);
bool avoids_key_min(const Composition& a);

struct EnumerationGuard {
    std::size_t max_n = 9;
    std::size_t max_compositions = 10'000'000;
};

// Lexicographic order. Throws RangeError past the guard.
void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit,
                          const EnumerationGuard& guard = {});
std::vector<Permutation> enumerate_permutations(std::size_t n, const EnumerationGuard& guard = {});

void for_each_composition(std::size_t len, unsigned max_part,
                          const std::function<void(const Composition&)>& visit,
                          const EnumerationGuard& guard = {});
std::vector<Composition> enumerate_compositions(std::size_t len, unsigned max_part,
                                                const EnumerationGuard& guard = {});

std::size_t count_max_avoiders(std::size_t n, const EnumerationGuard& guard = {});

// Large Schroeder numbers r_0 = 1, r_1 = 2, r_2 = 6, ...
BigInt schroeder(std::size_t k);

}  // namespace schubert
