#include "schubert/combinat.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace schubert {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size() + 1, false);
    for (int v : word_) {
        if (v < 1 || static_cast<std::size_t>(v) > word_.size() || seen[v])
            throw std::invalid_argument("word is not a permutation of 1..n");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(std::size_t n) {
    std::vector<int> w(n);
    std::iota(w.rbegin(), w.rend(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i) inv[word_[i] - 1] = static_cast<int>(i + 1);
    return Permutation(std::move(inv));
}

std::size_t Permutation::inversions() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < word_.size(); ++i)
        for (std::size_t j = i + 1; j < word_.size(); ++j)
            if (word_[i] > word_[j]) ++count;
    return count;
}

std::vector<std::size_t> Permutation::ascents() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < word_.size(); ++i)
        if (is_ascent(i)) out.push_back(i);
    return out;
}

Permutation Permutation::times_transposition(std::size_t i) const {
    if (i < 1 || i >= word_.size()) throw IndexError("transposition index out of range");
    Permutation out = *this;
    std::swap(out.word_[i - 1], out.word_[i]);
    return out;
}

std::string Permutation::to_string() const {
    const bool compact = word_.size() <= 9;
    std::ostringstream os;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (!compact && i > 0) os << ',';
        os << word_[i];
    }
    return os.str();
}

unsigned Composition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

unsigned Composition::max_part() const {
    return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
}

bool Composition::is_partition() const {
    return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

std::string Composition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

namespace {

// Comma-separated nonnegative integers; surrounding parentheses are optional.
std::vector<unsigned> parse_number_list(std::string_view text) {
    std::size_t pos = 0;
    std::size_t end = text.size();
    if (end == 0) throw ParseError("empty input", 0);
    const bool paren = text.front() == '(';
    if (paren) {
        if (text.back() != ')') throw ParseError("missing ')'", end);
        ++pos;
        --end;
    }
    std::vector<unsigned> out;
    while (true) {
        if (pos >= end || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected a digit", pos);
        unsigned long value = 0;
        while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + static_cast<unsigned>(text[pos] - '0');
            if (value > 1'000'000) throw ParseError("number too large", pos);
            ++pos;
        }
        out.push_back(static_cast<unsigned>(value));
        if (pos == end) break;
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
    }
    return out;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
    std::vector<int> word;
    if (text.find(',') == std::string_view::npos && !text.empty() && text.front() != '(') {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '0')
                throw ParseError("expected a digit 1-9", i);
            word.push_back(text[i] - '0');
        }
    } else {
        for (unsigned v : parse_number_list(text)) word.push_back(static_cast<int>(v));
    }
    try {
        return Permutation(std::move(word));
    } catch (const std::invalid_argument&) {
        throw ParseError("not a permutation of 1..n", 0);
    }
}

Composition parse_composition(std::string_view text) { return Composition(parse_number_list(text)); }

namespace {

int sign(long v) { return (v > 0) - (v < 0); }

// Extends a partial index choice one position at a time, pruning as soon as
// the newest index breaks a pairwise condition against an earlier one.
template <typename Compatible, typename Visit>
bool search_occurrences(std::size_t text_len, std::size_t pattern_len, const Compatible& compatible,
                        const Visit& visit) {
    std::vector<std::size_t> chosen;
    chosen.reserve(pattern_len);
    std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
        if (chosen.size() == pattern_len) return visit(chosen);
        const std::size_t t = chosen.size();
        const std::size_t remaining = pattern_len - t;
        for (std::size_t idx = from; idx + remaining <= text_len; ++idx) {
            bool ok = true;
            for (std::size_t s = 0; s < t && ok; ++s) ok = compatible(chosen[s], s, idx, t);
            if (!ok) continue;
            chosen.push_back(idx);
            if (extend(idx + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return extend(0);
}

}  // namespace

std::vector<std::vector<std::size_t>> pattern_occurrences(const Permutation& w, const Permutation& p) {
    std::vector<std::vector<std::size_t>> out;
    if (p.size() > w.size()) return out;
    const auto ww = w.word();
    const auto pw = p.word();
    search_occurrences(
        w.size(), p.size(),
        [&](std::size_t a, std::size_t s, std::size_t b, std::size_t t) {
            return sign(ww[a] - ww[b]) == sign(pw[s] - pw[t]);
        },
        [&](const std::vector<std::size_t>& chosen) {
            std::vector<std::size_t> positions;
            for (std::size_t idx : chosen) positions.push_back(idx + 1);
            out.push_back(std::move(positions));
            return false;
        });
    return out;
}

bool perm_contains_pattern(const Permutation& w, const Permutation& p) {
    if (p.size() > w.size()) return false;
    const auto ww = w.word();
    const auto pw = p.word();
    return search_occurrences(
        w.size(), p.size(),
        [&](std::size_t a, std::size_t s, std::size_t b, std::size_t t) {
            return sign(ww[a] - ww[b]) == sign(pw[s] - pw[t]);
        },
        [](const std::vector<std::size_t>&) { return true; });
}

bool comp_contains_pattern(const Composition& a, const Composition& b) {
    if (b.size() > a.size()) return false;
    const auto ap = a.parts();
    const auto bp = b.parts();
    return search_occurrences(
        a.size(), b.size(),
        [&](std::size_t x, std::size_t s, std::size_t y, std::size_t t) {
            const long as = ap[x], at = ap[y], bs = bp[s], bt = bp[t];
            // Order relations must agree in both directions, so ties match ties.
            if ((as <= at) != (bs <= bt)) return false;
            if ((at <= as) != (bt <= bs)) return false;
            return std::labs(as - at) >= std::labs(bs - bt);
        },
        [](const std::vector<std::size_t>&) { return true; });
}

bool avoids_all(const Permutation& w, std::span<const Permutation> patterns) {
    return std::none_of(patterns.begin(), patterns.end(),
                        [&](const Permutation& p) { return perm_contains_pattern(w, p); });
}

bool avoids_all(const Composition& a, std::span<const Composition> patterns) {
    return std::none_of(patterns.begin(), patterns.end(),
                        [&](const Composition& p) { return comp_contains_pattern(a, p); });
}

namespace {

std::vector<Permutation> perms(std::initializer_list<const char*> words) {
    std::vector<Permutation> out;
    for (const char* w : words) out.push_back(parse_permutation(w));
    return out;
}

}  // namespace

const std::vector<Permutation>& schubert_max_patterns() {
    static const auto patterns = perms({"1432", "1423"});
    return patterns;
}

const std::vector<Permutation>& schubert_min_patterns() {
    static const auto patterns = perms({"12543", "13254", "13524", "13542", "21543", "125364", "125634",
                                        "215364", "215634", "315264", "315624", "315642"});
    return patterns;
}

const std::vector<Composition>& key_max_patterns() {
    static const std::vector<Composition> patterns{Composition({0, 2})};
    return patterns;
}

const std::vector<Composition>& key_min_patterns() {
    static const std::vector<Composition> patterns{Composition({0, 1, 2}), Composition({0, 0, 2, 2}),
                                                   Composition({0, 0, 2, 1}), Composition({1, 0, 3, 2}),
                                                   Composition({1, 0, 2, 2})};
    return patterns;
}

bool avoids_schubert_max(const Permutation& w) { return avoids_all(w, schubert_max_patterns()); }
bool avoids_schubert_min(const Permutation& w) { return avoids_all(w, schubert_min_patterns()); }
bool avoids_key_max(const Composition& a) { return avoids_all(a, key_max_patterns()); }
bool avoids_key_min(const Composition& a) { return avoids_all(a, key_min_patterns()); }

void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit,
                          const EnumerationGuard& guard) {
    if (n > guard.max_n) throw RangeError("permutation size " + std::to_string(n) + " exceeds guard");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        visit(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> enumerate_permutations(std::size_t n, const EnumerationGuard& guard) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); }, guard);
    return out;
}

void for_each_composition(std::size_t len, unsigned max_part,
                          const std::function<void(const Composition&)>& visit,
                          const EnumerationGuard& guard) {
    double count = 1;
    for (std::size_t i = 0; i < len; ++i) count *= max_part + 1.0;
    if (count > static_cast<double>(guard.max_compositions))
        throw RangeError("composition count exceeds guard");
    std::vector<unsigned> parts(len, 0);
    while (true) {
        visit(Composition(parts));
        std::size_t i = len;
        while (i > 0 && parts[i - 1] == max_part) parts[--i] = 0;
        if (i == 0) return;
        ++parts[i - 1];
    }
}

std::vector<Composition> enumerate_compositions(std::size_t len, unsigned max_part,
                                                const EnumerationGuard& guard) {
    std::vector<Composition> out;
    for_each_composition(len, max_part, [&](const Composition& a) { out.push_back(a); }, guard);
    return out;
}

std::size_t count_max_avoiders(std::size_t n, const EnumerationGuard& guard) {
    std::size_t count = 0;
    for_each_permutation(n, [&](const Permutation& w) { count += avoids_schubert_max(w); }, guard);
    return count;
}

BigInt schroeder(std::size_t k) {
    // r_m = r_{m-1} + sum_{i=0}^{m-1} r_i r_{m-1-i}
    std::vector<BigInt> r{1};
    for (std::size_t m = 1; m <= k; ++m) {
        BigInt next = r[m - 1];
        for (std::size_t i = 0; i < m; ++i) next += r[i] * r[m - 1 - i];
        r.push_back(next);
    }
    return r[k];
}

}  // namespace schubert
