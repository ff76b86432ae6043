#include "schubert/characters.hpp"

#include <vector>

namespace schubert {

namespace {

Poly staircase(std::size_t n) {
    Exponents e(n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<unsigned>(n - 1 - i);
    return Poly::monomial(std::move(e));
}

}  // namespace

const Poly& SchubertCache::get(const Permutation& w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    Poly value;
    const auto ascents = w.ascents();
    if (ascents.empty()) {
        value = staircase(w.size());
    } else {
        value = via_ascent(w, ascents.front());
    }
    return cache_.emplace(w, std::move(value)).first->second;
}

Poly SchubertCache::via_ascent(const Permutation& w, std::size_t i) {
    if (i < 1 || i >= w.size() || !w.is_ascent(i)) throw IndexError("position is not an ascent");
    const Permutation up = w.times_transposition(i);
    return divided_difference(get(up), i);
}

Poly schubert_poly(const Permutation& w) {
    if (w.size() == 0) return Poly::constant(0, 1);
    SchubertCache cache;
    return cache.get(w);
}

Poly key_poly(const Composition& a) {
    const std::size_t n = a.size();
    std::vector<unsigned> parts(a.parts().begin(), a.parts().end());
    std::vector<std::size_t> steps;
    // kappa_alpha = pi_i kappa_{alpha s_i} whenever alpha_i < alpha_{i+1}.
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t i = 1; i < n; ++i) {
            if (parts[i - 1] < parts[i]) {
                std::swap(parts[i - 1], parts[i]);
                steps.push_back(i);
                swapped = true;
            }
        }
    }
    Poly f = Poly::monomial(Exponents(parts.begin(), parts.end()));
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) f = demazure(f, *it);
    return f;
}

}  // namespace schubert
