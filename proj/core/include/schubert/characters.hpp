#pragma once

#include <cstddef>
#include <map>

#include "schubert/combinat.hpp"
#include "schubert/poly.hpp"

namespace schubert {

/// Memoized divided-difference recursion down from the longest permutation.
///
/// S_{w0} = x_1^{n-1} x_2^{n-2} ... x_{n-1}, and S_w = d_i S_{w s_i} for an
/// ascent i of w. Entries are shared by every permutation of the same size,
/// so a sweep over S_n reuses intermediate results. Not thread-safe; give
/// each worker its own cache.
class SchubertCache {
public:
    const Poly& get(const Permutation& w);

    // d_i S_{w s_i} for a caller-chosen ascent i, bypassing the canonical
    // choice. Used to check that the recursion does not depend on i.
    Poly via_ascent(const Permutation& w, std::size_t i);

    std::size_t size() const { return cache_.size(); }

private:
    std::map<Permutation, Poly> cache_;
};

// Ambient variable count is |w|.
Poly schubert_poly(const Permutation& w);

// Sorts alpha to a partition by adjacent swaps and applies the matching
// Demazure operators to x^lambda. Ambient variable count is |alpha|.
Poly key_poly(const Composition& a);

}  // namespace schubert
