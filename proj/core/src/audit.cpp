#include "schubert/audit.hpp"

#include <chrono>
#include <functional>
#include <limits>
#include <stdexcept>

#include "schubert/characters.hpp"
#include "schubert/combinat.hpp"
#include "schubert/diagram.hpp"
#include "schubert/lorentz.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{
        "schubert-max",      "schubert-min",   "key-max",         "key-min",
        "key-lorentzian",    "schroeder-count", "dualchar-schubert", "dualchar-key",
        "reduced-disjoint",  "dependent-family", "dependence-identity"};
    return ids;
}

namespace {

const char* verdict(bool b) { return b ? "true" : "false"; }

class Auditor {
public:
    Auditor(const AuditRange& range, const AuditLimits& limits) : range_(range), limits_(limits) {
        if (limits_.force) enumeration_.max_n = std::numeric_limits<std::size_t>::max();
        if (limits_.force) enumeration_.max_compositions = std::numeric_limits<std::size_t>::max();
    }

    AuditReport report;

    void record(std::string input, std::string lhs, std::string rhs, bool agree) {
        if (agree) {
            ++report.agreements;
        } else {
            ++report.disagreements;
        }
        if (lhs == "true" && rhs == "true") ++report.both_hold;
        report.records.push_back({std::move(input), std::move(lhs), std::move(rhs), agree});
    }

    std::size_t need_n(std::size_t limit) {
        if (!range_.n) throw std::invalid_argument("this audit needs --n");
        check(*range_.n, limit, "n");
        report.range = "n=" + std::to_string(*range_.n);
        return *range_.n;
    }

    std::pair<std::size_t, unsigned> need_composition_range() {
        if (!range_.len || !range_.max_part) throw std::invalid_argument("this audit needs --len and --max-part");
        check(*range_.len, limits_.max_len, "len");
        check(*range_.max_part, limits_.max_part, "max-part");
        report.range = "len=" + std::to_string(*range_.len) + ",max-part=" + std::to_string(*range_.max_part);
        return {*range_.len, *range_.max_part};
    }

    int need_b() {
        if (!range_.b) throw std::invalid_argument("this audit needs --b");
        if (*range_.b < 2) throw RangeError("b must be at least 2");
        check(static_cast<std::size_t>(*range_.b), static_cast<std::size_t>(limits_.max_b), "b");
        report.range = "b=" + std::to_string(*range_.b);
        return *range_.b;
    }

    bool has_composition_range() const { return range_.len.has_value(); }

    void permutations(std::size_t n, const std::function<void(const Permutation&)>& visit) {
        for_each_permutation(n, visit, enumeration_);
    }

    void compositions(std::size_t len, unsigned max_part, const std::function<void(const Composition&)>& visit) {
        for_each_composition(len, max_part, visit, enumeration_);
    }

    bool forced() const { return limits_.force; }

private:
    void check(std::size_t value, std::size_t limit, const char* name) const {
        if (!limits_.force && value > limit)
            throw RangeError(std::string(name) + "=" + std::to_string(value) + " exceeds the default limit " +
                             std::to_string(limit) + " (use --force)");
    }

    AuditRange range_;
    AuditLimits limits_;
    EnumerationGuard enumeration_;
};

// Key polynomial re-embedded in the skyline grid so it can be compared with Min/Max.
Poly key_in_grid(const Composition& a, const Diagram& d) { return key_poly(a).resized(d.size()); }

void audit_schubert_bound(Auditor& au, bool upper, std::size_t limit) {
    const std::size_t n = au.need_n(limit);
    SchubertCache cache;
    au.permutations(n, [&](const Permutation& w) {
        const Diagram d = rothe_diagram(w);
        const Poly& s = cache.get(w);
        const bool attains = upper ? s == max_poly(d) : s == min_poly(d);
        const bool avoids = upper ? avoids_schubert_max(w) : avoids_schubert_min(w);
        au.record(w.to_string(), verdict(attains), verdict(avoids), attains == avoids);
    });
}

void audit_key_bound(Auditor& au, bool upper) {
    const auto [len, max_part] = au.need_composition_range();
    au.compositions(len, max_part, [&](const Composition& a) {
        const Diagram d = skyline_diagram(a);
        const Poly k = key_in_grid(a, d);
        const bool attains = upper ? k == max_poly(d) : k == min_poly(d);
        const bool avoids = upper ? avoids_key_max(a) : avoids_key_min(a);
        au.record(a.to_string(), verdict(attains), verdict(avoids), attains == avoids);
    });
}

void audit_key_lorentzian(Auditor& au) {
    const auto [len, max_part] = au.need_composition_range();
    LorentzGuard guard;
    guard.max_degree = static_cast<unsigned>(len * max_part);
    guard.max_vars = len;
    au.compositions(len, max_part, [&](const Composition& a) {
        const bool lorentzian = is_lorentzian(key_poly(a), guard);
        const bool avoids = avoids_key_max(a);
        // One-directional: avoiding (0,2) forces the Lorentzian property.
        au.record(a.to_string(), verdict(lorentzian), verdict(avoids), !avoids || lorentzian);
    });
}

void audit_schroeder(Auditor& au, const AuditLimits& limits) {
    const std::size_t n = au.need_n(limits.max_n_count);
    for (std::size_t m = 1; m <= n; ++m) {
        std::size_t count = 0;
        au.permutations(m, [&](const Permutation& w) { count += avoids_schubert_max(w); });
        const BigInt r = schroeder(m - 1);
        au.record("n=" + std::to_string(m), std::to_string(count), r.str(), BigInt(count) == r);
    }
}

void audit_dualchar(Auditor& au, const AuditLimits& limits, bool key) {
    if (key) {
        const auto [len, max_part] = au.need_composition_range();
        au.compositions(len, max_part, [&](const Composition& a) {
            const Diagram d = skyline_diagram(a);
            const Poly lhs = dual_character(d);
            const Poly rhs = key_in_grid(a, d);
            au.record(a.to_string(), to_string(lhs), to_string(rhs), lhs == rhs);
        });
        return;
    }
    const std::size_t n = au.need_n(limits.max_n_dual_character);
    SchubertCache cache;
    au.permutations(n, [&](const Permutation& w) {
        const Poly lhs = dual_character(rothe_diagram(w));
        const Poly& rhs = cache.get(w);
        au.record(w.to_string(), to_string(lhs), to_string(rhs), lhs == rhs);
    });
}

// The reduced columns are pairwise disjoint exactly when the index avoids the
// upper-bound patterns.
void audit_reduced_disjoint(Auditor& au, const AuditLimits& limits) {
    if (au.has_composition_range()) {
        const auto [len, max_part] = au.need_composition_range();
        au.compositions(len, max_part, [&](const Composition& a) {
            const bool disjoint = reduced_columns_disjoint(skyline_diagram(a));
            const bool avoids = avoids_key_max(a);
            au.record(a.to_string(), verdict(disjoint), verdict(avoids), disjoint == avoids);
        });
        return;
    }
    const std::size_t n = au.need_n(limits.max_n_schubert);
    au.permutations(n, [&](const Permutation& w) {
        const bool disjoint = reduced_columns_disjoint(rothe_diagram(w));
        const bool avoids = avoids_schubert_max(w);
        au.record(w.to_string(), verdict(disjoint), verdict(avoids), disjoint == avoids);
    });
}

std::size_t family_rank(const std::vector<Diagram>& family, const Diagram& d) {
    std::vector<YPoly> polys;
    for (const Diagram& c : family) polys.push_back(f_c(c, d));
    return span_rank(polys);
}

// For each index containing an upper-bound pattern, the constructed family of
// t sub-diagrams spans a space of dimension below t.
void audit_dependent_family(Auditor& au, const AuditLimits& limits) {
    if (au.has_composition_range()) {
        const auto [len, max_part] = au.need_composition_range();
        au.compositions(len, max_part, [&](const Composition& a) {
            const auto anchor = key_family_anchor(a);
            if (!anchor) return;
            const Diagram d = skyline_diagram(a);
            const auto family = dependent_family(d, *anchor);
            const std::size_t rank = family_rank(family, d);
            au.record(a.to_string(), "rank=" + std::to_string(rank), "t=" + std::to_string(family.size()),
                      rank < family.size());
        });
        return;
    }
    const std::size_t n = au.need_n(limits.max_n_schubert);
    au.permutations(n, [&](const Permutation& w) {
        const auto occ = canonical_occurrence(w);
        if (!occ) return;
        const Diagram d = rothe_diagram(w);
        const auto family = dependent_family(w, *occ);
        const std::size_t rank = family_rank(family, d);
        au.record(w.to_string(), "rank=" + std::to_string(rank), "t=" + std::to_string(family.size()),
                  rank < family.size());
    });
}

void audit_dependence_identity(Auditor& au) {
    const int b = au.need_b();
    DependenceGuard guard;
    guard.max_b = au.forced() ? std::numeric_limits<int>::max() : b;
    for (int k = 2; k <= b; ++k) {
        const bool holds = verify_dependence_identity(k, guard);
        au.record("b=" + std::to_string(k), verdict(holds), "true", holds);
    }
}

}  // namespace

AuditReport run_audit(std::string_view theorem, const AuditRange& range, const AuditLimits& limits) {
    const auto start = std::chrono::steady_clock::now();
    Auditor au(range, limits);
    au.report.theorem = std::string(theorem);

    if (theorem == "schubert-max") {
        audit_schubert_bound(au, true, limits.max_n_schubert);
    } else if (theorem == "schubert-min") {
        audit_schubert_bound(au, false, limits.max_n_schubert);
    } else if (theorem == "key-max") {
        audit_key_bound(au, true);
    } else if (theorem == "key-min") {
        audit_key_bound(au, false);
    } else if (theorem == "key-lorentzian") {
        audit_key_lorentzian(au);
    } else if (theorem == "schroeder-count") {
        audit_schroeder(au, limits);
    } else if (theorem == "dualchar-schubert") {
        audit_dualchar(au, limits, false);
    } else if (theorem == "dualchar-key") {
        audit_dualchar(au, limits, true);
    } else if (theorem == "reduced-disjoint") {
        audit_reduced_disjoint(au, limits);
    } else if (theorem == "dependent-family") {
        audit_dependent_family(au, limits);
    } else if (theorem == "dependence-identity") {
        audit_dependence_identity(au);
    } else {
        throw std::invalid_argument("unknown theorem '" + std::string(theorem) + "'");
    }

    au.report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return std::move(au.report);
}

}  // namespace schubert
