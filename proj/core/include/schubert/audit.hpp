#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// One checked instance: both sides evaluated independently.
struct AuditRecord {
    std::string input;
    std::string lhs;
    std::string rhs;
    bool agree = false;
};

struct AuditRange {
    std::optional<std::size_t> n;
    std::optional<std::size_t> len;
    std::optional<unsigned> max_part;
    std::optional<int> b;
};

/// Size limits for exhaustive sweeps; `force` lifts all of them.
struct AuditLimits {
    std::size_t max_n_schubert = 7;
    std::size_t max_n_dual_character = 5;
    std::size_t max_n_count = 9;
    std::size_t max_len = 4;
    unsigned max_part = 4;
    int max_b = 7;
    bool force = false;
};

struct AuditReport {
    std::string theorem;
    std::string range;
    std::vector<AuditRecord> records;
    std::size_t agreements = 0;
    std::size_t disagreements = 0;
    // Records whose two sides both read "true".
    std::size_t both_hold = 0;
    double wall_time_ms = 0;

    bool all_agree() const { return disagreements == 0; }
};

// Theorem ids accepted by run_audit, in display order.
const std::vector<std::string>& theorem_ids();

// Throws std::invalid_argument for an unknown theorem or a missing range
// parameter, RangeError when a limit is exceeded.
AuditReport run_audit(std::string_view theorem, const AuditRange& range, const AuditLimits& limits = {});

}  // namespace schubert
