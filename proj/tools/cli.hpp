#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "schubert/audit.hpp"
#include "schubert/poly.hpp"

namespace schubert::cli {

enum ExitStatus : int {
    kOk = 0,
    kDisagreement = 1,
    kUsageError = 2,
};

// [{"exp": [e1, ..., en], "coef": "3"}, ...] in ascending lexicographic order of exp.
nlohmann::json poly_to_json(const Poly& f);
// Throws std::invalid_argument on schema violations. An empty list needs nvars.
Poly poly_from_json(const nlohmann::json& j, std::size_t nvars = 0);

nlohmann::json report_to_json(const AuditReport& report, bool timing);
std::string report_to_text(const AuditReport& report, bool timing);

// Entry point shared by the executable and the tests; args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubert::cli
