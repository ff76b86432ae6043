#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "schubert/characters.hpp"
#include "schubert/combinat.hpp"
#include "schubert/diagram.hpp"
#include "schubert/lorentz.hpp"
#include "schubert/weyl.hpp"

namespace schubert::cli {

using nlohmann::json;

json poly_to_json(const Poly& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coef", c.str()}});
    return terms;
}

Poly poly_from_json(const json& j, std::size_t nvars) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be a list of terms");
    if (!j.empty()) nvars = j.front().at("exp").size();
    Poly f(nvars);
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("exp") || !term.contains("coef"))
            throw std::invalid_argument("term needs 'exp' and 'coef'");
        const auto exp = term.at("exp").get<Exponents>();
        const auto& coef = term.at("coef");
        if (!coef.is_string()) throw std::invalid_argument("'coef' must be a string-encoded integer");
        BigInt c;
        try {
            c = BigInt(coef.get<std::string>());
        } catch (const std::exception&) {
            throw std::invalid_argument("'coef' is not an integer");
        }
        if (c == 0) throw std::invalid_argument("zero coefficients are not stored");
        f.add_term(exp, c);
    }
    return f;
}

json report_to_json(const AuditReport& report, bool timing) {
    json records = json::array();
    for (const auto& r : report.records)
        records.push_back({{"input", r.input}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"agree", r.agree}});
    json out = {{"theorem", report.theorem},
                {"range", report.range},
                {"records", records},
                {"summary",
                 {{"records", report.records.size()},
                  {"agreements", report.agreements},
                  {"disagreements", report.disagreements},
                  {"both_hold", report.both_hold}}}};
    if (timing) out["wall_time_ms"] = report.wall_time_ms;
    return out;
}

std::string summary_line(const AuditReport& report) {
    std::ostringstream os;
    os << "summary: records=" << report.records.size() << " agreements=" << report.agreements
       << " disagreements=" << report.disagreements << " both-hold=" << report.both_hold;
    return os.str();
}

std::string report_to_text(const AuditReport& report, bool timing) {
    std::ostringstream os;
    os << "theorem: " << report.theorem << '\n' << "range: " << report.range << '\n';
    for (const auto& r : report.records)
        os << r.input << " lhs=" << r.lhs << " rhs=" << r.rhs << ' ' << (r.agree ? "agree" : "DISAGREE") << '\n';
    os << summary_line(report) << '\n';
    if (timing) os << "wall-time-ms: " << report.wall_time_ms << '\n';
    return os.str();
}

namespace {

bool env_force() {
    const char* v = std::getenv("SCHUBERT_FORCE");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
}

struct ComputeOptions {
    std::string kind;
    std::string input;
    bool composition = false;
    bool normalize = false;
    bool json = false;
    bool force = false;
};

constexpr std::size_t kMaxComputeN = 9;

Permutation checked_permutation(const std::string& text, bool force) {
    Permutation w = parse_permutation(text);
    if (!force && w.size() > kMaxComputeN) throw RangeError("permutation longer than 9 (use --force)");
    return w;
}

Composition checked_composition(const std::string& text, bool force) {
    Composition a = parse_composition(text);
    if (!force && (a.size() > kMaxComputeN || a.max_part() > kMaxComputeN))
        throw RangeError("composition too large (use --force)");
    return a;
}

// A diagram literal, a composition (with --composition) or a permutation.
Diagram diagram_of(const ComputeOptions& o) {
    if (!o.input.empty() && o.input.front() == '[') return parse_diagram(o.input);
    if (o.composition) return skyline_diagram(checked_composition(o.input, o.force));
    return rothe_diagram(checked_permutation(o.input, o.force));
}

Poly character_of(const ComputeOptions& o) {
    if (!o.input.empty() && o.input.front() == '[') return dual_character(parse_diagram(o.input));
    if (o.composition) return key_poly(checked_composition(o.input, o.force));
    return schubert_poly(checked_permutation(o.input, o.force));
}

json diagram_json(const Diagram& d) {
    json cols = json::array();
    for (const Column& c : d.columns()) cols.push_back(c);
    return cols;
}

void compute(const ComputeOptions& o, std::ostream& out) {
    std::optional<Poly> poly;
    std::optional<Diagram> diagram;
    std::optional<bool> flag;

    if (o.kind == "schubert") {
        poly = schubert_poly(checked_permutation(o.input, o.force));
    } else if (o.kind == "key") {
        poly = key_poly(checked_composition(o.input, o.force));
    } else if (o.kind == "min") {
        poly = min_poly(diagram_of(o));
    } else if (o.kind == "max") {
        poly = max_poly(diagram_of(o));
    } else if (o.kind == "dual-char") {
        poly = dual_character(diagram_of(o));
    } else if (o.kind == "rothe") {
        diagram = rothe_diagram(checked_permutation(o.input, o.force));
    } else if (o.kind == "skyline") {
        diagram = skyline_diagram(checked_composition(o.input, o.force));
    } else if (o.kind == "lorentzian") {
        LorentzGuard guard;
        if (o.force) guard = {std::numeric_limits<unsigned>::max(), std::numeric_limits<std::size_t>::max()};
        const Poly f = character_of(o);
        flag = o.normalize ? is_lorentzian(normalize_n(f), guard) : is_lorentzian(f, guard);
    } else {
        throw std::invalid_argument("unknown kind '" + o.kind + "'");
    }

    if (poly) {
        out << (o.json ? poly_to_json(*poly).dump() : to_string(*poly)) << '\n';
    } else if (diagram) {
        out << (o.json ? diagram_json(*diagram).dump() : diagram->to_string()) << '\n';
    } else {
        out << (o.json ? json(*flag).dump() : (*flag ? "true" : "false")) << '\n';
    }
}

struct VerifyOptions {
    std::string theorem;
    AuditRange range;
    bool force = false;
    bool json = false;
    bool timing = false;
    std::string out_path;
};

int verify(const VerifyOptions& o, std::ostream& out) {
    AuditLimits limits;
    limits.force = o.force;
    const AuditReport report = run_audit(o.theorem, o.range, limits);
    const std::string rendered = o.json ? report_to_json(report, o.timing).dump(2) + "\n" : report_to_text(report, o.timing);
    if (o.out_path.empty()) {
        out << rendered;
    } else {
        std::ofstream file(o.out_path);
        if (!file) throw std::runtime_error("cannot open " + o.out_path);
        file << rendered;
        out << summary_line(report) << '\n';
    }
    return report.all_agree() ? kOk : kDisagreement;
}

struct CountOptions {
    std::string what;
    std::string input;
    std::optional<std::size_t> n;
    bool composition = false;
    bool force = false;
};

void count(const CountOptions& o, std::ostream& out) {
    EnumerationGuard guard;
    if (o.force) guard.max_n = std::numeric_limits<std::size_t>::max();
    if (o.what == "max-avoiders") {
        if (!o.n) throw std::invalid_argument("count max-avoiders needs --n");
        out << count_max_avoiders(*o.n, guard) << '\n';
    } else if (o.what == "schroeder") {
        if (!o.n) throw std::invalid_argument("count schroeder needs --n");
        out << schroeder(*o.n) << '\n';
    } else if (o.what == "sub-diagrams") {
        ComputeOptions c;
        c.input = o.input;
        c.composition = o.composition;
        c.force = o.force;
        out << count_sub_diagrams(diagram_of(c)) << '\n';
    } else {
        throw std::invalid_argument("unknown count '" + o.what + "'");
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schubert and key polynomials, their diagram bounds, and exhaustive theorem audits"};
    app.require_subcommand(1);

    ComputeOptions compute_opts;
    auto* compute_cmd = app.add_subcommand("compute", "Compute a polynomial, diagram or predicate");
    compute_cmd
        ->add_option("kind", compute_opts.kind, "schubert | key | min | max | dual-char | rothe | skyline | lorentzian")
        ->required();
    compute_cmd->add_option("input", compute_opts.input, "permutation (1432 or 1,4,3,2), composition (0,2) or diagram")
        ->required();
    compute_cmd->add_flag("-c,--composition", compute_opts.composition, "read the input as a composition");
    compute_cmd->add_flag("--normalize", compute_opts.normalize, "apply x^mu -> x^mu/mu! before the Lorentzian test");
    compute_cmd->add_flag("--json", compute_opts.json, "emit JSON");
    compute_cmd->add_flag("--force", compute_opts.force, "lift size guards");

    VerifyOptions verify_opts;
    std::optional<std::size_t> n, len;
    std::optional<unsigned> max_part;
    std::optional<int> b;
    auto* verify_cmd = app.add_subcommand("verify", "Exhaustively audit a theorem over a range");
    verify_cmd->add_option("theorem", verify_opts.theorem, "theorem id")->required();
    verify_cmd->add_option("--n", n, "permutation size");
    verify_cmd->add_option("--len", len, "composition length");
    verify_cmd->add_option("--max-part", max_part, "largest composition part");
    verify_cmd->add_option("--b", b, "largest b for the dependence identity");
    verify_cmd->add_flag("--force", verify_opts.force, "lift default range limits");
    verify_cmd->add_flag("--json", verify_opts.json, "emit the report as JSON");
    verify_cmd->add_flag("--timing", verify_opts.timing, "include wall time in the report");
    verify_cmd->add_option("--out", verify_opts.out_path, "write the report to a file");

    CountOptions count_opts;
    auto* count_cmd = app.add_subcommand("count", "Counting sequences and sub-diagram counts");
    count_cmd->add_option("what", count_opts.what, "max-avoiders | schroeder | sub-diagrams")->required();
    count_cmd->add_option("input", count_opts.input, "input for sub-diagrams");
    count_cmd->add_option("--n", count_opts.n, "size");
    count_cmd->add_flag("-c,--composition", count_opts.composition, "read the input as a composition");
    count_cmd->add_flag("--force", count_opts.force, "lift size guards");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    const bool forced_by_env = env_force();
    try {
        if (*compute_cmd) {
            compute_opts.force = compute_opts.force || forced_by_env;
            compute(compute_opts, out);
            return kOk;
        }
        if (*verify_cmd) {
            verify_opts.force = verify_opts.force || forced_by_env;
            verify_opts.range = {n, len, max_part, b};
            return verify(verify_opts, out);
        }
        count_opts.force = count_opts.force || forced_by_env;
        count(count_opts, out);
        return kOk;
    } catch (const RangeError& e) {
        err << "range error: " << e.what() << '\n';
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        err << "range error: " << e.what() << '\n';
    }
    return kUsageError;
}

}  // namespace schubert::cli
