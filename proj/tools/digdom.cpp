// digdom command-line front end. Talks to the library only through digdom.h.
//
// Exit codes:
//   compute   0 optimal, 2 infeasible, 3 budget exceeded, 1 bad input
//   verify    0 valid, 2 violation, 1 bad input
//   construct 0 written, 1 bad input or construction failure
//   audit     0 clean, 4 a proven bound failed, 5 an open-problem finding, 1 bad input

#include "digdom/digdom.h"

#include "CLI11.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitViolation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitProvenViolation = 4;
constexpr int kExitOpenFinding = 5;

/// Thrown for any failed library call; carries the exit code to use.
struct Failure {
    int exit_code;
    std::string message;
};

void check(dd_status status, int exit_code = kExitError) {
    if (status == DD_OK) return;
    if (status == DD_ERR_PROVEN_BOUND_VIOLATION) exit_code = kExitProvenViolation;
    throw Failure{exit_code, dd_last_error()};
}

struct DigraphDeleter {
    void operator()(dd_digraph* p) const { dd_digraph_free(p); }
};
struct SolutionDeleter {
    void operator()(dd_solution* p) const { dd_solution_free(p); }
};
struct SolutionSetDeleter {
    void operator()(dd_solution_set* p) const { dd_solution_set_free(p); }
};
struct FamilyDeleter {
    void operator()(dd_family* p) const { dd_family_free(p); }
};
struct ReportDeleter {
    void operator()(dd_report* p) const { dd_report_free(p); }
};
struct StringDeleter {
    void operator()(char* p) const { dd_string_free(p); }
};

using DigraphPtr = std::unique_ptr<dd_digraph, DigraphDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) {
    StringPtr holder(s);
    return s ? std::string(s) : std::string();
}

DigraphPtr load(const std::string& path) {
    dd_digraph* d = nullptr;
    check(dd_digraph_load(path.c_str(), &d));
    return DigraphPtr(d);
}

dd_format format_of(const std::string& name) {
    dd_format f{};
    check(dd_format_parse(name.c_str(), &f));
    return f;
}

dd_param param_of(const std::string& name) {
    dd_param p{};
    check(dd_param_parse(name.c_str(), &p));
    return p;
}

std::vector<std::uint64_t> parse_list(const std::string& text, const char* what) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(pos, end - pos);
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw Failure{kExitError, std::string("malformed ") + what + " '" + text + "'"};
        }
        out.push_back(v);
        pos = end + 1;
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure{kExitError, "cannot write '" + path + "'"};
    out << content;
}

// --- compute ---------------------------------------------------------------

struct ComputeArgs {
    std::string file;
    std::string param;
    bool all = false;
    std::uint64_t budget = 0;
    std::string format = "text";
    bool plain = false;
};

int run_compute(const ComputeArgs& a) {
    if (a.all == !a.param.empty()) throw Failure{kExitError, "give exactly one of --param and --all"};
    const dd_format fmt = format_of(a.format);
    DigraphPtr d = load(a.file);
    const int pruned = a.plain ? 0 : 1;
    if (a.all) {
        dd_solution_set* raw = nullptr;
        check(dd_solve_all(d.get(), a.budget, pruned, &raw));
        std::unique_ptr<dd_solution_set, SolutionSetDeleter> set(raw);
        char* text = nullptr;
        check(dd_solution_set_render(set.get(), fmt, &text));
        std::cout << take(text);
        for (std::size_t i = 0; i < dd_solution_set_size(set.get()); ++i) {
            if (dd_solution_status(dd_solution_set_at(set.get(), i)) == DD_SOLVE_BUDGET_EXCEEDED) return kExitBudget;
        }
        return kExitOk;
    }
    const dd_param p = param_of(a.param);
    dd_solution* raw = nullptr;
    check(dd_solve(d.get(), p, a.budget, pruned, &raw));
    std::unique_ptr<dd_solution, SolutionDeleter> sol(raw);
    char* text = nullptr;
    check(dd_solution_render(sol.get(), fmt, &text));
    std::cout << take(text);
    switch (dd_solution_status(sol.get())) {
    case DD_SOLVE_OPTIMAL: return kExitOk;
    case DD_SOLVE_INFEASIBLE: return kExitInfeasible;
    case DD_SOLVE_BUDGET_EXCEEDED: return kExitBudget;
    }
    return kExitError;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string file;
    std::string set;
    std::string param;
};

int run_verify(const VerifyArgs& a) {
    std::vector<std::uint32_t> members;
    if (!a.set.empty()) {
        for (std::uint64_t v : parse_list(a.set, "set literal")) {
            if (v > UINT32_MAX) throw Failure{kExitError, "vertex " + std::to_string(v) + " out of range"};
            members.push_back(static_cast<std::uint32_t>(v));
        }
    }
    const dd_param p = param_of(a.param);
    DigraphPtr d = load(a.file);
    int valid = 0;
    std::uint32_t vertex = 0;
    char* reason = nullptr;
    check(dd_validate(d.get(), members.data(), members.size(), p, &valid, &vertex, &reason));
    if (valid) {
        std::cout << "valid\n";
        return kExitOk;
    }
    std::cout << "violation vertex=" << vertex << " reason=\"" << take(reason) << "\"\n";
    return kExitViolation;
}

// --- construct -------------------------------------------------------------

struct ConstructArgs {
    std::string family;
    std::string input;
    std::size_t r = 0;
    std::string stars;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::string output;
    std::string dot;
};

int run_construct(const ConstructArgs& a) {
    const std::string& fam = a.family;
    const bool needs_input = fam != "gamma-tree";
    DigraphPtr input;
    if (needs_input) {
        if (a.input.empty()) throw Failure{kExitError, fam + " needs --input"};
        input = load(a.input);
    }

    dd_family* raw = nullptr;
    if (fam == "omega") {
        check(dd_construct_omega(input.get(), a.r, &raw));
    } else if (fam == "theta") {
        check(dd_construct_theta(input.get(), a.r, &raw));
    } else if (fam == "gamma-tree") {
        std::vector<std::size_t> stars;
        if (!a.stars.empty()) {
            for (std::uint64_t t : parse_list(a.stars, "star order list")) stars.push_back(static_cast<std::size_t>(t));
        }
        check(dd_construct_gamma_tree(a.r, stars.data(), stars.size(), a.seed, &raw));
    } else if (fam == "r-gadget") {
        check(dd_construct_r_gadget(input.get(), &raw));
    } else if (fam == "reduction-dd") {
        check(dd_construct_reduction_dd(input.get(), a.budget, &raw));
    } else if (fam == "reduction-lp") {
        check(dd_construct_reduction_lp(input.get(), a.budget, &raw));
    } else {
        throw Failure{kExitError, "unknown family '" + fam + "'"};
    }
    std::unique_ptr<dd_family, FamilyDeleter> family(raw);
    const dd_digraph* d = dd_family_digraph(family.get());

    check(dd_digraph_save(d, a.output.c_str()));
    char* sidecar = nullptr;
    check(dd_family_sidecar(family.get(), &sidecar));
    write_file(a.output + ".meta.json", take(sidecar));
    if (!a.dot.empty()) {
        char* dot = nullptr;
        check(dd_digraph_to_dot(d, &dot));
        write_file(a.dot, take(dot));
    }
    std::cout << "wrote " << a.output << " (n=" << dd_digraph_order(d) << ", m=" << dd_digraph_arc_count(d)
              << ") and " << a.output << ".meta.json\n";
    return kExitOk;
}

// --- audit -----------------------------------------------------------------

struct AuditArgs {
    std::string file;
    std::string gen;
    std::string problem = "all";
    std::uint64_t trials = 0;
    std::uint64_t budget = 0;
    std::string format = "text";
    std::string out_dir = "digdom-findings";
    bool no_reductions = false;
};

int run_audit(const AuditArgs& a) {
    if (a.file.empty() == a.gen.empty()) throw Failure{kExitError, "give exactly one of FILE and --gen"};
    const dd_format fmt = format_of(a.format);
    dd_report* raw = nullptr;
    if (!a.file.empty()) {
        DigraphPtr d = load(a.file);
        check(dd_audit_digraph(d.get(), a.budget, a.no_reductions ? 0 : 1, &raw));
    } else {
        check(dd_audit_search(a.problem.c_str(), a.gen.c_str(), a.trials, a.budget, &raw));
    }
    std::unique_ptr<dd_report, ReportDeleter> report(raw);
    char* text = nullptr;
    check(dd_report_render(report.get(), fmt, &text));
    std::cout << take(text);

    const std::size_t findings = dd_report_finding_count(report.get());
    if (findings > 0) {
        std::error_code ec;
        std::filesystem::create_directories(a.out_dir, ec);
        if (ec) throw Failure{kExitError, "cannot create '" + a.out_dir + "': " + ec.message()};
        for (std::size_t i = 0; i < findings; ++i) {
            char* label = nullptr;
            char* instance = nullptr;
            check(dd_report_finding(report.get(), i, &label, &instance));
            const std::string path = (std::filesystem::path(a.out_dir) / (take(label) + ".dg")).string();
            write_file(path, take(instance));
            std::cerr << "finding written to " << path << "\n";
        }
    }
    switch (dd_report_verdict(report.get())) {
    case DD_VERDICT_CLEAN: return kExitOk;
    case DD_VERDICT_PROVEN_VIOLATION: return kExitProvenViolation;
    case DD_VERDICT_OPEN_FINDING: return kExitOpenFinding;
    }
    return kExitError;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact double domination, total 2-domination and 2-limited packing in digraphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(dd_version()));

    const std::string budget_help = "Validity tests allowed per solve (default 2^24 or $DIGDOM_BUDGET)";
    const std::string param_help =
        "gamma, gamma-2, gamma-x2, gamma-t2, rho, L1, L2, L2t, k-dom:K, k-lp:K (aliases: dom, double-dom, "
        "total-2-dom, packing, 2-limited-packing, total-2-limited-packing)";

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Solve one parameter (or all) exactly");
    c->add_option("file", compute.file, "Instance file")->required();
    c->add_option("--param", compute.param, param_help);
    c->add_flag("--all", compute.all, "Solve every supported parameter");
    c->add_option("--budget", compute.budget, budget_help);
    c->add_option("--format", compute.format, "text or json");
    c->add_flag("--plain", compute.plain, "Use plain enumeration instead of the pruned search");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check whether a vertex set has a property");
    v->add_option("file", verify.file, "Instance file")->required();
    v->add_option("--set", verify.set, "Comma-separated vertex list, e.g. 0,2,5")->required();
    v->add_option("--param", verify.param, param_help)->required();

    ConstructArgs construct;
    auto* k = app.add_subcommand("construct", "Build an extremal family member or reduction gadget");
    k->add_option("family", construct.family, "omega, theta, gamma-tree, r-gadget, reduction-dd, reduction-lp")
        ->required();
    k->add_option("--input", construct.input, "Seed digraph (all families except gamma-tree)");
    k->add_option("--r", construct.r, "omega/theta: target degree (default: smallest valid); gamma-tree: P2 copies");
    k->add_option("--stars", construct.stars, "gamma-tree: comma-separated star orders, each >= 3");
    k->add_option("--seed", construct.seed, "gamma-tree: RNG seed (other families are deterministic)");
    k->add_option("--budget", construct.budget, budget_help);
    k->add_option("-o,--output", construct.output, "Instance file to write")->required();
    k->add_option("--dot", construct.dot, "Also write a Graphviz export");

    AuditArgs audit;
    auto* u = app.add_subcommand("audit", "Evaluate every bound on a digraph or a generated stream");
    u->add_option("file", audit.file, "Instance file");
    u->add_option("--gen", audit.gen,
                  "Generator: random:n=8:p=0.3[:seed=S][:trials=T], tree:n=N, trees:n=N (or :exhaustive), "
                  "star:a=A:b=B, functional:n=N, contrafunctional:n=N");
    u->add_option("--problem", audit.problem, "P1, P2, a theorem id, or all (with --gen)");
    u->add_option("--trials", audit.trials, "Instances to draw (default: the generator's count)");
    u->add_option("--budget", audit.budget, budget_help);
    u->add_option("--format", audit.format, "text or json");
    u->add_option("--out-dir", audit.out_dir, "Where violating instances are written");
    u->add_flag("--no-reductions", audit.no_reductions, "Skip the reduction identities for a single file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (c->parsed()) return run_compute(compute);
        if (v->parsed()) return run_verify(verify);
        if (k->parsed()) return run_construct(construct);
        if (u->parsed()) return run_audit(audit);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.exit_code;
    }
    return kExitError;
}
