#include "digdom/digdom.h"

#include "digdom/analysis.hpp"
#include "digdom/error.hpp"
#include "digdom/families.hpp"
#include "digdom/generators.hpp"
#include "digdom/instance_io.hpp"
#include "digdom/report.hpp"
#include "digdom/solvers.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <variant>
#include <vector>

using namespace digdom;

struct dd_digraph {
    Digraph d;
};

struct dd_solution {
    SolveResult result;
};

struct dd_solution_set {
    SolveMap map;
    std::vector<dd_solution> items;
};

struct dd_family {
    FamilyInstance instance;
    dd_digraph view;
};

struct dd_report {
    std::variant<BoundReport, SearchReport> content;
};

namespace {

thread_local std::string g_last_error;

dd_status to_status(ErrorCode code) {
    switch (code) {
    case ErrorCode::invalid_argument: return DD_ERR_INVALID_ARGUMENT;
    case ErrorCode::parse: return DD_ERR_PARSE;
    case ErrorCode::io: return DD_ERR_IO;
    case ErrorCode::construction: return DD_ERR_CONSTRUCTION;
    case ErrorCode::precondition: return DD_ERR_PRECONDITION;
    case ErrorCode::unsupported: return DD_ERR_UNSUPPORTED;
    case ErrorCode::indeterminate: return DD_ERR_INDETERMINATE;
    }
    return DD_ERR_INTERNAL;
}

/// Runs fn, translating exceptions into status codes and the thread's
/// last-error message.
template <class Fn>
dd_status guard(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return DD_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const ProvenBoundViolation& e) {
        g_last_error = e.what();
        return DD_ERR_PROVEN_BOUND_VIOLATION;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return DD_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DD_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return DD_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (p == nullptr) throw Error(ErrorCode::invalid_argument, std::string(what) + " is NULL");
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ParameterKind to_kind(dd_param p) {
    switch (p.tag) {
    case DD_PARAM_DOMINATION: return ParameterKind::domination();
    case DD_PARAM_K_DOMINATION: return ParameterKind::k_domination(p.k);
    case DD_PARAM_DOUBLE_DOMINATION: return ParameterKind::double_domination();
    case DD_PARAM_TOTAL_2_DOMINATION: return ParameterKind::total_2_domination();
    case DD_PARAM_PACKING: return ParameterKind::packing();
    case DD_PARAM_K_LIMITED_PACKING: return ParameterKind::k_limited_packing(p.k);
    case DD_PARAM_TWO_LIMITED_PACKING: return ParameterKind::two_limited_packing();
    case DD_PARAM_TOTAL_2_LIMITED_PACKING: return ParameterKind::total_2_limited_packing();
    }
    throw Error(ErrorCode::invalid_argument, "unknown parameter tag " + std::to_string(static_cast<int>(p.tag)));
}

dd_param from_kind(ParameterKind kind) {
    dd_param p{};
    p.tag = static_cast<dd_param_tag>(static_cast<int>(kind.tag()));
    p.k = kind.k().value_or(0);
    return p;
}

ReportFormat to_format(dd_format f) {
    if (f == DD_FORMAT_TEXT) return ReportFormat::text;
    if (f == DD_FORMAT_JSON) return ReportFormat::json;
    throw Error(ErrorCode::invalid_argument, "unknown format " + std::to_string(static_cast<int>(f)));
}

std::uint64_t effective_budget(std::uint64_t budget) { return budget == 0 ? default_budget() : budget; }

size_t copy_members(const VertexSet& s, uint32_t* buffer, size_t cap) {
    const auto members = s.members();
    if (buffer != nullptr) {
        for (size_t i = 0; i < members.size() && i < cap; ++i) buffer[i] = members[i];
    }
    return members.size();
}

dd_family* wrap(FamilyInstance inst) {
    auto* f = new dd_family{std::move(inst), {}};
    f->view.d = f->instance.digraph;
    return f;
}

Family to_family(dd_family_kind k) {
    switch (k) {
    case DD_FAMILY_OMEGA: return Family::omega;
    case DD_FAMILY_THETA: return Family::theta;
    case DD_FAMILY_GAMMA_TREE: return Family::gamma_tree;
    case DD_FAMILY_R_GADGET: return Family::r_gadget;
    case DD_FAMILY_REDUCTION_DD: return Family::reduction_dd;
    case DD_FAMILY_REDUCTION_LP: return Family::reduction_lp;
    }
    throw Error(ErrorCode::invalid_argument, "unknown family " + std::to_string(static_cast<int>(k)));
}

} // namespace

extern "C" {

const char* dd_last_error(void) { return g_last_error.c_str(); }

void dd_string_free(char* s) { std::free(s); }

const char* dd_version(void) { return "1.0.0"; }

dd_status dd_format_parse(const char* name, dd_format* out) {
    return guard([&] {
        require(name, "name");
        require(out, "out");
        *out = parse_report_format(name) == ReportFormat::json ? DD_FORMAT_JSON : DD_FORMAT_TEXT;
    });
}

// --- digraphs ---------------------------------------------------------------

dd_status dd_digraph_new(size_t n, const uint32_t* tails, const uint32_t* heads, size_t m, dd_digraph** out) {
    return guard([&] {
        require(out, "out");
        if (m > 0) {
            require(tails, "tails");
            require(heads, "heads");
        }
        std::vector<Arc> arcs(m);
        for (size_t i = 0; i < m; ++i) arcs[i] = {tails[i], heads[i]};
        *out = new dd_digraph{Digraph::build(n, arcs)};
    });
}

dd_status dd_digraph_parse(const char* text, dd_digraph** out) {
    return guard([&] {
        require(text, "text");
        require(out, "out");
        *out = new dd_digraph{parse_instance(text)};
    });
}

dd_status dd_digraph_load(const char* path, dd_digraph** out) {
    return guard([&] {
        require(path, "path");
        require(out, "out");
        *out = new dd_digraph{load_instance(path)};
    });
}

dd_status dd_digraph_save(const dd_digraph* d, const char* path) {
    return guard([&] {
        require(d, "digraph");
        require(path, "path");
        save_instance(d->d, path);
    });
}

dd_status dd_digraph_serialize(const dd_digraph* d, char** out) {
    return guard([&] {
        require(d, "digraph");
        require(out, "out");
        *out = copy_string(serialize_instance(d->d));
    });
}

dd_status dd_digraph_to_dot(const dd_digraph* d, char** out) {
    return guard([&] {
        require(d, "digraph");
        require(out, "out");
        *out = copy_string(to_dot(d->d));
    });
}

dd_status dd_digraph_converse(const dd_digraph* d, dd_digraph** out) {
    return guard([&] {
        require(d, "digraph");
        require(out, "out");
        *out = new dd_digraph{converse(d->d)};
    });
}

size_t dd_digraph_order(const dd_digraph* d) { return d ? d->d.order() : 0; }

size_t dd_digraph_arc_count(const dd_digraph* d) { return d ? d->d.arc_count() : 0; }

void dd_digraph_free(dd_digraph* d) { delete d; }

// --- parameters and validation ------------------------------------------------

dd_status dd_param_parse(const char* name, dd_param* out) {
    return guard([&] {
        require(name, "name");
        require(out, "out");
        *out = from_kind(ParameterKind::parse(name));
    });
}

dd_status dd_validate(const dd_digraph* d, const uint32_t* members, size_t count, dd_param param, int* valid,
                      uint32_t* vertex, char** reason) {
    return guard([&] {
        require(d, "digraph");
        require(valid, "valid");
        if (count > 0) require(members, "members");
        const std::size_t n = d->d.order();
        for (size_t i = 0; i < count; ++i) {
            if (members[i] >= n) {
                throw Error(ErrorCode::invalid_argument,
                            "vertex " + std::to_string(members[i]) + " >= n=" + std::to_string(n));
            }
        }
        const VertexSet set = VertexSet::from_members(n, std::span<const Vertex>(members, count));
        const ValidationResult res = validate(d->d, set, to_kind(param));
        *valid = res ? 0 : 1;
        if (res) {
            if (vertex) *vertex = res->vertex;
            if (reason) *reason = copy_string(res->reason());
        } else if (reason) {
            *reason = nullptr;
        }
    });
}

// --- solving -------------------------------------------------------------------

uint64_t dd_default_budget(void) { return default_budget(); }

dd_status dd_solve(const dd_digraph* d, dd_param param, uint64_t budget, int pruned, dd_solution** out) {
    return guard([&] {
        require(d, "digraph");
        require(out, "out");
        const SearchStrategy strategy = pruned ? SearchStrategy::pruned : SearchStrategy::plain;
        *out = new dd_solution{solve_exact(d->d, to_kind(param), effective_budget(budget), strategy)};
    });
}

dd_solve_status dd_solution_status(const dd_solution* s) {
    if (!s) return DD_SOLVE_BUDGET_EXCEEDED;
    switch (s->result.status) {
    case SolveStatus::optimal: return DD_SOLVE_OPTIMAL;
    case SolveStatus::infeasible: return DD_SOLVE_INFEASIBLE;
    case SolveStatus::budget_exceeded: return DD_SOLVE_BUDGET_EXCEEDED;
    }
    return DD_SOLVE_BUDGET_EXCEEDED;
}

int dd_solution_value(const dd_solution* s, size_t* value) {
    if (!s || !s->result.value) return 0;
    if (value) *value = *s->result.value;
    return 1;
}

size_t dd_solution_witness(const dd_solution* s, uint32_t* buffer, size_t cap) {
    if (!s || !s->result.witness) return 0;
    return copy_members(*s->result.witness, buffer, cap);
}

uint64_t dd_solution_subsets_examined(const dd_solution* s) { return s ? s->result.subsets_examined : 0; }

dd_status dd_solution_render(const dd_solution* s, dd_format format, char** out) {
    return guard([&] {
        require(s, "solution");
        require(out, "out");
        *out = copy_string(render(s->result, to_format(format)));
    });
}

void dd_solution_free(dd_solution* s) { delete s; }

dd_status dd_solve_all(const dd_digraph* d, uint64_t budget, int pruned, dd_solution_set** out) {
    return guard([&] {
        require(d, "digraph");
        require(out, "out");
        const SearchStrategy strategy = pruned ? SearchStrategy::pruned : SearchStrategy::plain;
        auto* set = new dd_solution_set{solve_all(d->d, effective_budget(budget), strategy), {}};
        for (const ParameterKind& kind : solve_all_kinds()) set->items.push_back({set->map.at(kind)});
        *out = set;
    });
}

size_t dd_solution_set_size(const dd_solution_set* set) { return set ? set->items.size() : 0; }

const dd_solution* dd_solution_set_at(const dd_solution_set* set, size_t i) {
    if (!set || i >= set->items.size()) return nullptr;
    return &set->items[i];
}

dd_status dd_solution_set_render(const dd_solution_set* set, dd_format format, char** out) {
    return guard([&] {
        require(set, "solution set");
        require(out, "out");
        *out = copy_string(render(set->map, to_format(format)));
    });
}

void dd_solution_set_free(dd_solution_set* set) { delete set; }

// --- families ------------------------------------------------------------------

dd_status dd_construct_omega(const dd_digraph* seed, size_t r, dd_family** out) {
    return guard([&] {
        require(seed, "seed digraph");
        require(out, "out");
        *out = wrap(construct_omega(seed->d, r == 0 ? std::nullopt : std::optional<std::size_t>(r)));
    });
}

dd_status dd_construct_theta(const dd_digraph* seed, size_t r, dd_family** out) {
    return guard([&] {
        require(seed, "seed digraph");
        require(out, "out");
        *out = wrap(construct_theta(seed->d, r == 0 ? std::nullopt : std::optional<std::size_t>(r)));
    });
}

dd_status dd_construct_gamma_tree(size_t r, const size_t* star_orders, size_t star_count, uint64_t seed,
                                  dd_family** out) {
    return guard([&] {
        require(out, "out");
        if (star_count > 0) require(star_orders, "star_orders");
        const std::vector<std::size_t> stars(star_orders, star_orders + star_count);
        *out = wrap(construct_gamma_tree(r, stars, seed));
    });
}

dd_status dd_construct_r_gadget(const dd_digraph* seed, dd_family** out) {
    return guard([&] {
        require(seed, "seed digraph");
        require(out, "out");
        *out = wrap(construct_r_gadget(seed->d));
    });
}

dd_status dd_construct_reduction_dd(const dd_digraph* d, uint64_t budget, dd_family** out) {
    return guard([&] {
        require(d, "digraph");
        require(out, "out");
        *out = wrap(reduction_dd_instance(d->d, effective_budget(budget)));
    });
}

dd_status dd_construct_reduction_lp(const dd_digraph* d, uint64_t budget, dd_family** out) {
    return guard([&] {
        require(d, "digraph");
        require(out, "out");
        *out = wrap(reduction_lp_instance(d->d, effective_budget(budget)));
    });
}

dd_status dd_reduce_domination_gadget(const dd_digraph* d, dd_digraph** out) {
    return guard([&] {
        require(d, "digraph");
        require(out, "out");
        *out = new dd_digraph{reduce_domination_gadget(d->d)};
    });
}

dd_status dd_reduce_packing_gadget(const dd_digraph* d, dd_digraph** out) {
    return guard([&] {
        require(d, "digraph");
        require(out, "out");
        *out = new dd_digraph{reduce_packing_gadget(d->d)};
    });
}

dd_status dd_extremal_membership(const dd_digraph* d, dd_family_kind family, uint64_t budget, int* member) {
    return guard([&] {
        require(d, "digraph");
        require(member, "member");
        *member = extremal_membership(d->d, to_family(family), effective_budget(budget)) ? 1 : 0;
    });
}

dd_family_kind dd_family_kind_of(const dd_family* f) {
    return f ? static_cast<dd_family_kind>(static_cast<int>(f->instance.family)) : DD_FAMILY_OMEGA;
}

const dd_digraph* dd_family_digraph(const dd_family* f) { return f ? &f->view : nullptr; }

size_t dd_family_extremal_set(const dd_family* f, uint32_t* buffer, size_t cap) {
    return f ? copy_members(f->instance.extremal_set, buffer, cap) : 0;
}

dd_status dd_family_sidecar(const dd_family* f, char** out) {
    return guard([&] {
        require(f, "family");
        require(out, "out");
        *out = copy_string(render_sidecar(f->instance));
    });
}

void dd_family_free(dd_family* f) { delete f; }

// --- audits --------------------------------------------------------------------

dd_status dd_audit_digraph(const dd_digraph* d, uint64_t budget, int include_reductions, dd_report** out) {
    return guard([&] {
        require(d, "digraph");
        require(out, "out");
        AnalysisOptions o;
        o.budget = effective_budget(budget);
        o.include_reductions = include_reductions != 0;
        *out = new dd_report{bounds_report(d->d, o)};
    });
}

dd_status dd_audit_search(const char* problem, const char* genspec, uint64_t trials, uint64_t budget,
                          dd_report** out) {
    return guard([&] {
        require(problem, "problem");
        require(genspec, "genspec");
        require(out, "out");
        AnalysisOptions o;
        o.budget = effective_budget(budget);
        *out = new dd_report{counterexample_search({problem}, GenSpec::parse(genspec), trials, o)};
    });
}

dd_verdict dd_report_verdict(const dd_report* r) {
    if (!r) return DD_VERDICT_CLEAN;
    if (const auto* br = std::get_if<BoundReport>(&r->content)) {
        for (const auto& rec : br->records) {
            if (rec.violated() && rec.proven) return DD_VERDICT_PROVEN_VIOLATION;
        }
        return br->any_violated() ? DD_VERDICT_OPEN_FINDING : DD_VERDICT_CLEAN;
    }
    const auto& sr = std::get<SearchReport>(r->content);
    if (sr.proven_violation()) return DD_VERDICT_PROVEN_VIOLATION;
    if (sr.open_finding()) return DD_VERDICT_OPEN_FINDING;
    return DD_VERDICT_CLEAN;
}

dd_status dd_report_render(const dd_report* r, dd_format format, char** out) {
    return guard([&] {
        require(r, "report");
        require(out, "out");
        *out = copy_string(std::visit([&](const auto& rep) { return render(rep, to_format(format)); }, r->content));
    });
}

size_t dd_report_finding_count(const dd_report* r) {
    if (!r) return 0;
    const auto* sr = std::get_if<SearchReport>(&r->content);
    return sr ? sr->violations.size() : 0;
}

dd_status dd_report_finding(const dd_report* r, size_t i, char** label, char** instance) {
    return guard([&] {
        require(r, "report");
        const auto* sr = std::get_if<SearchReport>(&r->content);
        if (!sr || i >= sr->violations.size()) {
            throw Error(ErrorCode::invalid_argument, "finding index " + std::to_string(i) + " out of range");
        }
        const SearchFinding& f = sr->violations[i];
        std::string name = f.theorem_id + "-index" + std::to_string(f.index) + "-seed" + std::to_string(f.seed);
        for (char& c : name) {
            if (c == '(' || c == ')' || c == ',') c = '_';
        }
        if (label) *label = copy_string(name);
        if (instance) *instance = copy_string(serialize_instance(f.digraph));
    });
}

void dd_report_free(dd_report* r) { delete r; }

} // extern "C"
