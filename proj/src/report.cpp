#include "digdom/report.hpp"

#include "digdom/error.hpp"
#include "digdom/instance_io.hpp"

#include "json.hpp"

#include <sstream>

namespace digdom {

using nlohmann::json;

ReportFormat parse_report_format(std::string_view name) {
    if (name == "text") return ReportFormat::text;
    if (name == "json") return ReportFormat::json;
    throw Error(ErrorCode::invalid_argument, "unknown format '" + std::string(name) + "' (text or json)");
}

namespace {

// --- shared helpers --------------------------------------------------------

std::string quote_if_needed(const std::string& s) {
    if (!s.empty() && s.find_first_of(" \"=") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

/// Arc list for text output: "0>1,1>2".
std::string arc_list(const Digraph& d) {
    std::string out;
    for (const Arc& a : d.arcs()) {
        if (!out.empty()) out += ',';
        out += std::to_string(a.tail) + ">" + std::to_string(a.head);
    }
    return out.empty() ? "-" : out;
}

json set_to_json(const VertexSet& s) { return s.members(); }

VertexSet set_from_json(const json& j, std::size_t universe) {
    const auto members = j.get<std::vector<Vertex>>();
    return VertexSet::from_members(universe, members);
}

json rational_to_json(const std::optional<Rational>& q) {
    return q ? json(to_string(*q)) : json(nullptr);
}

std::optional<Rational> rational_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return parse_rational(j.get<std::string>());
}

template <class Fn>
auto guarded(std::string_view what, Fn&& fn) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse, std::string(what) + ": " + e.what());
    }
}

// --- SolveResult -----------------------------------------------------------

json solve_to_json(const SolveResult& r, std::size_t universe) {
    json j;
    j["kind"] = r.kind.name();
    j["status"] = to_string(r.status);
    j["n"] = universe;
    j["value"] = r.value ? json(*r.value) : json(nullptr);
    j["witness"] = r.witness ? set_to_json(*r.witness) : json(nullptr);
    j["subsets_examined"] = r.subsets_examined;
    j["elapsed_ns"] = static_cast<std::int64_t>(r.elapsed.count());
    return j;
}

SolveStatus parse_solve_status(const std::string& s) {
    for (SolveStatus st : {SolveStatus::optimal, SolveStatus::infeasible, SolveStatus::budget_exceeded}) {
        if (to_string(st) == s) return st;
    }
    throw Error(ErrorCode::parse, "unknown solve status '" + s + "'");
}

SolveResult solve_from_json(const json& j) {
    SolveResult r;
    r.kind = ParameterKind::parse(j.at("kind").get<std::string>());
    r.status = parse_solve_status(j.at("status").get<std::string>());
    const std::size_t n = j.at("n").get<std::size_t>();
    if (!j.at("value").is_null()) r.value = j.at("value").get<std::size_t>();
    if (!j.at("witness").is_null()) r.witness = set_from_json(j.at("witness"), n);
    r.subsets_examined = j.at("subsets_examined").get<std::uint64_t>();
    r.elapsed = std::chrono::nanoseconds(j.at("elapsed_ns").get<std::int64_t>());
    return r;
}

std::string solve_line(const SolveResult& r) {
    std::ostringstream os;
    os << "kind=" << r.kind.name() << " status=" << to_string(r.status)
       << " value=" << (r.value ? std::to_string(*r.value) : "-")
       << " witness=" << (r.witness ? r.witness->to_string() : "-")
       << " subsets_examined=" << r.subsets_examined << " elapsed_ns=" << r.elapsed.count();
    return os.str();
}

std::size_t universe_of(const SolveResult& r) { return r.witness ? r.witness->universe_size() : 0; }

// --- BoundReport -----------------------------------------------------------

json record_to_json(const BoundRecord& r) {
    json j;
    j["theorem_id"] = r.theorem_id;
    j["applicable"] = r.applicable;
    j["reason"] = r.reason;
    j["relation"] = to_string(r.relation);
    j["lhs"] = rational_to_json(r.lhs);
    j["rhs"] = rational_to_json(r.rhs);
    j["status"] = r.status ? json(to_string(*r.status)) : json(nullptr);
    j["characterization_kind"] = r.characterization_kind;
    j["characterization"] = r.characterization ? json(*r.characterization) : json(nullptr);
    j["values"] = r.values;
    json w = json::object();
    // Gadget witnesses live on a larger vertex set, so the universe is kept.
    for (const auto& [label, set] : r.witnesses) {
        w[label] = {{"universe", set.universe_size()}, {"members", set_to_json(set)}};
    }
    j["witnesses"] = w;
    j["note"] = r.note;
    j["proven"] = r.proven;
    return j;
}

BoundRecord record_from_json(const json& j) {
    BoundRecord r;
    r.theorem_id = j.at("theorem_id").get<std::string>();
    r.applicable = j.at("applicable").get<bool>();
    r.reason = j.at("reason").get<std::string>();
    r.relation = parse_relation(j.at("relation").get<std::string>());
    r.lhs = rational_from_json(j.at("lhs"));
    r.rhs = rational_from_json(j.at("rhs"));
    if (!j.at("status").is_null()) r.status = parse_bound_status(j.at("status").get<std::string>());
    r.characterization_kind = j.at("characterization_kind").get<std::string>();
    if (!j.at("characterization").is_null()) r.characterization = j.at("characterization").get<bool>();
    r.values = j.at("values").get<std::map<std::string, std::int64_t>>();
    for (const auto& [label, set] : j.at("witnesses").items()) {
        r.witnesses[label] = set_from_json(set.at("members"), set.at("universe").get<std::size_t>());
    }
    r.note = j.at("note").get<std::string>();
    r.proven = j.at("proven").get<bool>();
    return r;
}

std::string record_line(const BoundRecord& r) {
    std::ostringstream os;
    os << "theorem_id=" << r.theorem_id << " applicable=" << (r.applicable ? "true" : "false")
       << " relation=" << to_string(r.relation) << " lhs=" << (r.lhs ? to_string(*r.lhs) : "-")
       << " rhs=" << (r.rhs ? to_string(*r.rhs) : "-") << " status=" << (r.status ? to_string(*r.status) : "-");
    if (r.characterization) {
        os << " characterization_kind=" << quote_if_needed(r.characterization_kind)
           << " characterization=" << (*r.characterization ? "true" : "false");
    }
    std::string values;
    for (const auto& [label, v] : r.values) values += (values.empty() ? "" : ",") + label + ":" + std::to_string(v);
    std::string witnesses;
    for (const auto& [label, s] : r.witnesses) witnesses += (witnesses.empty() ? "" : ";") + label + ":" + s.to_string();
    os << " values=" << (values.empty() ? "-" : values) << " witnesses=" << (witnesses.empty() ? "-" : witnesses)
       << " proven=" << (r.proven ? "true" : "false") << " reason=" << quote_if_needed(r.reason);
    if (!r.note.empty()) os << " note=" << quote_if_needed(r.note);
    return os.str();
}

// --- SearchReport ----------------------------------------------------------

/// Adds "n" and "arcs" ([[tail, head], ...]) to an object.
void put_digraph(json& j, const Digraph& d) {
    json arcs = json::array();
    for (const Arc& a : d.arcs()) arcs.push_back({a.tail, a.head});
    j["n"] = d.order();
    j["arcs"] = arcs;
}

Digraph digraph_from_json(const json& j) {
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) arcs.push_back({a.at(0).get<Vertex>(), a.at(1).get<Vertex>()});
    return Digraph::build(j.at("n").get<std::size_t>(), arcs);
}

} // namespace

std::string render(const SolveResult& result, ReportFormat format) {
    if (format == ReportFormat::json) return solve_to_json(result, universe_of(result)).dump(2) + "\n";
    return solve_line(result) + "\n";
}

std::string render(const SolveMap& results, ReportFormat format) {
    if (format == ReportFormat::json) {
        json arr = json::array();
        for (const auto& [kind, r] : results) arr.push_back(solve_to_json(r, universe_of(r)));
        return json{{"results", arr}}.dump(2) + "\n";
    }
    std::string out;
    for (const auto& [kind, r] : results) out += solve_line(r) + "\n";
    return out;
}

std::string render(const BoundReport& report, ReportFormat format) {
    if (format == ReportFormat::json) {
        json arr = json::array();
        for (const auto& r : report.records) arr.push_back(record_to_json(r));
        return json{{"n", report.n}, {"m", report.m}, {"records", arr}}.dump(2) + "\n";
    }
    std::string out = "n=" + std::to_string(report.n) + " m=" + std::to_string(report.m) + "\n";
    for (const auto& r : report.records) out += record_line(r) + "\n";
    return out;
}

std::string render(const SearchReport& report, ReportFormat format) {
    if (format == ReportFormat::json) {
        json j;
        j["problem"] = report.problem;
        j["generator"] = report.generator;
        j["trials"] = report.trials;
        j["evaluated"] = report.evaluated;
        j["skipped_filter"] = report.skipped_filter;
        j["skipped_budget"] = report.skipped_budget;
        j["equality_count"] = report.equality_count;
        json violations = json::array();
        for (const auto& f : report.violations) {
            json v = {{"index", f.index},
                      {"seed", f.seed},
                      {"theorem_id", f.theorem_id},
                      {"proven", f.proven},
                      {"lhs", rational_to_json(f.lhs)},
                      {"rhs", rational_to_json(f.rhs)}};
            put_digraph(v, f.digraph);
            violations.push_back(v);
        }
        j["violations"] = violations;
        json tallies = json::array();
        for (const auto& [id, t] : report.tallies) {
            tallies.push_back({{"theorem_id", id},
                           {"holds", t.holds},
                           {"equality", t.equality},
                           {"violated", t.violated},
                           {"indeterminate", t.indeterminate},
                           {"not_applicable", t.not_applicable}});
        }
        j["tallies"] = tallies;
        json corpus = json::array();
        for (const auto& c : report.corpus) {
            json e = {{"index", c.index}, {"e", c.e}, {"p", c.p}, {"value", c.value}};
            put_digraph(e, c.digraph);
            corpus.push_back(e);
        }
        j["corpus"] = corpus;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "problem=" << report.problem << " generator=" << report.generator << " trials=" << report.trials
       << " evaluated=" << report.evaluated << " skipped_filter=" << report.skipped_filter
       << " skipped_budget=" << report.skipped_budget << " equality_count=" << report.equality_count
       << " violations=" << report.violations.size() << "\n";
    for (const auto& [id, t] : report.tallies) {
        os << "tally theorem_id=" << id << " holds=" << t.holds << " equality=" << t.equality
           << " violated=" << t.violated << " indeterminate=" << t.indeterminate
           << " not_applicable=" << t.not_applicable << "\n";
    }
    for (const auto& f : report.violations) {
        os << "violation index=" << f.index << " seed=" << f.seed << " theorem_id=" << f.theorem_id
           << " proven=" << (f.proven ? "true" : "false") << " lhs=" << (f.lhs ? to_string(*f.lhs) : "-")
           << " rhs=" << (f.rhs ? to_string(*f.rhs) : "-") << " n=" << f.digraph.order()
           << " arcs=" << arc_list(f.digraph) << "\n";
    }
    for (const auto& c : report.corpus) {
        os << "corpus index=" << c.index << " n=" << c.n << " e=" << c.e << " p=" << c.p << " value=" << c.value
           << " arcs=" << arc_list(c.digraph) << "\n";
    }
    return os.str();
}

SolveResult solve_result_from_json(std::string_view text) {
    return guarded("solve result", [&] { return solve_from_json(json::parse(text)); });
}

SolveMap solve_map_from_json(std::string_view text) {
    return guarded("solve map", [&] {
        SolveMap out;
        const json j = json::parse(text);
        for (const auto& item : j.at("results")) {
            SolveResult r = solve_from_json(item);
            out.emplace(r.kind, std::move(r));
        }
        return out;
    });
}

BoundReport bound_report_from_json(std::string_view text) {
    return guarded("bound report", [&] {
        const json j = json::parse(text);
        BoundReport report;
        report.n = j.at("n").get<std::size_t>();
        report.m = j.at("m").get<std::size_t>();
        for (const auto& item : j.at("records")) report.records.push_back(record_from_json(item));
        return report;
    });
}

SearchReport search_report_from_json(std::string_view text) {
    return guarded("search report", [&] {
        const json j = json::parse(text);
        SearchReport r;
        r.problem = j.at("problem").get<std::string>();
        r.generator = j.at("generator").get<std::string>();
        r.trials = j.at("trials").get<std::uint64_t>();
        r.evaluated = j.at("evaluated").get<std::uint64_t>();
        r.skipped_filter = j.at("skipped_filter").get<std::uint64_t>();
        r.skipped_budget = j.at("skipped_budget").get<std::uint64_t>();
        r.equality_count = j.at("equality_count").get<std::uint64_t>();
        for (const auto& v : j.at("violations")) {
            r.violations.push_back({v.at("index").get<std::uint64_t>(), v.at("seed").get<std::uint64_t>(),
                                    v.at("theorem_id").get<std::string>(), v.at("proven").get<bool>(),
                                    rational_from_json(v.at("lhs")), rational_from_json(v.at("rhs")),
                                    digraph_from_json(v)});
        }
        for (const auto& t : j.at("tallies")) {
            r.tallies[t.at("theorem_id").get<std::string>()] = {t.at("holds").get<std::uint64_t>(), t.at("equality").get<std::uint64_t>(),
                             t.at("violated").get<std::uint64_t>(), t.at("indeterminate").get<std::uint64_t>(),
                             t.at("not_applicable").get<std::uint64_t>()};
        }
        for (const auto& c : j.at("corpus")) {
            r.corpus.push_back({c.at("index").get<std::uint64_t>(), c.at("n").get<std::size_t>(),
                                c.at("e").get<std::size_t>(), c.at("p").get<std::size_t>(),
                                c.at("value").get<std::size_t>(), digraph_from_json(c)});
        }
        return r;
    });
}

std::string render_sidecar(const FamilyInstance& inst) {
    json params = json::object();
    const FamilyParams& p = inst.params;
    if (p.r) params["r"] = *p.r;
    if (p.r_prime) params["r_prime"] = *p.r_prime;
    if (p.q) params["q"] = *p.q;
    if (p.p) params["p"] = *p.p;
    if (p.n_prime) params["n_prime"] = *p.n_prime;
    if (!p.star_orders.empty()) params["star_orders"] = p.star_orders;
    if (p.seed) params["seed"] = *p.seed;

    json j;
    j["family"] = to_string(inst.family);
    j["n"] = inst.digraph.order();
    j["m"] = inst.digraph.arc_count();
    j["params"] = params;
    j["seed_vertices"] = set_to_json(inst.seed_vertices);
    j["added_vertices"] = set_to_json(inst.added_vertices);
    j["extremal_set"] = set_to_json(inst.extremal_set);
    j["certified_parameter"] = certified_kind(inst.family).name();
    j["certified_value"] = inst.extremal_set.size();
    return j.dump(2) + "\n";
}

} // namespace digdom
