#include "digdom/analysis.hpp"

#include "digdom/error.hpp"
#include "digdom/families.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <memory>

namespace digdom {

std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(std::string_view text) {
    auto number = [&](std::string_view part) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
            throw Error(ErrorCode::parse, "bad rational '" + std::string(text) + "'");
        }
        return v;
    };
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(number(text));
    const std::int64_t den = number(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(number(text.substr(0, slash)), den);
}

std::string to_string(Relation relation) {
    switch (relation) {
    case Relation::less_equal: return "<=";
    case Relation::greater_equal: return ">=";
    case Relation::equal: return "=";
    }
    return "?";
}

std::string to_string(BoundStatus status) {
    switch (status) {
    case BoundStatus::holds: return "holds";
    case BoundStatus::equality: return "equality";
    case BoundStatus::violated: return "violated";
    case BoundStatus::indeterminate: return "indeterminate";
    }
    return "?";
}

Relation parse_relation(std::string_view text) {
    for (Relation r : {Relation::less_equal, Relation::greater_equal, Relation::equal}) {
        if (to_string(r) == text) return r;
    }
    throw Error(ErrorCode::parse, "unknown relation '" + std::string(text) + "'");
}

BoundStatus parse_bound_status(std::string_view text) {
    for (BoundStatus s : {BoundStatus::holds, BoundStatus::equality, BoundStatus::violated,
                          BoundStatus::indeterminate}) {
        if (to_string(s) == text) return s;
    }
    throw Error(ErrorCode::parse, "unknown status '" + std::string(text) + "'");
}

const BoundRecord* BoundReport::find(std::string_view theorem_id) const {
    for (const auto& r : records) {
        if (r.theorem_id == theorem_id) return &r;
    }
    return nullptr;
}

bool BoundReport::any_violated() const {
    return std::any_of(records.begin(), records.end(), [](const BoundRecord& r) { return r.violated(); });
}

bool SearchReport::proven_violation() const {
    return std::any_of(violations.begin(), violations.end(), [](const SearchFinding& f) { return f.proven; });
}

bool SearchReport::open_finding() const {
    return std::any_of(violations.begin(), violations.end(), [](const SearchFinding& f) { return !f.proven; });
}

bool ng1_degree_condition(const Digraph& d, bool use_out_degree, EndVertexReading reading) {
    const std::size_t n = d.order();
    std::vector<bool> end(n, false);
    for (Vertex v = 0; v < n; ++v) {
        if (reading == EndVertexReading::arc_degree) {
            end[v] = d.in_degree(v) + d.out_degree(v) == 1;
        } else {
            std::size_t neighbors = 0;
            for (Vertex u = 0; u < n; ++u) neighbors += u != v && d.adjacent(u, v) ? 1 : 0;
            end[v] = neighbors == 1;
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (end[v]) continue;
        bool penultimate = false;
        for (Vertex u = 0; u < n && !penultimate; ++u) penultimate = end[u] && u != v && d.adjacent(u, v);
        if (penultimate) continue;
        const std::size_t deg = use_out_degree ? d.out_degree(v) : d.in_degree(v);
        if (deg > 1) return false;
    }
    return true;
}

namespace {

using Int = std::int64_t;

Int as_int(std::size_t v) { return static_cast<Int>(v); }

/// Lazily solved parameters of D and of its converse.
class Evaluator {
public:
    Evaluator(const Digraph& d, const AnalysisOptions& options)
        : d_(d), options_(options), c_(classify(d)) {}

    const Digraph& digraph() const { return d_; }
    const VertexClassification& classification() const { return c_; }
    const AnalysisOptions& options() const { return options_; }

    const SolveResult& on(ParameterKind kind) { return lookup(d_, cache_, kind); }

    const SolveResult& on_converse(ParameterKind kind) {
        if (!converse_) converse_ = std::make_unique<Digraph>(converse(d_));
        return lookup(*converse_, converse_cache_, kind);
    }

private:
    const SolveResult& lookup(const Digraph& g, std::map<ParameterKind, SolveResult>& cache, ParameterKind kind) {
        auto it = cache.find(kind);
        if (it == cache.end()) {
            it = cache.emplace(kind, solve_exact(g, kind, options_.budget, options_.strategy)).first;
        }
        return it->second;
    }

    const Digraph& d_;
    AnalysisOptions options_;
    VertexClassification c_;
    std::unique_ptr<Digraph> converse_;
    std::map<ParameterKind, SolveResult> cache_;
    std::map<ParameterKind, SolveResult> converse_cache_;
};

BoundRecord make_record(std::string id, Relation relation, bool applicable, std::string reason) {
    BoundRecord rec;
    rec.theorem_id = std::move(id);
    rec.relation = relation;
    rec.applicable = applicable;
    rec.reason = std::move(reason);
    return rec;
}

void add_note(BoundRecord& rec, const std::string& text) {
    if (!rec.note.empty()) rec.note += "; ";
    rec.note += text;
}

/// Copies optimal values and witnesses into the record. Returns false (and
/// marks the record indeterminate) if any result is not optimal.
bool require(BoundRecord& rec, std::initializer_list<std::pair<const char*, const SolveResult*>> needs) {
    bool ok = true;
    for (const auto& [label, result] : needs) {
        if (result->optimal()) {
            rec.values[label] = as_int(*result->value);
            rec.witnesses[label] = *result->witness;
        } else {
            ok = false;
            add_note(rec, std::string(label) + " " + to_string(result->status));
        }
    }
    if (!ok) rec.status = BoundStatus::indeterminate;
    return ok;
}

void settle(BoundRecord& rec, Rational lhs, Rational rhs) {
    rec.lhs = lhs;
    rec.rhs = rhs;
    switch (rec.relation) {
    case Relation::less_equal:
        rec.status = lhs < rhs ? BoundStatus::holds : lhs == rhs ? BoundStatus::equality : BoundStatus::violated;
        break;
    case Relation::greater_equal:
        rec.status = lhs > rhs ? BoundStatus::holds : lhs == rhs ? BoundStatus::equality : BoundStatus::violated;
        break;
    case Relation::equal:
        rec.status = lhs == rhs ? BoundStatus::equality : BoundStatus::violated;
        break;
    }
}

/// Cross-checks an equality characterization against the computed outcome.
void characterize(BoundRecord& rec, const std::string& kind, bool condition) {
    rec.characterization_kind = kind;
    rec.characterization = condition;
    if (rec.status == BoundStatus::violated || rec.status == BoundStatus::indeterminate) return;
    const bool equal = rec.status == BoundStatus::equality;
    if (equal != condition) {
        rec.status = BoundStatus::violated;
        add_note(rec, std::string("equality is ") + (equal ? "attained" : "not attained") + " but " + kind +
                          " is " + (condition ? "satisfied" : "not satisfied"));
    }
}

/// A characterization mismatch caused only by 2-cycle pendant vertices: the
/// condition with single-neighbor end-vertices agrees with the equality test.
void note_single_neighbor_reading(BoundRecord& rec, bool condition) {
    if (rec.status != BoundStatus::violated || !rec.lhs || !rec.rhs || rec.characterization == condition) return;
    if ((*rec.lhs == *rec.rhs) == condition) {
        add_note(rec, "consistent when end-vertices are read as single-neighbor vertices");
    }
}

std::string degree_reason(const char* name, std::size_t value, std::size_t needed) {
    return std::string(name) + " >= " + std::to_string(needed) + " (" + name + " = " + std::to_string(value) + ")";
}

const ParameterKind kGamma = ParameterKind::domination();
const ParameterKind kRho = ParameterKind::packing();
const ParameterKind kL2 = ParameterKind::two_limited_packing();
const ParameterKind kGammaX2 = ParameterKind::double_domination();
const ParameterKind kGammaT2 = ParameterKind::total_2_domination();
const ParameterKind kL2t = ParameterKind::total_2_limited_packing();

BoundRecord t1i(Evaluator& ev) {
    const auto& c = ev.classification();
    BoundRecord rec = make_record("T1i", Relation::greater_equal, c.Delta_plus >= 1,
                                  degree_reason("Delta+", c.Delta_plus, 1));
    if (!rec.applicable) return rec;
    const SolveResult& l2 = ev.on(kL2);
    const SolveResult& rho = ev.on(kRho);
    if (!require(rec, {{"L2", &l2}, {"rho", &rho}})) return rec;
    settle(rec, as_int(*l2.value), as_int(*rho.value) + 1);
    return rec;
}

BoundRecord t1ii(Evaluator& ev) {
    const auto& c = ev.classification();
    BoundRecord rec = make_record("T1ii", Relation::greater_equal, ev.digraph().order() > 0 && c.delta_minus >= 1,
                                  degree_reason("delta-", c.delta_minus, 1));
    if (!rec.applicable) return rec;
    const SolveResult& x2 = ev.on(kGammaX2);
    const SolveResult& g = ev.on(kGamma);
    if (!require(rec, {{"gamma_x2", &x2}, {"gamma", &g}})) return rec;
    settle(rec, as_int(*x2.value), as_int(*g.value) + 1);
    return rec;
}

/// L_k <= (k/r) gamma_xr, with gamma_x1 = gamma.
BoundRecord t2(Evaluator& ev, unsigned k, unsigned r) {
    const auto& c = ev.classification();
    const std::string id = "T2(" + std::to_string(k) + "," + std::to_string(r) + ")";
    const bool applicable = ev.digraph().order() > 0 && c.delta_minus + 1 >= r;
    BoundRecord rec = make_record(id, Relation::less_equal, applicable,
                                  r == 1 ? "no hypothesis" : degree_reason("delta-", c.delta_minus, r - 1));
    if (!rec.applicable) return rec;
    const SolveResult& packing = ev.on(k == 1 ? kRho : kL2);
    const SolveResult& domination = ev.on(r == 1 ? kGamma : kGammaX2);
    if (!require(rec, {{k == 1 ? "rho" : "L2", &packing}, {r == 1 ? "gamma" : "gamma_x2", &domination}})) {
        return rec;
    }
    settle(rec, as_int(*packing.value), Rational(as_int(k) * as_int(*domination.value), as_int(r)));
    return rec;
}

BoundRecord thm123(Evaluator& ev) {
    const auto& c = ev.classification();
    const std::size_t n = ev.digraph().order();
    BoundRecord rec = make_record("Thm123", Relation::less_equal, n > 0 && c.delta_minus >= 1,
                                  degree_reason("delta-", c.delta_minus, 1));
    if (!rec.applicable) return rec;
    const SolveResult& l2 = ev.on(kL2);
    if (!require(rec, {{"L2", &l2}})) return rec;
    settle(rec, as_int(*l2.value), Rational(2 * as_int(n), as_int(c.delta_minus) + 1));
    characterize(rec, "omega-structure", omega_certificate(ev.digraph(), *l2.witness));
    return rec;
}

BoundRecord thm_theta(Evaluator& ev) {
    const auto& c = ev.classification();
    const std::size_t n = ev.digraph().order();
    BoundRecord rec = make_record("ThmTheta", Relation::greater_equal, n > 0 && c.delta_minus >= 1,
                                  degree_reason("delta-", c.delta_minus, 1));
    if (!rec.applicable) return rec;
    const SolveResult& x2 = ev.on(kGammaX2);
    if (!require(rec, {{"gamma_x2", &x2}})) return rec;
    settle(rec, as_int(*x2.value), Rational(2 * as_int(n), as_int(c.Delta_plus) + 1));
    characterize(rec, "theta-structure", theta_certificate(ev.digraph(), *x2.witness));
    return rec;
}

std::string tree_reason(const VertexClassification& c, std::size_t n, std::size_t min_order) {
    std::string s = "directed tree";
    if (min_order > 1) s += " of order >= " + std::to_string(min_order);
    s += c.is_directed_tree ? " (n = " + std::to_string(n) + ")" : " (not a directed tree)";
    return s;
}

BoundRecord duality(Evaluator& ev) {
    const auto& c = ev.classification();
    const std::size_t n = ev.digraph().order();
    BoundRecord rec = make_record("Duality", Relation::less_equal, c.is_directed_tree && n >= 2, tree_reason(c, n, 2));
    if (!rec.applicable) return rec;
    const SolveResult& lt = ev.on(kL2t);
    const SolveResult& gt = ev.on(kGammaT2);
    if (!require(rec, {{"L2t", &lt}, {"gamma_t2", &gt}})) return rec;
    settle(rec, as_int(*lt.value), as_int(*gt.value));
    rec.values["gap"] = as_int(*gt.value) - as_int(*lt.value);
    return rec;
}

BoundRecord t3(Evaluator& ev) {
    const auto& c = ev.classification();
    const std::size_t n = ev.digraph().order();
    BoundRecord rec = make_record("T3", Relation::greater_equal, c.is_directed_tree && n >= 2, tree_reason(c, n, 2));
    if (!rec.applicable) return rec;
    rec.values["e"] = as_int(c.e);
    rec.values["p"] = as_int(c.p);
    const SolveResult& gt = ev.on(kGammaT2);
    if (!require(rec, {{"gamma_t2", &gt}})) return rec;
    settle(rec, as_int(*gt.value), Rational(2 * as_int(n) + as_int(c.e) - as_int(c.p) + 2, 3));
    return rec;
}

BoundRecord rho_eq_gamma_tree(Evaluator& ev) {
    const auto& c = ev.classification();
    const std::size_t n = ev.digraph().order();
    BoundRecord rec = make_record("RhoEqGammaTree", Relation::equal, c.is_directed_tree, tree_reason(c, n, 1));
    if (!rec.applicable) return rec;
    const SolveResult& rho = ev.on(kRho);
    const SolveResult& g = ev.on(kGamma);
    if (!require(rec, {{"rho", &rho}, {"gamma", &g}})) return rec;
    settle(rec, as_int(*rho.value), as_int(*g.value));
    return rec;
}

std::string connected_reason(const VertexClassification& c, std::size_t n, std::size_t min_order) {
    return "connected, n >= " + std::to_string(min_order) + " (" + (c.is_connected ? "connected" : "disconnected") +
           ", n = " + std::to_string(n) + ")";
}

BoundRecord ng1(Evaluator& ev) {
    const auto& c = ev.classification();
    const std::size_t n = ev.digraph().order();
    BoundRecord rec = make_record("NG1", Relation::less_equal, c.is_connected && n >= 2, connected_reason(c, n, 2));
    if (!rec.applicable) return rec;
    const SolveResult& gt = ev.on(kGammaT2);
    if (!require(rec, {{"gamma_t2", &gt}})) return rec;
    settle(rec, as_int(*gt.value), as_int(n));
    characterize(rec, "in-degree condition", ng1_degree_condition(ev.digraph(), false));
    note_single_neighbor_reading(rec, ng1_degree_condition(ev.digraph(), false, EndVertexReading::single_neighbor));
    return rec;
}

BoundRecord ng1_corollary(Evaluator& ev) {
    const auto& c = ev.classification();
    const std::size_t n = ev.digraph().order();
    BoundRecord rec =
        make_record("NG1-Corollary", Relation::less_equal, c.is_connected && n >= 2, connected_reason(c, n, 2));
    if (!rec.applicable) return rec;
    const SolveResult& gt = ev.on(kGammaT2);
    const SolveResult& gt_inv = ev.on_converse(kGammaT2);
    if (!require(rec, {{"gamma_t2", &gt}, {"gamma_t2_converse", &gt_inv}})) return rec;
    const Int sum = as_int(*gt.value) + as_int(*gt_inv.value);
    const Int product = as_int(*gt.value) * as_int(*gt_inv.value);
    rec.values["product"] = product;
    settle(rec, sum, 2 * as_int(n));
    // The product form reaches n^2 exactly when the sum reaches 2n, since
    // both factors are at most n.
    if ((product == as_int(n) * as_int(n)) != (sum == 2 * as_int(n))) {
        rec.status = BoundStatus::violated;
        add_note(rec, "sum and product equality disagree");
    }
    characterize(rec, "in- and out-degree condition",
                 ng1_degree_condition(ev.digraph(), false) && ng1_degree_condition(ev.digraph(), true));
    note_single_neighbor_reading(
        rec, ng1_degree_condition(ev.digraph(), false, EndVertexReading::single_neighbor) &&
                 ng1_degree_condition(ev.digraph(), true, EndVertexReading::single_neighbor));
    return rec;
}

NordhausGaddumResult ng2(Evaluator& ev) {
    const auto& c = ev.classification();
    const std::size_t n = ev.digraph().order();
    const bool small = n == 1 || n == 2;
    NordhausGaddumResult out;
    out.sum = make_record("TNG2", small ? Relation::equal : Relation::less_equal, c.is_connected && n >= 1,
                          connected_reason(c, n, 1));
    out.product = make_record("TNG2-Product", Relation::less_equal, c.is_connected && n >= 3,
                              connected_reason(c, n, 3));
    if (!out.sum.applicable) return out;
    const SolveResult& lt = ev.on(kL2t);
    const SolveResult& lt_inv = ev.on_converse(kL2t);
    const bool ok_sum = require(out.sum, {{"L2t", &lt}, {"L2t_converse", &lt_inv}});
    if (out.product.applicable) require(out.product, {{"L2t", &lt}, {"L2t_converse", &lt_inv}});
    if (!ok_sum) return out;
    const Int sum = as_int(*lt.value) + as_int(*lt_inv.value);
    const Int product = as_int(*lt.value) * as_int(*lt_inv.value);
    const Int nn = as_int(n);
    settle(out.sum, sum, small ? Rational(2 * nn) : Rational(16 * nn, 9));
    if (out.product.applicable) settle(out.product, product, Rational(64 * nn * nn, 81));
    return out;
}

ReductionIdentityResult reductions(Evaluator& ev) {
    const std::size_t n = ev.digraph().order();
    const AnalysisOptions& o = ev.options();
    ReductionIdentityResult out;
    out.domination = make_record("RedDD", Relation::equal, n >= 1, "n >= 1 (n = " + std::to_string(n) + ")");
    out.packing = make_record("RedLP", Relation::equal, n >= 1, "n >= 1 (n = " + std::to_string(n) + ")");
    if (n == 0) return out;

    {
        BoundRecord& rec = out.domination;
        const SolveResult& g = ev.on(kGamma);
        const Digraph gadget = reduce_domination_gadget(ev.digraph());
        const SolveResult x2 = solve_exact(gadget, kGammaX2, o.budget, o.strategy);
        const SolveResult t2 = solve_exact(gadget, kGammaT2, o.budget, o.strategy);
        if (require(rec, {{"gamma", &g}, {"gamma_x2_gadget", &x2}, {"gamma_t2_gadget", &t2}})) {
            const Int rhs = 2 * as_int(n) + as_int(*g.value);
            settle(rec, as_int(*x2.value), rhs);
            if (as_int(*t2.value) != rhs) {
                rec.status = BoundStatus::violated;
                add_note(rec, "gamma_t2 of the gadget is " + std::to_string(*t2.value));
            }
        }
    }
    {
        BoundRecord& rec = out.packing;
        const SolveResult& rho = ev.on(kRho);
        const Digraph gadget = reduce_packing_gadget(ev.digraph());
        const SolveResult l2 = solve_exact(gadget, kL2, o.budget, o.strategy);
        const SolveResult lt = solve_exact(gadget, kL2t, o.budget, o.strategy);
        if (require(rec, {{"rho", &rho}, {"L2_gadget", &l2}, {"L2t_gadget", &lt}})) {
            const Int rhs = as_int(n) + as_int(*rho.value);
            settle(rec, as_int(*l2.value), rhs);
            if (as_int(*lt.value) != rhs) {
                rec.status = BoundStatus::violated;
                add_note(rec, "L2t of the gadget is " + std::to_string(*lt.value));
            }
        }
    }
    return out;
}

const std::vector<std::string>& known_theorem_ids() {
    static const std::vector<std::string> ids = {
        "T1i",  "T1ii", "T2(1,1)",        "T2(1,2)", "T2(2,1)",       "T2(2,2)", "Thm123",       "ThmTheta", "Duality",
        "T3",   "RhoEqGammaTree", "NG1",  "NG1-Corollary", "TNG2",    "TNG2-Product", "RedDD",    "RedLP"};
    return ids;
}

/// Whether `id` is selected by a problem name: "all", an exact id, or "T2"
/// for the four T2 variants.
bool selects(std::string_view problem, std::string_view id) {
    if (problem == "all") return true;
    if (problem == id) return true;
    return problem == "T2" && id.substr(0, 3) == "T2(";
}

BoundReport report_selected(const Digraph& d, const AnalysisOptions& options,
                            const std::function<bool(std::string_view)>& wanted) {
    Evaluator ev(d, options);
    BoundReport report;
    report.n = d.order();
    report.m = d.arc_count();
    auto add = [&](std::string_view id, auto&& make) {
        if (wanted(id)) report.records.push_back(make());
    };
    add("T1i", [&] { return t1i(ev); });
    add("T1ii", [&] { return t1ii(ev); });
    for (unsigned k : {1u, 2u}) {
        for (unsigned r : {1u, 2u}) {
            add("T2(" + std::to_string(k) + "," + std::to_string(r) + ")", [&] { return t2(ev, k, r); });
        }
    }
    add("Thm123", [&] { return thm123(ev); });
    add("ThmTheta", [&] { return thm_theta(ev); });
    add("Duality", [&] { return duality(ev); });
    add("T3", [&] { return t3(ev); });
    add("RhoEqGammaTree", [&] { return rho_eq_gamma_tree(ev); });
    add("NG1", [&] { return ng1(ev); });
    add("NG1-Corollary", [&] { return ng1_corollary(ev); });
    if (wanted("TNG2") || wanted("TNG2-Product")) {
        NordhausGaddumResult ng = ng2(ev);
        if (wanted("TNG2")) report.records.push_back(std::move(ng.sum));
        if (wanted("TNG2-Product")) report.records.push_back(std::move(ng.product));
    }
    if (options.include_reductions && (wanted("RedDD") || wanted("RedLP"))) {
        ReductionIdentityResult red = reductions(ev);
        if (wanted("RedDD")) report.records.push_back(std::move(red.domination));
        if (wanted("RedLP")) report.records.push_back(std::move(red.packing));
    }
    return report;
}

} // namespace

BoundReport bounds_report(const Digraph& d, const AnalysisOptions& options) {
    return report_selected(d, options, [](std::string_view) { return true; });
}

NordhausGaddumResult nordhaus_gaddum_check(const Digraph& d, const AnalysisOptions& options) {
    if (!is_weakly_connected(d)) {
        throw Error(ErrorCode::precondition, "the Nordhaus-Gaddum check needs a connected digraph");
    }
    Evaluator ev(d, options);
    return ng2(ev);
}

BoundRecord duality_check(const Digraph& tree, const AnalysisOptions& options) {
    const VertexClassification c = classify(tree);
    if (!c.is_directed_tree || tree.order() < 2) {
        throw Error(ErrorCode::precondition, "the duality check needs a directed tree of order >= 2");
    }
    Evaluator ev(tree, options);
    BoundRecord rec = duality(ev);
    if (rec.violated()) {
        throw ProvenBoundViolation("L2t(T) = " + to_string(*rec.lhs) + " exceeds gamma_t2(T) = " +
                                   to_string(*rec.rhs) + " on a directed tree");
    }
    return rec;
}

ReductionIdentityResult reduction_identity_check(const Digraph& d, const AnalysisOptions& options) {
    Evaluator ev(d, options);
    return reductions(ev);
}

BoundRecord tree_rho_gamma_check(const Digraph& tree, const AnalysisOptions& options) {
    if (!classify(tree).is_directed_tree) {
        throw Error(ErrorCode::precondition, "the rho = gamma check needs a directed tree");
    }
    Evaluator ev(tree, options);
    return rho_eq_gamma_tree(ev);
}

SearchReport counterexample_search(const SearchProblem& problem, const GenSpec& gen, std::uint64_t trials,
                                   const AnalysisOptions& options) {
    const std::string& name = problem.name;
    if (!problem.is_p1() && !problem.is_p2() && name != "all" && name != "T2") {
        const auto& ids = known_theorem_ids();
        if (std::find(ids.begin(), ids.end(), name) == ids.end()) {
            throw Error(ErrorCode::invalid_argument, "unknown problem or theorem id '" + name + "'");
        }
    }
    gen.check();

    SearchReport report;
    report.problem = name;
    report.generator = gen.to_string();
    std::uint64_t count = instance_count(gen);
    if (trials > 0) {
        count = gen.kind == GenKind::enumerate_directed_trees ? std::min(trials, DirectedTreeEnumeration(gen.n).size())
                                                              : trials;
    }
    report.trials = count;

    for (std::uint64_t i = 0; i < count; ++i) {
        const Digraph d = generate(gen, i);
        const std::uint64_t seed = gen.seed + i;

        if (problem.is_p1() || problem.is_p2()) {
            const VertexClassification c = classify(d);
            const bool keep = problem.is_p1() ? !c.is_directed_tree && !has_isolated_vertex(d)
                                              : c.is_directed_tree && d.order() >= 2;
            if (!keep) {
                ++report.skipped_filter;
                continue;
            }
            const SolveResult lt = solve_exact(d, kL2t, options.budget, options.strategy);
            const SolveResult gt = solve_exact(d, kGammaT2, options.budget, options.strategy);
            TheoremTally& tally = report.tallies[name];
            if (!lt.optimal() || !gt.optimal()) {
                ++report.skipped_budget;
                ++tally.indeterminate;
                continue;
            }
            ++report.evaluated;
            if (*lt.value > *gt.value) {
                ++tally.violated;
                report.violations.push_back({i, seed, problem.is_p1() ? "P1" : "Duality", !problem.is_p1(),
                                             Rational(as_int(*lt.value)), Rational(as_int(*gt.value)), d});
            } else if (*lt.value == *gt.value) {
                ++tally.equality;
                ++report.equality_count;
                if (problem.is_p2()) report.corpus.push_back({i, d.order(), c.e, c.p, *lt.value, d});
            } else {
                ++tally.holds;
            }
            continue;
        }

        const BoundReport br = report_selected(d, options, [&](std::string_view id) { return selects(name, id); });
        bool undecided = false;
        for (const BoundRecord& rec : br.records) {
            TheoremTally& tally = report.tallies[rec.theorem_id];
            if (!rec.status) {
                ++tally.not_applicable;
                continue;
            }
            switch (*rec.status) {
            case BoundStatus::holds: ++tally.holds; break;
            case BoundStatus::equality: ++tally.equality; break;
            case BoundStatus::violated:
                ++tally.violated;
                report.violations.push_back({i, seed, rec.theorem_id, rec.proven, rec.lhs, rec.rhs, d});
                break;
            case BoundStatus::indeterminate:
                ++tally.indeterminate;
                undecided = true;
                break;
            }
        }
        if (undecided) {
            ++report.skipped_budget;
        } else {
            ++report.evaluated;
        }
    }
    return report;
}

} // namespace digdom
