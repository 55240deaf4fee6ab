#ifndef DIGDOM_ANALYSIS_HPP
#define DIGDOM_ANALYSIS_HPP

#include "digdom/digraph.hpp"
#include "digdom/generators.hpp"
#include "digdom/solvers.hpp"
#include "digdom/vertex_set.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace digdom {

using Rational = boost::rational<std::int64_t>;

/// "3" or "16/3".
std::string to_string(const Rational& q);
/// Inverse of to_string(Rational). Throws Error(parse).
Rational parse_rational(std::string_view text);

enum class Relation { less_equal, greater_equal, equal };
enum class BoundStatus { holds, equality, violated, indeterminate };

std::string to_string(Relation relation);      // "<=", ">=", "="
std::string to_string(BoundStatus status);     // holds, equality, violated, indeterminate
Relation parse_relation(std::string_view text);
BoundStatus parse_bound_status(std::string_view text);

/// One evaluated result on one digraph: "lhs relation rhs".
///
/// status is empty exactly when the hypotheses fail. When the result comes
/// with an equality characterization, `characterization` holds the
/// independently checked structural condition and a mismatch with the
/// equality outcome is reported as violated.
struct BoundRecord {
    std::string theorem_id;
    bool applicable = false;
    std::string reason;
    Relation relation = Relation::less_equal;
    std::optional<Rational> lhs;
    std::optional<Rational> rhs;
    std::optional<BoundStatus> status;
    std::string characterization_kind;
    std::optional<bool> characterization;
    std::map<std::string, std::int64_t> values;
    std::map<std::string, VertexSet> witnesses;
    std::string note;
    /// False only for open-problem records, whose violation is a finding
    /// rather than a bug.
    bool proven = true;

    bool violated() const { return status == BoundStatus::violated; }
    friend bool operator==(const BoundRecord&, const BoundRecord&) = default;
};

struct BoundReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<BoundRecord> records;

    const BoundRecord* find(std::string_view theorem_id) const;
    bool any_violated() const;
    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

struct AnalysisOptions {
    std::uint64_t budget = default_budget();
    SearchStrategy strategy = SearchStrategy::pruned;
    /// RedDD/RedLP solve gadgets of order 3n and 2n, which dominates the
    /// cost of a report on larger inputs.
    bool include_reductions = true;
};

/// T1i, T1ii, T2(k,r) for k,r in {1,2}, Thm123, ThmTheta, Duality, T3,
/// RhoEqGammaTree, NG1, NG1-Corollary, TNG2, TNG2-Product, RedDD, RedLP, in
/// that order. Records whose hypotheses fail are kept with applicable=false.
/// Violations are recorded, not thrown.
BoundReport bounds_report(const Digraph& d, const AnalysisOptions& options = {});

/// How end-vertices are read in the NG1 degree condition. arc_degree is the
/// definition deg+ + deg- = 1. single_neighbor also admits a vertex whose
/// only neighbor is joined to it by a 2-cycle. The readings agree on every
/// digraph without 2-cycles, trees included.
enum class EndVertexReading { arc_degree, single_neighbor };

/// Whether every vertex that is neither an end-vertex nor penultimate has
/// in-degree (use_out_degree: out-degree) at most one.
bool ng1_degree_condition(const Digraph& d, bool use_out_degree = false,
                          EndVertexReading reading = EndVertexReading::arc_degree);

struct NordhausGaddumResult {
    BoundRecord sum;      // TNG2
    BoundRecord product;  // TNG2-Product
};

/// L^t_2(D) + L^t_2(D^-1) against 16n/9 and the product against 64n^2/81.
/// For n in {1,2} the sum record asserts sum = 2n and the product record is
/// not applicable. Throws Error(precondition) if D is not connected.
NordhausGaddumResult nordhaus_gaddum_check(const Digraph& d, const AnalysisOptions& options = {});

/// L^t_2(T) <= gamma^t_x2(T) on a directed tree of order >= 2; values hold
/// both parameters and the gap. Throws Error(precondition) for other inputs
/// and ProvenBoundViolation if the inequality fails.
BoundRecord duality_check(const Digraph& tree, const AnalysisOptions& options = {});

struct ReductionIdentityResult {
    BoundRecord domination;  // RedDD
    BoundRecord packing;     // RedLP
};

/// gamma_x2(D') = gamma^t_x2(D') = 2n + gamma(D) and
/// L_2(D'') = L^t_2(D'') = n + rho(D).
ReductionIdentityResult reduction_identity_check(const Digraph& d, const AnalysisOptions& options = {});

/// rho(T) = gamma(T) on a directed tree. Throws Error(precondition) for
/// other inputs.
BoundRecord tree_rho_gamma_check(const Digraph& tree, const AnalysisOptions& options = {});

// ---------------------------------------------------------------------------
// Counterexample search
// ---------------------------------------------------------------------------

/// "P1" (L^t_2 <= gamma^t_x2 beyond trees), "P2" (equality census on trees),
/// a theorem id from bounds_report, or "all".
struct SearchProblem {
    std::string name;
    bool is_p1() const { return name == "P1"; }
    bool is_p2() const { return name == "P2"; }
};

struct SearchFinding {
    std::uint64_t index = 0;
    std::uint64_t seed = 0;
    std::string theorem_id;
    bool proven = true;
    std::optional<Rational> lhs;
    std::optional<Rational> rhs;
    Digraph digraph;
    friend bool operator==(const SearchFinding&, const SearchFinding&) = default;
};

struct CorpusEntry {
    std::uint64_t index = 0;
    std::size_t n = 0;
    std::size_t e = 0;
    std::size_t p = 0;
    std::size_t value = 0;  // L^t_2 = gamma^t_x2
    Digraph digraph;
    friend bool operator==(const CorpusEntry&, const CorpusEntry&) = default;
};

struct TheoremTally {
    std::uint64_t holds = 0;
    std::uint64_t equality = 0;
    std::uint64_t violated = 0;
    std::uint64_t indeterminate = 0;
    std::uint64_t not_applicable = 0;
    friend bool operator==(const TheoremTally&, const TheoremTally&) = default;
};

struct SearchReport {
    std::string problem;
    std::string generator;
    std::uint64_t trials = 0;           // instances drawn
    std::uint64_t evaluated = 0;        // instances fully decided
    std::uint64_t skipped_filter = 0;   // excluded by the problem's filter
    std::uint64_t skipped_budget = 0;   // some needed solve ran out of budget
    std::uint64_t equality_count = 0;   // P1/P2: L^t_2 = gamma^t_x2
    std::vector<SearchFinding> violations;  // sorted by index
    std::map<std::string, TheoremTally> tallies;
    std::vector<CorpusEntry> corpus;        // P2 only

    bool proven_violation() const;
    bool open_finding() const;
    friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

/// Runs `trials` instances of `gen` (0: the generator's own count). Instance
/// i of a random generator uses seed gen.seed + i. Budget overruns are
/// counted, never fatal.
SearchReport counterexample_search(const SearchProblem& problem, const GenSpec& gen, std::uint64_t trials,
                                   const AnalysisOptions& options = {});

} // namespace digdom

#endif // DIGDOM_ANALYSIS_HPP
