#ifndef DIGDOM_SOLVERS_HPP
#define DIGDOM_SOLVERS_HPP

#include "digdom/digraph.hpp"
#include "digdom/parameter.hpp"
#include "digdom/vertex_set.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace digdom {

// ---------------------------------------------------------------------------
// Validators
// ---------------------------------------------------------------------------

enum class ViolationClause {
    too_few_in_neighbors,             // outside vertex, |N-(v) n X| < k
    member_without_in_neighbor,       // double domination, member with no in-neighbor in X
    isolated_member,                  // total 2-domination, member isolated in D<X>
    closed_out_neighborhood_overflow, // |N+[v] n X| > k
    member_adjacency_overflow,        // total 2-limited packing, member adjacent with >= 2 members
    out_neighbor_overflow,            // total 2-limited packing, non-member adjacent to >= 3 members
};

struct Violation {
    Vertex vertex;
    ViolationClause clause;
    std::size_t observed;  // the count that broke the clause
    std::size_t limit;     // the bound it was compared against

    /// Short human-readable clause, e.g. "needs >=2 in-neighbors in set (has 1)".
    std::string reason() const;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Empty when the set is valid; otherwise the smallest violating vertex.
using ValidationResult = std::optional<Violation>;

/// Exact membership predicate for every parameter kind. Throws
/// Error(invalid_argument) if X has a member outside V(D).
ValidationResult validate(const Digraph& d, const VertexSet& x, ParameterKind kind);

inline bool is_valid(const Digraph& d, const VertexSet& x, ParameterKind kind) {
    return !validate(d, x, kind).has_value();
}

// ---------------------------------------------------------------------------
// Exact solver
// ---------------------------------------------------------------------------

enum class SolveStatus { optimal, infeasible, budget_exceeded };

std::string to_string(SolveStatus status);

/// Plain tests every combination; pruned skips subtrees that cannot hold a
/// valid set. Both visit candidates in the same order, so they return the
/// same value and the same witness.
enum class SearchStrategy { plain, pruned };

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// kDefaultBudget, unless DIGDOM_BUDGET holds a positive integer.
std::uint64_t default_budget();

/// Largest order the exact solver accepts. Larger digraphs report
/// budget_exceeded, since their subset space exceeds any 64-bit budget.
inline constexpr std::size_t kMaxSolverOrder = 64;

struct SolveResult {
    ParameterKind kind = ParameterKind::domination();
    SolveStatus status = SolveStatus::budget_exceeded;
    std::optional<std::size_t> value;   // present iff optimal
    std::optional<VertexSet> witness;   // present iff optimal
    std::uint64_t subsets_examined = 0;
    std::chrono::nanoseconds elapsed{0};

    bool optimal() const noexcept { return status == SolveStatus::optimal; }
    friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

/// Exact optimum by cardinality-ordered enumeration.
///
/// Minimization kinds scan cardinalities upwards, maximization kinds
/// downwards; within a cardinality, sets are visited in lexicographic order
/// of their sorted member lists. The first valid set is returned, which makes
/// the witness the lexicographically least optimum.
///
/// Double domination on a digraph with a source vertex and total
/// 2-domination on a digraph with an isolated vertex are reported infeasible
/// without searching. Throws Error(unsupported) for k > 2.
SolveResult solve_exact(const Digraph& d, ParameterKind kind,
                        std::uint64_t budget = default_budget(),
                        SearchStrategy strategy = SearchStrategy::plain);

/// gamma, gamma_2, gamma_x2, gamma^t_x2, rho, L_1, L_2, L^t_2.
std::vector<ParameterKind> solve_all_kinds();

using SolveMap = std::map<ParameterKind, SolveResult>;

/// Every kind in solve_all_kinds(); a budget overrun in one kind does not
/// stop the others.
SolveMap solve_all(const Digraph& d, std::uint64_t budget = default_budget(),
                   SearchStrategy strategy = SearchStrategy::plain);

} // namespace digdom

#endif // DIGDOM_SOLVERS_HPP
