#ifndef DIGDOM_FAMILIES_HPP
#define DIGDOM_FAMILIES_HPP

#include "digdom/digraph.hpp"
#include "digdom/parameter.hpp"
#include "digdom/solvers.hpp"
#include "digdom/vertex_set.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace digdom {

enum class Family { omega, theta, gamma_tree, r_gadget, reduction_dd, reduction_lp };

std::string to_string(Family family);
/// Accepts omega, theta, gamma-tree, r-gadget, reduction-dd, reduction-lp.
Family parse_family(std::string_view name);

/// The parameter whose optimum the family's extremal set attains.
ParameterKind certified_kind(Family family);

struct FamilyParams {
    std::optional<std::size_t> r;
    std::optional<std::size_t> r_prime;    // number of stars (gamma trees)
    std::optional<std::size_t> q;          // number of connector vertices (gamma trees)
    std::optional<std::size_t> p;          // deficiency slot count (omega/theta)
    std::optional<std::size_t> n_prime;    // order of the seed digraph
    std::vector<std::size_t> star_orders;  // gamma trees
    std::optional<std::uint64_t> seed;     // gamma trees
};

/// A constructed digraph together with the certificate the construction
/// provides. seed_vertices and added_vertices partition V.
struct FamilyInstance {
    Digraph digraph;
    Family family = Family::omega;
    VertexSet seed_vertices;
    VertexSet added_vertices;
    FamilyParams params;
    VertexSet extremal_set;
};

/// Cap on the automatically chosen r when none is given.
inline constexpr std::size_t kMaxAutoR = 64;

/// Functional seed D' on 0..n'-1; new vertices u_0.. follow at n'...
///
/// Every seed vertex is topped up to in-degree r by arcs from U, each u
/// receiving exactly two such arcs to distinct seeds. Deficiency slots are
/// listed in vertex order and paired consecutively; a pair hitting the same
/// vertex swaps its second slot with the nearest later slot that differs.
/// Each u then gets in-arcs from the first r eligible sources (seeds in index
/// order, then the other u's), so every vertex of U has in-degree exactly r.
///
/// Without r, the smallest r >= max(Delta-(D'), 1) with (r-1)n' even is used.
FamilyInstance construct_omega(const Digraph& functional, std::optional<std::size_t> r = std::nullopt);

/// Mirror of construct_omega for a contrafunctional seed: arcs (v, u),
/// out-degree r on every seed, and out-arcs from each u to the first r
/// eligible targets. Equals converse(construct_omega(converse(D'))).
FamilyInstance construct_theta(const Digraph& contrafunctional, std::optional<std::size_t> r = std::nullopt);

/// Directed tree built from r directed P2 copies and stars of the given
/// orders, joined by q = r + r' - 1 vertices w_j of in-degree two.
///
/// Layout: P2 copy i is (2i -> 2i+1); each star follows with its center first;
/// the w_j come last. Star arc directions and the (x_j, y_j) choices, uniform
/// over all valid pairs, are drawn from Rng(seed).
FamilyInstance construct_gamma_tree(std::size_t r, std::span<const std::size_t> star_orders,
                                    std::uint64_t seed);

/// Sharpness gadget for the converse-sum bound: four directed P2 paths per
/// seed vertex, two fed by it and two feeding it. |V(R)| = 9n'.
/// Path vertices for seed i start at n' + 8i in the order x11,x12,x21,...,x42.
FamilyInstance construct_r_gadget(const Digraph& connected);

/// D': for each v_i, new vertices w_i = n+i and u_i = 2n+i with arcs
/// w_i <-> u_i and u_i -> v_i.
Digraph reduce_domination_gadget(const Digraph& d);

/// D'': for each v_i, a new vertex x_i = n+i with the arc v_i -> x_i.
Digraph reduce_packing_gadget(const Digraph& d);

/// reduce_domination_gadget with the certificate S u W u U, S the canonical
/// gamma(D) witness. Throws Error(indeterminate) if gamma(D) cannot be solved.
FamilyInstance reduction_dd_instance(const Digraph& d, std::uint64_t budget = default_budget());
/// reduce_packing_gadget with the certificate B u X, B the canonical rho(D) witness.
FamilyInstance reduction_lp_instance(const Digraph& d, std::uint64_t budget = default_budget());

/// Whether D attains the L_2 upper bound (omega) or the gamma_x2 lower bound
/// (theta), decided by exact solving and integer comparison.
/// Needs delta-(D) >= 1 (Error(precondition)); an unsolved instance throws
/// Error(indeterminate).
bool extremal_membership(const Digraph& d, Family family, std::uint64_t budget = default_budget(),
                         SearchStrategy strategy = SearchStrategy::pruned);

/// Structure forced on an L_2-set B at equality: D<B> functional, every
/// member of in-degree delta-(D), every non-member with exactly two
/// out-neighbors in B.
bool omega_certificate(const Digraph& d, const VertexSet& b);

/// Structure forced on a gamma_x2-set S at equality: D<S> contrafunctional,
/// every member of out-degree Delta+(D), every non-member with exactly two
/// in-neighbors in S.
bool theta_certificate(const Digraph& d, const VertexSet& s);

} // namespace digdom

#endif // DIGDOM_FAMILIES_HPP
