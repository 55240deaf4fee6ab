#include "doctest.h"

#include "oracle.hpp"

#include "digdom/error.hpp"
#include "digdom/families.hpp"
#include "digdom/generators.hpp"
#include "digdom/solvers.hpp"

using namespace digdom;

namespace {

Digraph cycle(std::size_t n) {
    std::vector<Arc> arcs;
    for (Vertex v = 0; v < n; ++v) arcs.push_back({v, static_cast<Vertex>((v + 1) % n)});
    return Digraph::build(n, arcs);
}
Digraph p2() { return build_digraph(2, {{0, 1}}); }
Digraph k2bi() { return build_digraph(2, {{0, 1}, {1, 0}}); }
Digraph k3bi() { return build_digraph(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}}); }
Digraph single() { return build_digraph(1, {}); }

std::size_t value_of(const Digraph& d, ParameterKind k, std::uint64_t budget = default_budget()) {
    const SolveResult r = solve_exact(d, k, budget, SearchStrategy::pruned);
    REQUIRE(r.optimal());
    return *r.value;
}

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::invalid_argument;
}

void check_partition(const FamilyInstance& inst) {
    const std::size_t n = inst.digraph.order();
    CHECK(inst.seed_vertices.universe_size() == n);
    CHECK(inst.added_vertices.universe_size() == n);
    CHECK(inst.seed_vertices.size() + inst.added_vertices.size() == n);
    for (Vertex v = 0; v < n; ++v) CHECK(inst.seed_vertices.contains(v) != inst.added_vertices.contains(v));
    CHECK(is_valid(inst.digraph, inst.extremal_set, certified_kind(inst.family)));
}

/// Structural invariants of an omega instance with seed order n_prime.
void check_omega(const FamilyInstance& inst, std::size_t n_prime, std::size_t r) {
    const Digraph& d = inst.digraph;
    check_partition(inst);
    for (Vertex v = 0; v < n_prime; ++v) CHECK(d.in_degree(v) == r);
    for (Vertex u = static_cast<Vertex>(n_prime); u < d.order(); ++u) {
        std::size_t into_seeds = 0;
        for (Vertex w : d.out_neighbors(u)) into_seeds += w < n_prime ? 1 : 0;
        CHECK(into_seeds == 2);
        CHECK(d.in_degree(u) == r);
    }
    CHECK(classify(d).delta_minus == r);
    CHECK(inst.extremal_set.size() * (r + 1) == 2 * d.order());
}

} // namespace

TEST_CASE("construct_omega: examples") {
    SUBCASE("2-cycle, r=1") {
        const FamilyInstance inst = construct_omega(cycle(2), 1);
        CHECK(inst.params.p == std::optional<std::size_t>(0));
        CHECK(inst.digraph == cycle(2));
        CHECK(inst.added_vertices.empty());
        CHECK(value_of(inst.digraph, ParameterKind::two_limited_packing()) == 2);
        check_omega(inst, 2, 1);
    }
    SUBCASE("2-cycle, r=2") {
        const FamilyInstance inst = construct_omega(cycle(2), 2);
        CHECK(inst.digraph.order() == 3);
        CHECK(inst.digraph.has_arc(2, 0));
        CHECK(inst.digraph.has_arc(2, 1));
        CHECK(value_of(inst.digraph, ParameterKind::two_limited_packing()) == 2);
        check_omega(inst, 2, 2);
        CHECK(extremal_membership(inst.digraph, Family::omega));
    }
    SUBCASE("3-cycle, r=3") {
        const FamilyInstance inst = construct_omega(cycle(3), 3);
        CHECK(inst.params.p == std::optional<std::size_t>(6));
        CHECK(inst.added_vertices.size() == 3);
        CHECK(inst.digraph.order() == 6);
        CHECK(value_of(inst.digraph, ParameterKind::two_limited_packing()) == 3);
        CHECK(oracle::l2(oracle::from(inst.digraph)) == 3);
        check_omega(inst, 3, 3);
    }
    SUBCASE("default r") {
        CHECK(construct_omega(cycle(2)).params.r == std::optional<std::size_t>(1));
        // Delta- = 2 and n' = 3 odd: r must be odd, so r = 3.
        const Digraph f = build_digraph(3, {{0, 1}, {1, 2}, {2, 1}});
        CHECK(construct_omega(f).params.r == std::optional<std::size_t>(3));
    }
}

TEST_CASE("construct_omega: invariants over random functional seeds") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n_prime = 2 + seed % 4;
        const Digraph f = random_functional(n_prime, seed);
        const std::size_t delta = classify(f).Delta_minus;
        for (std::size_t r = std::max<std::size_t>(delta, 1); r <= 4; ++r) {
            if ((r - 1) * n_prime % 2 != 0) continue;
            const FamilyInstance inst = construct_omega(f, r);
            check_omega(inst, n_prime, r);
            CHECK(omega_certificate(inst.digraph, inst.extremal_set));
            if (inst.digraph.order() <= 12) {
                CHECK(static_cast<std::size_t>(oracle::l2(oracle::from(inst.digraph))) == inst.extremal_set.size());
            }
        }
    }
}

TEST_CASE("construct_omega: errors") {
    CHECK(code_of([] { construct_omega(p2()); }) == ErrorCode::precondition);
    const Digraph f = build_digraph(3, {{0, 1}, {1, 2}, {2, 1}});
    CHECK(code_of([&] { construct_omega(f, 1); }) == ErrorCode::precondition);  // r < Delta-
    CHECK(code_of([&] { construct_omega(f, 2); }) == ErrorCode::precondition);  // (r-1)n' odd
}

TEST_CASE("construct_theta") {
    SUBCASE("2-cycle, r=2") {
        const FamilyInstance inst = construct_theta(cycle(2), 2);
        CHECK(inst.digraph.order() == 3);
        CHECK(value_of(inst.digraph, ParameterKind::double_domination()) == 2);
        check_partition(inst);
        CHECK(extremal_membership(inst.digraph, Family::theta));
    }
    SUBCASE("2-cycle, r=1") {
        const FamilyInstance inst = construct_theta(cycle(2), 1);
        CHECK(inst.digraph == cycle(2));
        CHECK(value_of(inst.digraph, ParameterKind::double_domination()) == 2);
    }
    SUBCASE("mirror of omega on the converse") {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const std::size_t n_prime = 2 + seed % 4;
            const Digraph c = random_contrafunctional(n_prime, 40 + seed);
            const FamilyInstance theta = construct_theta(c);
            const FamilyInstance omega = construct_omega(converse(c));
            CHECK(theta.digraph == converse(omega.digraph));
            CHECK(theta.params.r == omega.params.r);
            const std::size_t r = *theta.params.r;
            for (Vertex v = 0; v < theta.digraph.order(); ++v) CHECK(theta.digraph.out_degree(v) == r);
            CHECK(classify(theta.digraph).Delta_plus == r);
            check_partition(theta);
            CHECK(theta_certificate(theta.digraph, theta.extremal_set));
            CHECK(theta.extremal_set.size() * (r + 1) == 2 * theta.digraph.order());
        }
    }
    SUBCASE("errors") {
        CHECK(code_of([] { construct_theta(p2()); }) == ErrorCode::precondition);
    }
}

TEST_CASE("construct_gamma_tree") {
    SUBCASE("three P2 copies and stars of order 4 and 3") {
        const std::vector<std::size_t> stars = {4, 3};
        const FamilyInstance inst = construct_gamma_tree(3, stars, 1);
        const auto c = classify(inst.digraph);
        CHECK(inst.digraph.order() == 17);
        CHECK(c.is_directed_tree);
        CHECK(static_cast<long>(c.e) - static_cast<long>(c.p) == 3);
        CHECK(inst.params.q == std::optional<std::size_t>(4));
        CHECK(inst.extremal_set.size() == 13);
        CHECK(value_of(inst.digraph, ParameterKind::total_2_domination()) == 13);
        check_partition(inst);
    }
    SUBCASE("two P2 copies") {
        const FamilyInstance inst = construct_gamma_tree(2, {}, 5);
        const auto c = classify(inst.digraph);
        CHECK(inst.digraph.order() == 5);
        CHECK(c.is_directed_tree);
        CHECK(c.e == c.p);
        CHECK(value_of(inst.digraph, ParameterKind::total_2_domination()) == 4);
        CHECK(oracle::gamma_t2(oracle::from(inst.digraph)) == std::optional<int>(4));
    }
    SUBCASE("equality over seeds") {
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            const std::size_t r = seed % 3;
            std::vector<std::size_t> stars;
            for (std::size_t i = 0; i < (seed / 3) % 3 + (r < 2 ? 2 - r : 0); ++i) stars.push_back(3 + (seed + i) % 3);
            const FamilyInstance inst = construct_gamma_tree(r, stars, seed);
            const auto c = classify(inst.digraph);
            const std::size_t n = inst.digraph.order();
            std::size_t sum_t = 0;
            for (std::size_t t : stars) sum_t += t;
            CHECK(c.is_directed_tree);
            CHECK(static_cast<long>(c.e) - static_cast<long>(c.p) ==
                  static_cast<long>(sum_t) - 2 * static_cast<long>(stars.size()));
            const std::size_t g = value_of(inst.digraph, ParameterKind::total_2_domination());
            CHECK(3 * g == 2 * n + c.e - c.p + 2);
            CHECK(g == inst.extremal_set.size());
        }
    }
    SUBCASE("deterministic per seed") {
        const std::vector<std::size_t> stars = {5, 3, 4};
        CHECK(construct_gamma_tree(2, stars, 9).digraph == construct_gamma_tree(2, stars, 9).digraph);
    }
    SUBCASE("errors") {
        const std::vector<std::size_t> one = {3};
        CHECK(code_of([&] { construct_gamma_tree(0, one, 1); }) == ErrorCode::precondition);
        CHECK(code_of([] { construct_gamma_tree(1, {}, 1); }) == ErrorCode::precondition);
        const std::vector<std::size_t> small = {2};
        CHECK(code_of([&] { construct_gamma_tree(1, small, 1); }) == ErrorCode::precondition);
    }
}

TEST_CASE("construct_r_gadget") {
    const auto lt = ParameterKind::total_2_limited_packing();
    SUBCASE("single vertex") {
        const FamilyInstance inst = construct_r_gadget(single());
        CHECK(inst.digraph.order() == 9);
        CHECK(value_of(inst.digraph, lt) + value_of(converse(inst.digraph), lt) == 16);
        check_partition(inst);
    }
    SUBCASE("K2 biorientation") {
        const FamilyInstance inst = construct_r_gadget(k2bi());
        CHECK(inst.digraph.order() == 18);
        CHECK(value_of(inst.digraph, lt) + value_of(converse(inst.digraph), lt) == 32);
    }
    SUBCASE("P2") {
        const FamilyInstance inst = construct_r_gadget(p2());
        CHECK(inst.digraph.order() == 18);
        CHECK(is_valid(inst.digraph, inst.extremal_set, lt));
        CHECK(is_valid(converse(inst.digraph), inst.extremal_set, lt));
        CHECK(inst.extremal_set.size() == 16);
    }
    SUBCASE("errors") {
        CHECK(code_of([] { construct_r_gadget(build_digraph(2, {})); }) == ErrorCode::precondition);
        CHECK(code_of([] { construct_r_gadget(build_digraph(0, {})); }) == ErrorCode::precondition);
    }
}

TEST_CASE("reduction gadgets") {
    const auto x2 = ParameterKind::double_domination();
    const auto t2 = ParameterKind::total_2_domination();
    const auto l2 = ParameterKind::two_limited_packing();
    const auto lt = ParameterKind::total_2_limited_packing();

    const Digraph dk2 = reduce_domination_gadget(k2bi());
    CHECK(dk2.order() == 6);
    CHECK(dk2.arc_count() == 2 + 6);
    CHECK(value_of(dk2, x2) == 5);
    CHECK(value_of(reduce_domination_gadget(k3bi()), t2) == 7);
    CHECK(value_of(reduce_domination_gadget(single()), x2) == 3);

    const Digraph pk2 = reduce_packing_gadget(k2bi());
    CHECK(pk2.order() == 4);
    CHECK(value_of(pk2, l2) == 3);
    CHECK(value_of(reduce_packing_gadget(k3bi()), lt) == 4);
    CHECK(value_of(reduce_packing_gadget(single()), l2) == 2);

    for (const Digraph& d : {k2bi(), k3bi(), p2(), single()}) {
        const FamilyInstance dd = reduction_dd_instance(d);
        check_partition(dd);
        CHECK(is_valid(dd.digraph, dd.extremal_set, t2));
        CHECK(dd.extremal_set.size() == value_of(dd.digraph, x2));
        const FamilyInstance lp = reduction_lp_instance(d);
        check_partition(lp);
        CHECK(is_valid(lp.digraph, lp.extremal_set, lt));
        CHECK(lp.extremal_set.size() == value_of(lp.digraph, l2));
    }
}

TEST_CASE("extremal_membership") {
    CHECK(extremal_membership(construct_omega(cycle(2), 2).digraph, Family::omega));
    CHECK(extremal_membership(k3bi(), Family::omega));
    CHECK_FALSE(extremal_membership(reduce_packing_gadget(k2bi()), Family::omega));
    CHECK(code_of([] { extremal_membership(p2(), Family::omega); }) == ErrorCode::precondition);
    CHECK(code_of([] { extremal_membership(k3bi(), Family::gamma_tree); }) == ErrorCode::invalid_argument);
    CHECK(code_of([] { extremal_membership(k3bi(), Family::theta, 1); }) == ErrorCode::indeterminate);
}

TEST_CASE("family names") {
    for (Family f : {Family::omega, Family::theta, Family::gamma_tree, Family::r_gadget, Family::reduction_dd,
                     Family::reduction_lp}) {
        CHECK(parse_family(to_string(f)) == f);
    }
    CHECK_THROWS_AS((void)parse_family("delta"), Error);
}
