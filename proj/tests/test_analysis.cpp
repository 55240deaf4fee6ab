#include "doctest.h"

#include "oracle.hpp"

#include "digdom/analysis.hpp"
#include "digdom/error.hpp"
#include "digdom/families.hpp"
#include "digdom/generators.hpp"

using namespace digdom;

namespace {

Digraph p2() { return build_digraph(2, {{0, 1}}); }
Digraph p3() { return build_digraph(3, {{0, 1}, {1, 2}}); }
Digraph k2bi() { return build_digraph(2, {{0, 1}, {1, 0}}); }
Digraph k3bi() { return build_digraph(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}}); }

const BoundRecord& rec(const BoundReport& r, std::string_view id) {
    const BoundRecord* p = r.find(id);
    REQUIRE(p != nullptr);
    return *p;
}

std::optional<BoundStatus> status(const BoundReport& r, std::string_view id) { return rec(r, id).status; }

} // namespace

TEST_CASE("rationals") {
    CHECK(to_string(Rational(16, 3)) == "16/3");
    CHECK(to_string(Rational(4)) == "4");
    CHECK(parse_rational("16/3") == Rational(16, 3));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK_THROWS_AS((void)parse_rational("1/0"), Error);
    CHECK_THROWS_AS((void)parse_rational("x"), Error);
    CHECK(parse_relation(to_string(Relation::greater_equal)) == Relation::greater_equal);
    CHECK(parse_bound_status("equality") == BoundStatus::equality);
}

TEST_CASE("bounds_report: record order") {
    const BoundReport r = bounds_report(p3());
    std::vector<std::string> ids;
    for (const auto& x : r.records) ids.push_back(x.theorem_id);
    CHECK(ids == std::vector<std::string>{"T1i", "T1ii", "T2(1,1)", "T2(1,2)", "T2(2,1)", "T2(2,2)", "Thm123",
                                          "ThmTheta", "Duality", "T3", "RhoEqGammaTree", "NG1", "NG1-Corollary",
                                          "TNG2", "TNG2-Product", "RedDD", "RedLP"});
    CHECK(r.n == 3);
    CHECK(r.m == 2);
    AnalysisOptions o;
    o.include_reductions = false;
    CHECK(bounds_report(p3(), o).find("RedDD") == nullptr);
}

TEST_CASE("bounds_report: K3 biorientation attains every sharp bound") {
    const BoundReport r = bounds_report(k3bi());
    CHECK_FALSE(r.any_violated());
    for (const char* id : {"T1i", "T1ii", "T2(1,1)", "T2(1,2)", "T2(2,1)", "T2(2,2)", "Thm123", "ThmTheta"}) {
        CAPTURE(id);
        CHECK(status(r, id) == BoundStatus::equality);
    }
    CHECK(rec(r, "Thm123").characterization == std::optional<bool>(true));
    CHECK(rec(r, "Thm123").lhs == Rational(2));
    CHECK(rec(r, "Thm123").rhs == Rational(2));
    CHECK(rec(r, "ThmTheta").characterization == std::optional<bool>(true));
    CHECK(rec(r, "T2(2,1)").values.at("L2") == 2);
    CHECK_FALSE(rec(r, "Duality").applicable);
    CHECK_FALSE(status(r, "Duality").has_value());
    CHECK_FALSE(rec(r, "T3").applicable);
    CHECK(status(r, "NG1") == BoundStatus::holds);
    CHECK(rec(r, "NG1").characterization == std::optional<bool>(false));
    CHECK(status(r, "TNG2") == BoundStatus::holds);
    CHECK(rec(r, "TNG2").rhs == Rational(16, 3));
    CHECK(status(r, "RedDD") == BoundStatus::equality);
    CHECK(status(r, "RedLP") == BoundStatus::equality);
}

TEST_CASE("bounds_report: P3") {
    const BoundReport r = bounds_report(p3());
    CHECK_FALSE(r.any_violated());
    CHECK(status(r, "T1i") == BoundStatus::equality);
    CHECK_FALSE(rec(r, "T1ii").applicable);
    CHECK(rec(r, "T2(1,1)").values.at("rho") == 2);
    CHECK(rec(r, "T2(1,1)").values.at("gamma") == 2);
    CHECK(status(r, "Duality") == BoundStatus::holds);
    CHECK(rec(r, "Duality").values.at("gap") == 1);
    CHECK(status(r, "T3") == BoundStatus::equality);
    CHECK(status(r, "RhoEqGammaTree") == BoundStatus::equality);
    CHECK(status(r, "NG1") == BoundStatus::equality);
    CHECK(status(r, "NG1-Corollary") == BoundStatus::equality);
    CHECK(rec(r, "NG1-Corollary").values.at("product") == 9);
    CHECK(status(r, "TNG2") == BoundStatus::holds);
    CHECK(status(r, "TNG2-Product") == BoundStatus::holds);
}

TEST_CASE("bounds_report: P2 and small orders") {
    const BoundReport r = bounds_report(p2());
    CHECK_FALSE(rec(r, "T1ii").applicable);
    CHECK_FALSE(rec(r, "Thm123").applicable);
    CHECK(rec(r, "TNG2").relation == Relation::equal);
    CHECK(status(r, "TNG2") == BoundStatus::equality);
    CHECK_FALSE(rec(r, "TNG2-Product").applicable);
    CHECK_FALSE(bounds_report(build_digraph(1, {})).any_violated());
}

TEST_CASE("bounds_report: budget exhaustion is indeterminate") {
    AnalysisOptions o;
    o.budget = 1;
    const BoundReport r = bounds_report(k3bi(), o);
    CHECK(status(r, "Thm123") == BoundStatus::indeterminate);
    CHECK_FALSE(r.any_violated());
}

TEST_CASE("bounds_report: no violations on random digraphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Digraph d = random_digraph(5 + seed % 3, seed % 2 ? 0.25 : 0.5, seed);
        const BoundReport r = bounds_report(d);
        CAPTURE(seed);
        for (const BoundRecord& x : r.records) {
            if (!x.violated()) continue;
            // Only the 2-cycle pendant reading of NG1 may disagree.
            CAPTURE(x.theorem_id);
            CHECK(x.theorem_id.rfind("NG1", 0) == 0);
            CHECK(x.note.find("single-neighbor") != std::string::npos);
        }
    }
}

TEST_CASE("ng1_degree_condition") {
    CHECK(ng1_degree_condition(p3()));
    CHECK_FALSE(ng1_degree_condition(k3bi()));

    // Biorientation of P3: the leaves meet the center through 2-cycles, so
    // nothing is an end-vertex by arc count, yet no proper subset is total
    // 2-dominating.
    const Digraph p3bi = build_digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
    CHECK(*oracle::gamma_t2(oracle::from(p3bi)) == 3);
    CHECK_FALSE(ng1_degree_condition(p3bi));
    CHECK(ng1_degree_condition(p3bi, false, EndVertexReading::single_neighbor));
    const BoundReport r = bounds_report(p3bi);
    CHECK(status(r, "NG1") == BoundStatus::violated);
    CHECK(rec(r, "NG1").note.find("single-neighbor") != std::string::npos);

    // With single-neighbor end-vertices the biconditional matches the oracle.
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const Digraph d = random_digraph(5, 0.35, seed);
        if (!is_weakly_connected(d)) continue;
        const auto g = oracle::gamma_t2(oracle::from(d));
        REQUIRE(g.has_value());
        CHECK((*g == 5) == ng1_degree_condition(d, false, EndVertexReading::single_neighbor));
        bool two_cycle = false;
        for (const Arc& a : d.arcs()) two_cycle = two_cycle || d.has_arc(a.head, a.tail);
        if (!two_cycle) CHECK((*g == 5) == ng1_degree_condition(d));
    }
}

TEST_CASE("nordhaus_gaddum_check") {
    SUBCASE("stars reproduce the four-case table") {
        for (std::size_t a = 0; a <= 3; ++a) {
            for (std::size_t b = 0; b <= 3; ++b) {
                if (a + b < 2) continue;
                const Digraph s = directed_star(a, b);
                const std::size_t n = a + b + 1;
                std::size_t expected = n + 1;
                if (std::min(a, b) == 1 && std::max(a, b) >= 2) expected = n + 2;
                if (a >= 2 && b >= 2) expected = n + 3;
                const auto ng = nordhaus_gaddum_check(s);
                CAPTURE(a);
                CAPTURE(b);
                CHECK(ng.sum.lhs == Rational(static_cast<std::int64_t>(expected)));
                CHECK(static_cast<std::size_t>(oracle::l2t(oracle::from(s)) +
                                               oracle::l2t(oracle::from(converse(s)))) == expected);
                CHECK(ng.sum.status != BoundStatus::violated);
            }
        }
        const auto ng = nordhaus_gaddum_check(directed_star(2, 2));
        CHECK(ng.sum.lhs == Rational(8));
        CHECK(ng.sum.status == BoundStatus::holds);
    }
    SUBCASE("gadget over a single vertex is sharp") {
        const auto ng = nordhaus_gaddum_check(construct_r_gadget(build_digraph(1, {})).digraph);
        CHECK(ng.sum.lhs == Rational(16));
        CHECK(ng.sum.status == BoundStatus::equality);
        CHECK(ng.product.status == BoundStatus::equality);
    }
    SUBCASE("small orders") {
        CHECK(nordhaus_gaddum_check(build_digraph(1, {})).sum.status == BoundStatus::equality);
        CHECK(nordhaus_gaddum_check(k2bi()).sum.status == BoundStatus::equality);
    }
    SUBCASE("disconnected input") {
        CHECK_THROWS_AS((void)nordhaus_gaddum_check(build_digraph(3, {{0, 1}})), Error);
    }
}

TEST_CASE("duality_check") {
    const BoundRecord r2 = duality_check(p2());
    CHECK(r2.values.at("L2t") == 2);
    CHECK(r2.values.at("gamma_t2") == 2);
    CHECK(r2.status == BoundStatus::equality);
    const BoundRecord r3 = duality_check(p3());
    CHECK(r3.values.at("gap") == 1);
    CHECK_THROWS_AS((void)duality_check(k3bi()), Error);
    CHECK_THROWS_AS((void)duality_check(build_digraph(1, {})), Error);
}

TEST_CASE("reduction_identity_check") {
    for (const Digraph& d : {k2bi(), p2(), k3bi(), build_digraph(1, {})}) {
        const auto red = reduction_identity_check(d);
        CHECK(red.domination.status == BoundStatus::equality);
        CHECK(red.packing.status == BoundStatus::equality);
    }
    const auto red = reduction_identity_check(k2bi());
    CHECK(red.domination.values.at("gamma_x2_gadget") == 5);
    CHECK(red.packing.values.at("L2_gadget") == 3);
}

TEST_CASE("tree_rho_gamma_check") {
    const DirectedTreeEnumeration trees(5);
    trees.for_each([](const Digraph& t) {
        const BoundRecord r = tree_rho_gamma_check(t);
        CHECK(r.status == BoundStatus::equality);
        CHECK(oracle::rho(oracle::from(t)) == *oracle::gamma(oracle::from(t)));
    });
    CHECK_THROWS_AS((void)tree_rho_gamma_check(k3bi()), Error);
}

TEST_CASE("counterexample_search") {
    SUBCASE("P2 census on trees of order 4") {
        const SearchReport r = counterexample_search({"P2"}, GenSpec::parse("trees:n=4"), 0);
        CHECK(r.trials == 128);
        CHECK(r.evaluated == 128);
        CHECK(r.violations.empty());
        CHECK_FALSE(r.proven_violation());
        CHECK(r.equality_count == r.corpus.size());
        CHECK(r.tallies.at("P2").equality + r.tallies.at("P2").holds == 128);
        for (const CorpusEntry& e : r.corpus) {
            const auto g = oracle::from(e.digraph);
            CHECK(oracle::l2t(g) == static_cast<int>(e.value));
            CHECK(*oracle::gamma_t2(g) == static_cast<int>(e.value));
            CHECK(classify(e.digraph).e == e.e);
        }
    }
    SUBCASE("P1 filters trees and isolated vertices") {
        const SearchReport r = counterexample_search({"P1"}, GenSpec::parse("random:n=5:p=0.4:seed=3"), 40);
        CHECK(r.trials == 40);
        CHECK(r.evaluated + r.skipped_filter + r.skipped_budget == 40);
        for (const SearchFinding& f : r.violations) {
            CHECK_FALSE(f.proven);
            CHECK(*f.lhs > *f.rhs);
            CHECK(f.seed == 3 + f.index);
        }
        CHECK(r.open_finding() == !r.violations.empty());
    }
    SUBCASE("single theorem mode") {
        const SearchReport r = counterexample_search({"Thm123"}, GenSpec::parse("random:n=6:p=0.5:seed=1"), 20);
        CHECK(r.tallies.size() == 1);
        CHECK(r.tallies.at("Thm123").violated == 0);
        CHECK(r.evaluated == 20);
        const SearchReport t2 = counterexample_search({"T2"}, GenSpec::parse("random:n=5:p=0.5:seed=1"), 5);
        CHECK(t2.tallies.size() == 4);
    }
    SUBCASE("unknown problem") {
        CHECK_THROWS_AS((void)counterexample_search({"P9"}, GenSpec::parse("random:n=3"), 1), Error);
    }
}
