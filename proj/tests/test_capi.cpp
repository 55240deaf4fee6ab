// Exercises the shared library through its C header only.
#include "doctest.h"

#include "digdom/digdom.h"

#include <string>
#include <vector>

namespace {

struct Text {
    char* s = nullptr;
    ~Text() { dd_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

dd_digraph* parse(const char* text) {
    dd_digraph* d = nullptr;
    REQUIRE(dd_digraph_parse(text, &d) == DD_OK);
    return d;
}

dd_param param(const char* name) {
    dd_param p{};
    REQUIRE(dd_param_parse(name, &p) == DD_OK);
    return p;
}

} // namespace

TEST_CASE("digraph handles") {
    const uint32_t tails[] = {0, 1};
    const uint32_t heads[] = {1, 2};
    dd_digraph* d = nullptr;
    REQUIRE(dd_digraph_new(3, tails, heads, 2, &d) == DD_OK);
    CHECK(dd_digraph_order(d) == 3);
    CHECK(dd_digraph_arc_count(d) == 2);
    Text ser;
    REQUIRE(dd_digraph_serialize(d, &ser.s) == DD_OK);
    CHECK(ser.str() == "3 2\n0 1\n1 2\n");
    Text dot;
    REQUIRE(dd_digraph_to_dot(d, &dot.s) == DD_OK);
    CHECK(dot.str().find("0 -> 1;") != std::string::npos);
    dd_digraph* c = nullptr;
    REQUIRE(dd_digraph_converse(d, &c) == DD_OK);
    Text cser;
    REQUIRE(dd_digraph_serialize(c, &cser.s) == DD_OK);
    CHECK(cser.str() == "3 2\n1 0\n2 1\n");
    dd_digraph_free(c);
    dd_digraph_free(d);

    const uint32_t loop[] = {1};
    dd_digraph* bad = nullptr;
    CHECK(dd_digraph_new(2, loop, loop, 1, &bad) == DD_ERR_CONSTRUCTION);
    CHECK(bad == nullptr);
    CHECK(dd_digraph_parse("5 1\n2 7\n", &bad) == DD_ERR_PARSE);
    CHECK(std::string(dd_last_error()) == "line 2: index 7 >= n=5");
    CHECK(dd_digraph_load("/nonexistent/x.dg", &bad) == DD_ERR_IO);
    CHECK(dd_digraph_parse(nullptr, &bad) == DD_ERR_INVALID_ARGUMENT);
    CHECK(std::string(dd_version()) == "1.0.0");
    dd_digraph_free(nullptr);
}

TEST_CASE("parameters and validation") {
    dd_param p{};
    CHECK(dd_param_parse("k-dom:3", &p) == DD_OK);
    CHECK(p.tag == DD_PARAM_K_DOMINATION);
    CHECK(p.k == 3);
    CHECK(dd_param_parse("nope", &p) == DD_ERR_INVALID_ARGUMENT);

    dd_digraph* d = parse("3 2\n0 1\n1 2\n");
    const uint32_t s[] = {0, 2};
    int valid = -1;
    uint32_t vertex = 99;
    Text reason;
    REQUIRE(dd_validate(d, s, 2, param("gamma"), &valid, &vertex, &reason.s) == DD_OK);
    CHECK(valid == 1);
    const uint32_t one[] = {0};
    Text reason2;
    REQUIRE(dd_validate(d, one, 1, param("gamma"), &valid, &vertex, &reason2.s) == DD_OK);
    CHECK(valid == 0);
    CHECK(vertex == 2);
    CHECK_FALSE(reason2.str().empty());
    const uint32_t out_of_range[] = {5};
    CHECK(dd_validate(d, out_of_range, 1, param("gamma"), &valid, nullptr, nullptr) == DD_ERR_INVALID_ARGUMENT);
    dd_digraph_free(d);
}

TEST_CASE("solving") {
    dd_digraph* d = parse("3 2\n0 1\n1 2\n");
    dd_solution* s = nullptr;
    REQUIRE(dd_solve(d, param("rho"), 0, 1, &s) == DD_OK);
    CHECK(dd_solution_status(s) == DD_SOLVE_OPTIMAL);
    size_t value = 0;
    CHECK(dd_solution_value(s, &value) == 1);
    CHECK(value == 2);
    uint32_t w[4] = {};
    CHECK(dd_solution_witness(s, w, 4) == 2);
    CHECK(w[0] == 0);
    CHECK(w[1] == 2);
    Text js;
    REQUIRE(dd_solution_render(s, DD_FORMAT_JSON, &js.s) == DD_OK);
    CHECK(js.str().find("\"kind\"") != std::string::npos);
    dd_solution_free(s);

    REQUIRE(dd_solve(d, param("gamma-x2"), 0, 0, &s) == DD_OK);
    CHECK(dd_solution_status(s) == DD_SOLVE_INFEASIBLE);
    CHECK(dd_solution_value(s, &value) == 0);
    dd_solution_free(s);

    dd_solution_set* all = nullptr;
    REQUIRE(dd_solve_all(d, 0, 1, &all) == DD_OK);
    CHECK(dd_solution_set_size(all) == 8);
    CHECK(dd_solution_status(dd_solution_set_at(all, 0)) == DD_SOLVE_OPTIMAL);
    Text txt;
    REQUIRE(dd_solution_set_render(all, DD_FORMAT_TEXT, &txt.s) == DD_OK);
    CHECK(txt.str().find("kind=L2t") != std::string::npos);
    dd_solution_set_free(all);
    CHECK(dd_default_budget() > 0);
    dd_digraph_free(d);
}

TEST_CASE("families") {
    dd_digraph* cyc = parse("2 2\n0 1\n1 0\n");
    dd_family* f = nullptr;
    REQUIRE(dd_construct_omega(cyc, 2, &f) == DD_OK);
    CHECK(dd_family_kind_of(f) == DD_FAMILY_OMEGA);
    CHECK(dd_digraph_order(dd_family_digraph(f)) == 3);
    uint32_t ext[8] = {};
    CHECK(dd_family_extremal_set(f, ext, 8) == 2);
    Text side;
    REQUIRE(dd_family_sidecar(f, &side.s) == DD_OK);
    CHECK(side.str().find("\"certified_value\"") != std::string::npos);
    int member = -1;
    REQUIRE(dd_extremal_membership(dd_family_digraph(f), DD_FAMILY_OMEGA, 0, &member) == DD_OK);
    CHECK(member == 1);
    dd_family_free(f);

    dd_digraph* p2 = parse("2 1\n0 1\n");
    CHECK(dd_construct_omega(p2, 0, &f) == DD_ERR_PRECONDITION);
    CHECK(dd_extremal_membership(p2, DD_FAMILY_OMEGA, 0, &member) == DD_ERR_PRECONDITION);

    const size_t stars[] = {4, 3};
    REQUIRE(dd_construct_gamma_tree(3, stars, 2, 1, &f) == DD_OK);
    CHECK(dd_digraph_order(dd_family_digraph(f)) == 17);
    CHECK(dd_family_extremal_set(f, nullptr, 0) == 13);
    dd_family_free(f);

    dd_digraph* one = parse("1 0\n");
    REQUIRE(dd_construct_r_gadget(one, &f) == DD_OK);
    CHECK(dd_digraph_order(dd_family_digraph(f)) == 9);
    dd_family_free(f);

    REQUIRE(dd_construct_reduction_dd(cyc, 0, &f) == DD_OK);
    CHECK(dd_family_kind_of(f) == DD_FAMILY_REDUCTION_DD);
    CHECK(dd_family_extremal_set(f, nullptr, 0) == 5);
    dd_family_free(f);
    dd_digraph* g = nullptr;
    REQUIRE(dd_reduce_packing_gadget(cyc, &g) == DD_OK);
    CHECK(dd_digraph_order(g) == 4);
    dd_digraph_free(g);

    dd_digraph_free(one);
    dd_digraph_free(p2);
    dd_digraph_free(cyc);
}

TEST_CASE("audits") {
    dd_digraph* d = parse("3 2\n0 1\n1 2\n");
    dd_report* r = nullptr;
    REQUIRE(dd_audit_digraph(d, 0, 1, &r) == DD_OK);
    CHECK(dd_report_verdict(r) == DD_VERDICT_CLEAN);
    CHECK(dd_report_finding_count(r) == 0);
    Text txt;
    REQUIRE(dd_report_render(r, DD_FORMAT_TEXT, &txt.s) == DD_OK);
    CHECK(txt.str().rfind("n=3 m=2", 0) == 0);
    char* label = nullptr;
    CHECK(dd_report_finding(r, 0, &label, nullptr) == DD_ERR_INVALID_ARGUMENT);
    dd_report_free(r);
    dd_digraph_free(d);

    REQUIRE(dd_audit_search("P2", "trees:n=4", 0, 0, &r) == DD_OK);
    CHECK(dd_report_verdict(r) == DD_VERDICT_CLEAN);
    Text js;
    REQUIRE(dd_report_render(r, DD_FORMAT_JSON, &js.s) == DD_OK);
    CHECK(js.str().find("\"corpus\"") != std::string::npos);
    dd_report_free(r);

    CHECK(dd_audit_search("P9", "trees:n=4", 0, 0, &r) == DD_ERR_INVALID_ARGUMENT);
    CHECK(dd_audit_search("P1", "blob", 0, 0, &r) == DD_ERR_INVALID_ARGUMENT);
}
