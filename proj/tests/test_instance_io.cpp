#include "doctest.h"

#include "digdom/error.hpp"
#include "digdom/generators.hpp"
#include "digdom/instance_io.hpp"

#include <cstdio>
#include <filesystem>

using namespace digdom;

namespace {

std::string parse_error(std::string_view text) {
    try {
        (void)parse_instance(text);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::parse);
        return e.what();
    }
    FAIL("expected a parse error");
    return {};
}

} // namespace

TEST_CASE("parse_instance") {
    const Digraph d = parse_instance("# P3\n3 2\n\n0 1\n# middle\n1 2\n");
    CHECK(d == build_digraph(3, {{0, 1}, {1, 2}}));
    CHECK(parse_instance("1 0\n").order() == 1);
    CHECK(parse_instance("  2 1  \r\n 1\t0\n").has_arc(1, 0));
}

TEST_CASE("parse_instance errors carry the line number") {
    CHECK(parse_error("5 3\n0 1\n1 2\n2 7\n") == "line 4: index 7 >= n=5");
    CHECK(parse_error("3 1\n1 1\n") == "line 2: loop arc at vertex 1");
    CHECK(parse_error("3 1\n0 1 2\n").find("line 2:") == 0);
    CHECK(parse_error("3 1\n0 x\n").find("line 2:") == 0);
    CHECK(parse_error("3 1\n0 1\n1 2\n").find("line 3:") == 0);
    CHECK(parse_error("3 2\n0 1\n").find("expected 2 arc lines") != std::string::npos);
    CHECK(parse_error("# nothing\n").find("missing header") != std::string::npos);
}

TEST_CASE("round trip for generator output") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        for (const Digraph& d : {random_digraph(8, 0.3, seed), random_directed_tree(7, seed),
                                 random_functional(5, seed), random_contrafunctional(5, seed)}) {
            CHECK(parse_instance(serialize_instance(d)) == d);
        }
    }
    CHECK(serialize_instance(build_digraph(3, {{1, 2}, {0, 1}})) == "3 2\n0 1\n1 2\n");
}

TEST_CASE("file wrappers") {
    const auto path = (std::filesystem::temp_directory_path() / "digdom_io_test.dg").string();
    const Digraph d = random_digraph(6, 0.4, 3);
    save_instance(d, path);
    CHECK(load_instance(path) == d);
    std::remove(path.c_str());
    try {
        (void)load_instance(path);
        FAIL("expected an io error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::io);
    }
}

TEST_CASE("to_dot") {
    const std::string dot = to_dot(build_digraph(3, {{0, 1}, {1, 2}}));
    CHECK(dot.rfind("digraph D {", 0) == 0);
    CHECK(dot.find("  0 -> 1;\n") != std::string::npos);
    CHECK(dot.find("  1 -> 2;\n") != std::string::npos);
    CHECK(dot.find("  2;\n") != std::string::npos);
    CHECK(dot.back() == '\n');
}

TEST_CASE("parse_vertex_list") {
    CHECK(parse_vertex_list("0,2, 5") == std::vector<Vertex>{0, 2, 5});
    CHECK(parse_vertex_list("").empty());
    CHECK_THROWS_AS((void)parse_vertex_list("0,,1"), Error);
    CHECK_THROWS_AS((void)parse_vertex_list("a"), Error);
}
