#include "digdom/instance_io.hpp"

#include "digdom/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

namespace digdom {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::optional<std::uint64_t> to_index(std::string_view token) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return v;
}

} // namespace

Digraph parse_instance(std::string_view text) {
    std::optional<std::uint64_t> n;
    std::uint64_t m = 0;
    std::vector<Arc> arcs;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = trim(text.substr(pos, end - pos));
        ++line_no;
        pos = end + 1;
        if (line.empty() || line.front() == '#') continue;

        const auto tok = tokens(line);
        if (tok.size() != 2) fail(line_no, "expected two integers, got '" + std::string(line) + "'");
        const auto a = to_index(tok[0]);
        const auto b = to_index(tok[1]);
        if (!a || !b) fail(line_no, "expected two non-negative integers, got '" + std::string(line) + "'");

        if (!n) {
            if (*a > std::numeric_limits<Vertex>::max()) fail(line_no, "n=" + std::to_string(*a) + " is too large");
            n = *a;
            m = *b;
            arcs.reserve(m);
            continue;
        }
        if (arcs.size() == m) fail(line_no, "more arc lines than the header's m=" + std::to_string(m));
        for (std::uint64_t idx : {*a, *b}) {
            if (idx >= *n) fail(line_no, "index " + std::to_string(idx) + " >= n=" + std::to_string(*n));
        }
        if (*a == *b) fail(line_no, "loop arc at vertex " + std::to_string(*a));
        arcs.push_back({static_cast<Vertex>(*a), static_cast<Vertex>(*b)});
    }
    if (!n) throw Error(ErrorCode::parse, "line 1: missing header 'n m'");
    if (arcs.size() != m) {
        fail(line_no, "expected " + std::to_string(m) + " arc lines, found " + std::to_string(arcs.size()));
    }
    return Digraph::build(*n, arcs);
}

std::string serialize_instance(const Digraph& d) {
    std::ostringstream os;
    os << d.order() << ' ' << d.arc_count() << '\n';
    for (const Arc& a : d.arcs()) os << a.tail << ' ' << a.head << '\n';
    return os.str();
}

Digraph load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void save_instance(const Digraph& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::io, "cannot write '" + path + "'");
    out << serialize_instance(d);
    if (!out) throw Error(ErrorCode::io, "write to '" + path + "' failed");
}

std::string to_dot(const Digraph& d, std::string_view graph_name) {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    for (Vertex v = 0; v < d.order(); ++v) os << "  " << v << ";\n";
    for (const Arc& a : d.arcs()) os << "  " << a.tail << " -> " << a.head << ";\n";
    os << "}\n";
    return os.str();
}

std::vector<Vertex> parse_vertex_list(std::string_view text) {
    std::vector<Vertex> out;
    if (trim(text).empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        const std::string_view item = trim(text.substr(pos, end - pos));
        const auto v = to_index(item);
        if (item.empty() || !v || *v > std::numeric_limits<Vertex>::max()) {
            throw Error(ErrorCode::parse, "malformed vertex list '" + std::string(text) + "'");
        }
        out.push_back(static_cast<Vertex>(*v));
        pos = end + 1;
    }
    return out;
}

} // namespace digdom
