#include "digdom/generators.hpp"

#include "digdom/error.hpp"
#include "digdom/rng.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>

namespace digdom {

namespace {

[[noreturn]] void bad_spec(const std::string& what) {
    throw Error(ErrorCode::invalid_argument, "generator spec: " + what);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

template <class T>
T parse_number(std::string_view key, std::string_view value) {
    T out{};
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        bad_spec("bad value '" + std::string(value) + "' for " + std::string(key));
    }
    return out;
}

Digraph orient(std::size_t n, const std::vector<Edge>& edges, auto&& reverse_edge) {
    std::vector<Arc> arcs;
    arcs.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [lo, hi] = edges[i];
        arcs.push_back(reverse_edge(i) ? Arc{hi, lo} : Arc{lo, hi});
    }
    return Digraph::build(n, arcs);
}

std::vector<Edge> tree_edges_small(std::size_t n) {
    if (n == 2) return {{0, 1}};
    return {};
}

} // namespace

GenSpec GenSpec::parse(std::string_view text) {
    const auto parts = split(text, ':');
    GenSpec spec;
    const std::string_view kind = parts.front();
    if (kind == "random") {
        spec.kind = GenKind::random_digraph;
    } else if (kind == "tree") {
        spec.kind = GenKind::random_directed_tree;
    } else if (kind == "trees") {
        spec.kind = GenKind::enumerate_directed_trees;
    } else if (kind == "star") {
        spec.kind = GenKind::directed_star;
    } else if (kind == "functional") {
        spec.kind = GenKind::random_functional;
    } else if (kind == "contrafunctional") {
        spec.kind = GenKind::random_contrafunctional;
    } else {
        bad_spec("unknown kind '" + std::string(kind) + "'");
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const std::string_view part = parts[i];
        if (part == "exhaustive") {
            if (spec.kind != GenKind::random_directed_tree && spec.kind != GenKind::enumerate_directed_trees) {
                bad_spec("'exhaustive' only applies to trees");
            }
            spec.kind = GenKind::enumerate_directed_trees;
            continue;
        }
        const std::size_t eq = part.find('=');
        if (eq == std::string_view::npos) bad_spec("expected key=value, got '" + std::string(part) + "'");
        const std::string_view key = part.substr(0, eq);
        const std::string_view value = part.substr(eq + 1);
        if (key == "n") {
            spec.n = parse_number<std::size_t>(key, value);
        } else if (key == "p") {
            spec.arc_prob = parse_number<double>(key, value);
        } else if (key == "a") {
            spec.a = parse_number<std::size_t>(key, value);
        } else if (key == "b") {
            spec.b = parse_number<std::size_t>(key, value);
        } else if (key == "seed") {
            spec.seed = parse_number<std::uint64_t>(key, value);
        } else if (key == "trials") {
            spec.trials = parse_number<std::uint64_t>(key, value);
        } else {
            bad_spec("unknown key '" + std::string(key) + "'");
        }
    }
    spec.check();
    return spec;
}

std::string GenSpec::to_string() const {
    std::ostringstream os;
    switch (kind) {
    case GenKind::random_digraph: os << "random:n=" << n << ":p=" << arc_prob; break;
    case GenKind::random_directed_tree: os << "tree:n=" << n; break;
    case GenKind::enumerate_directed_trees: os << "trees:n=" << n << ":exhaustive"; break;
    case GenKind::directed_star: os << "star:a=" << a << ":b=" << b; break;
    case GenKind::random_functional: os << "functional:n=" << n; break;
    case GenKind::random_contrafunctional: os << "contrafunctional:n=" << n; break;
    }
    if (kind != GenKind::enumerate_directed_trees && kind != GenKind::directed_star) os << ":seed=" << seed;
    if (trials) os << ":trials=" << *trials;
    return os.str();
}

void GenSpec::check() const {
    if (kind == GenKind::directed_star) {
        if (a + b < 1) bad_spec("a star needs a+b >= 1");
        return;
    }
    if (n < 1) bad_spec("n must be >= 1");
    if (!(arc_prob >= 0.0 && arc_prob <= 1.0)) bad_spec("p must lie in [0,1]");
    if ((kind == GenKind::random_functional || kind == GenKind::random_contrafunctional) && n < 2) {
        bad_spec("functional digraphs need n >= 2");
    }
    if (kind == GenKind::enumerate_directed_trees && n > kDefaultTreeEnumerationCap) {
        bad_spec("tree enumeration is capped at n=" + std::to_string(kDefaultTreeEnumerationCap));
    }
}

Digraph random_digraph(std::size_t n, double arc_prob, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            if (rng.bernoulli(arc_prob)) arcs.push_back({u, v});
        }
    }
    return Digraph::build(n, arcs);
}

std::vector<Edge> pruefer_decode(std::span<const Vertex> code, std::size_t n) {
    if (n < 2) return {};
    if (code.size() + 2 != n) {
        throw Error(ErrorCode::invalid_argument, "Pruefer code length must be n-2");
    }
    std::vector<std::size_t> degree(n, 1);
    for (Vertex c : code) {
        if (c >= n) throw Error(ErrorCode::invalid_argument, "Pruefer entry out of range");
        ++degree[c];
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.push(v);
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Vertex c : code) {
        const Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
        if (--degree[c] == 1) leaves.push(c);
    }
    const Vertex u = leaves.top();
    leaves.pop();
    const Vertex v = leaves.top();
    edges.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(edges.begin(), edges.end());
    return edges;
}

Digraph random_directed_tree(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorCode::invalid_argument, "a tree needs n >= 1");
    Rng rng(seed);
    std::vector<Edge> edges;
    if (n <= 2) {
        edges = tree_edges_small(n);
    } else {
        std::vector<Vertex> code(n - 2);
        for (auto& c : code) c = static_cast<Vertex>(rng.uniform_below(n));
        edges = pruefer_decode(code, n);
    }
    return orient(n, edges, [&](std::size_t) { return rng.coin(); });
}

DirectedTreeEnumeration::DirectedTreeEnumeration(std::size_t n, std::size_t cap) : n_(n) {
    if (n < 1) throw Error(ErrorCode::invalid_argument, "tree enumeration needs n >= 1");
    if (n > cap) {
        throw Error(ErrorCode::invalid_argument,
                    "tree enumeration is capped at n=" + std::to_string(cap) + ", got " + std::to_string(n));
    }
    for (std::size_t i = 2; i < n; ++i) codes_ *= n;
    orientations_ = std::uint64_t{1} << (n - 1);
    size_ = codes_ * orientations_;
}

Digraph DirectedTreeEnumeration::at(std::uint64_t index) const {
    if (index >= size_) throw Error(ErrorCode::invalid_argument, "tree index out of range");
    const std::uint64_t orientation = index % orientations_;
    std::uint64_t rank = index / orientations_;
    std::vector<Edge> edges;
    if (n_ <= 2) {
        edges = tree_edges_small(n_);
    } else {
        std::vector<Vertex> code(n_ - 2);
        for (std::size_t i = code.size(); i-- > 0;) {
            code[i] = static_cast<Vertex>(rank % n_);
            rank /= n_;
        }
        edges = pruefer_decode(code, n_);
    }
    return orient(n_, edges, [&](std::size_t i) { return ((orientation >> i) & 1u) != 0; });
}

Digraph directed_star(std::size_t a, std::size_t b) {
    if (a + b < 1) throw Error(ErrorCode::invalid_argument, "a directed star needs a+b >= 1");
    std::vector<Arc> arcs;
    for (Vertex i = 1; i <= a; ++i) arcs.push_back({0, i});
    for (Vertex i = static_cast<Vertex>(a + 1); i <= a + b; ++i) arcs.push_back({i, 0});
    return Digraph::build(a + b + 1, arcs);
}

Digraph random_functional(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw Error(ErrorCode::invalid_argument, "a functional digraph needs n >= 2");
    Rng rng(seed);
    std::vector<Arc> arcs;
    for (Vertex v = 0; v < n; ++v) {
        Vertex target = static_cast<Vertex>(rng.uniform_below(n - 1));
        if (target >= v) ++target;
        arcs.push_back({v, target});
    }
    return Digraph::build(n, arcs);
}

Digraph random_contrafunctional(std::size_t n, std::uint64_t seed) {
    return converse(random_functional(n, seed));
}

std::uint64_t instance_count(const GenSpec& spec) {
    switch (spec.kind) {
    case GenKind::enumerate_directed_trees: {
        const std::uint64_t all = DirectedTreeEnumeration(spec.n).size();
        return spec.trials ? std::min(all, *spec.trials) : all;
    }
    case GenKind::directed_star:
        return 1;
    default:
        return spec.trials.value_or(1);
    }
}

Digraph generate(const GenSpec& spec, std::uint64_t index) {
    spec.check();
    const std::uint64_t seed = spec.seed + index;
    switch (spec.kind) {
    case GenKind::random_digraph: return random_digraph(spec.n, spec.arc_prob, seed);
    case GenKind::random_directed_tree: return random_directed_tree(spec.n, seed);
    case GenKind::enumerate_directed_trees: return DirectedTreeEnumeration(spec.n).at(index);
    case GenKind::directed_star: return directed_star(spec.a, spec.b);
    case GenKind::random_functional: return random_functional(spec.n, seed);
    case GenKind::random_contrafunctional: return random_contrafunctional(spec.n, seed);
    }
    return {};
}

} // namespace digdom
