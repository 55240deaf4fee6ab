#include "digdom/digraph.hpp"

#include "digdom/error.hpp"

#include <algorithm>
#include <string>

namespace digdom {

Digraph Digraph::build(std::size_t n, std::span<const Arc> arcs) {
    Digraph d;
    d.out_.resize(n);
    d.in_.resize(n);
    for (const Arc& a : arcs) {
        if (a.tail >= n || a.head >= n) {
            throw Error(ErrorCode::construction,
                        "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                            ") has an endpoint outside 0.." + std::to_string(n) + "-1");
        }
        if (a.tail == a.head) {
            throw Error(ErrorCode::construction, "loop at vertex " + std::to_string(a.tail));
        }
        d.out_[a.tail].push_back(a.head);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& out = d.out_[v];
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        d.arc_count_ += out.size();
        for (Vertex w : out) d.in_[w].push_back(v);
    }
    // in_ lists are filled in increasing tail order, hence already sorted.
    return d;
}

std::vector<Vertex> Digraph::neighbors(Vertex v) const {
    const auto& in = in_.at(v);
    const auto& out = out_.at(v);
    std::vector<Vertex> result;
    result.reserve(in.size() + out.size());
    std::set_union(in.begin(), in.end(), out.begin(), out.end(), std::back_inserter(result));
    return result;
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
    if (tail >= out_.size()) return false;
    const auto& out = out_[tail];
    return std::binary_search(out.begin(), out.end(), head);
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (Vertex v = 0; v < out_.size(); ++v) {
        for (Vertex w : out_[v]) result.push_back({v, w});
    }
    return result;
}

Digraph converse(const Digraph& d) {
    std::vector<Arc> reversed;
    reversed.reserve(d.arc_count());
    for (const Arc& a : d.arcs()) reversed.push_back({a.head, a.tail});
    return Digraph::build(d.order(), reversed);
}

Digraph biorient(std::size_t n, std::span<const Edge> edges) {
    std::vector<Arc> arcs;
    arcs.reserve(2 * edges.size());
    for (const auto& [x, y] : edges) {
        if (x == y) throw Error(ErrorCode::construction, "loop edge at vertex " + std::to_string(x));
        arcs.push_back({x, y});
        arcs.push_back({y, x});
    }
    return Digraph::build(n, arcs);
}

InducedSubdigraph induced_subdigraph(const Digraph& d, const VertexSet& s) {
    if (s.universe_size() > d.order()) {
        for (Vertex v : s.members()) {
            if (v >= d.order()) {
                throw Error(ErrorCode::invalid_argument,
                            "vertex " + std::to_string(v) + " is not in the digraph");
            }
        }
    }
    InducedSubdigraph result;
    result.old_to_new.assign(d.order(), std::nullopt);
    for (Vertex v = 0; v < d.order(); ++v) {
        if (s.contains(v)) {
            result.old_to_new[v] = static_cast<Vertex>(result.new_to_old.size());
            result.new_to_old.push_back(v);
        }
    }
    std::vector<Arc> arcs;
    for (Vertex v : result.new_to_old) {
        for (Vertex w : d.out_neighbors(v)) {
            if (result.old_to_new[w]) arcs.push_back({*result.old_to_new[v], *result.old_to_new[w]});
        }
    }
    result.digraph = Digraph::build(result.new_to_old.size(), arcs);
    return result;
}

std::size_t arc_cut_count(const Digraph& d, const VertexSet& from, const VertexSet& to) {
    std::size_t count = 0;
    for (Vertex v = 0; v < d.order(); ++v) {
        if (!from.contains(v)) continue;
        for (Vertex w : d.out_neighbors(v)) {
            if (to.contains(w)) ++count;
        }
    }
    return count;
}

bool is_weakly_connected(const Digraph& d) {
    const std::size_t n = d.order();
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : d.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

bool has_isolated_vertex(const Digraph& d) {
    for (Vertex v = 0; v < d.order(); ++v) {
        if (d.in_degree(v) == 0 && d.out_degree(v) == 0) return true;
    }
    return false;
}

VertexClassification classify(const Digraph& d) {
    const std::size_t n = d.order();
    VertexClassification c;
    c.end_vertices = VertexSet(n);
    c.penultimate_vertices = VertexSet(n);

    for (Vertex v = 0; v < n; ++v) {
        if (d.in_degree(v) + d.out_degree(v) == 1) c.end_vertices.insert(v);
    }
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : d.neighbors(v)) {
            if (c.end_vertices.contains(w)) {
                c.penultimate_vertices.insert(v);
                break;
            }
        }
    }
    c.e = c.end_vertices.size();
    c.p = c.penultimate_vertices.size();

    if (n > 0) {
        c.delta_minus = c.Delta_minus = d.in_degree(0);
        c.delta_plus = c.Delta_plus = d.out_degree(0);
    }
    c.is_functional = n > 0;
    c.is_contrafunctional = n > 0;
    for (Vertex v = 0; v < n; ++v) {
        const std::size_t in = d.in_degree(v);
        const std::size_t out = d.out_degree(v);
        c.delta_minus = std::min(c.delta_minus, in);
        c.Delta_minus = std::max(c.Delta_minus, in);
        c.delta_plus = std::min(c.delta_plus, out);
        c.Delta_plus = std::max(c.Delta_plus, out);
        if (out != 1) c.is_functional = false;
        if (in != 1) c.is_contrafunctional = false;
    }

    c.is_connected = is_weakly_connected(d);
    c.is_directed_tree = c.is_connected && d.arc_count() + 1 == n;
    return c;
}

} // namespace digdom
