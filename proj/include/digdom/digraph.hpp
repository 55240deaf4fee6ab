#ifndef DIGDOM_DIGRAPH_HPP
#define DIGDOM_DIGRAPH_HPP

#include "digdom/vertex_set.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace digdom {

struct Arc {
    Vertex tail;
    Vertex head;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

using Edge = std::pair<Vertex, Vertex>;

/// Immutable digraph on vertices 0..n-1 without loops or parallel arcs.
/// Opposite arcs (u,v) and (v,u) may both be present.
///
/// Adjacency lists are strictly increasing, and u is in out(v) exactly when
/// v is in in(u).
class Digraph {
public:
    Digraph() = default;

    /// Duplicate arcs are merged. Loops and out-of-range endpoints throw
    /// Error(construction).
    static Digraph build(std::size_t n, std::span<const Arc> arcs);

    std::size_t order() const noexcept { return out_.size(); }
    std::size_t arc_count() const noexcept { return arc_count_; }

    std::span<const Vertex> out_neighbors(Vertex v) const { return out_.at(v); }
    std::span<const Vertex> in_neighbors(Vertex v) const { return in_.at(v); }
    /// N(v) = N-(v) u N+(v), sorted; an opposite pair contributes once.
    std::vector<Vertex> neighbors(Vertex v) const;

    std::size_t out_degree(Vertex v) const { return out_.at(v).size(); }
    std::size_t in_degree(Vertex v) const { return in_.at(v).size(); }

    bool has_arc(Vertex tail, Vertex head) const;
    bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

    /// All arcs sorted by (tail, head).
    std::vector<Arc> arcs() const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.out_ == b.out_;
    }

private:
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::size_t arc_count_ = 0;
};

inline Digraph build_digraph(std::size_t n, std::span<const Arc> arcs) {
    return Digraph::build(n, arcs);
}

inline Digraph build_digraph(std::size_t n, std::initializer_list<Arc> arcs) {
    return Digraph::build(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

/// D^{-1}: every arc reversed.
Digraph converse(const Digraph& d);

/// Complete biorientation of a simple graph: each edge becomes two opposite
/// arcs. Loop edges throw Error(construction).
Digraph biorient(std::size_t n, std::span<const Edge> edges);

struct InducedSubdigraph {
    Digraph digraph;
    /// new index -> original vertex
    std::vector<Vertex> new_to_old;
    /// original vertex -> new index, empty for vertices outside the set
    std::vector<std::optional<Vertex>> old_to_new;
};

/// D<S>: vertices of S (reindexed in increasing order) and every arc of D
/// with both ends in S.
InducedSubdigraph induced_subdigraph(const Digraph& d, const VertexSet& s);

/// |{(u,v) in A(D) : u in A, v in B}|
std::size_t arc_cut_count(const Digraph& d, const VertexSet& from, const VertexSet& to);

struct VertexClassification {
    VertexSet end_vertices;          // deg+ + deg- = 1
    VertexSet penultimate_vertices;  // adjacent with some end-vertex
    std::size_t e = 0;
    std::size_t p = 0;
    bool is_connected = false;       // underlying graph connected
    bool is_directed_tree = false;   // underlying graph is a tree
    bool is_functional = false;      // every out-degree is 1
    bool is_contrafunctional = false;  // every in-degree is 1
    std::size_t delta_minus = 0;
    std::size_t delta_plus = 0;
    std::size_t Delta_minus = 0;
    std::size_t Delta_plus = 0;
};

VertexClassification classify(const Digraph& d);

bool is_weakly_connected(const Digraph& d);
bool has_isolated_vertex(const Digraph& d);

} // namespace digdom

#endif // DIGDOM_DIGRAPH_HPP
