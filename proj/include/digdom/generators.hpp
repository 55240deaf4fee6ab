#ifndef DIGDOM_GENERATORS_HPP
#define DIGDOM_GENERATORS_HPP

#include "digdom/digraph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace digdom {

enum class GenKind {
    random_digraph,
    random_directed_tree,
    enumerate_directed_trees,
    directed_star,
    random_functional,
    random_contrafunctional,
};

/// Instance source description.
///
/// Text form (used by the CLI): `<kind>[:key=value]...[:exhaustive]` with
/// kinds `random`, `tree`, `trees`, `star`, `functional`, `contrafunctional`
/// and keys n, p, a, b, seed, trials. `trees` (or `tree:...:exhaustive`)
/// enumerates every directed tree of order n.
struct GenSpec {
    GenKind kind = GenKind::random_digraph;
    std::size_t n = 1;
    double arc_prob = 0.5;
    std::size_t a = 0;
    std::size_t b = 0;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> trials;

    static GenSpec parse(std::string_view text);
    std::string to_string() const;
    /// Throws Error(invalid_argument) when an invariant is broken.
    void check() const;
};

/// Each ordered pair (u,v), u != v, is an arc with probability arc_prob.
/// Pairs are drawn in (u,v) lexicographic order.
Digraph random_digraph(std::size_t n, double arc_prob, std::uint64_t seed);

/// Uniform labeled tree (random Pruefer code), each edge oriented by a fair coin.
Digraph random_directed_tree(std::size_t n, std::uint64_t seed);

/// Edges of the labeled tree with the given Pruefer code, as (min,max) pairs
/// sorted ascending. The code has n-2 entries in 0..n-1.
std::vector<Edge> pruefer_decode(std::span<const Vertex> code, std::size_t n);

inline constexpr std::size_t kDefaultTreeEnumerationCap = 8;

/// All n^(n-2) labeled trees times all 2^(n-1) orientations, addressable by
/// index so ranges can be processed independently.
///
/// index = code_rank * 2^(n-1) + orientation, where code_rank reads the
/// Pruefer code as a base-n number (first entry most significant) and bit i
/// of orientation reverses the i-th sorted edge (min,max) to max->min.
class DirectedTreeEnumeration {
public:
    explicit DirectedTreeEnumeration(std::size_t n, std::size_t cap = kDefaultTreeEnumerationCap);

    std::size_t order() const noexcept { return n_; }
    std::uint64_t size() const noexcept { return size_; }
    Digraph at(std::uint64_t index) const;

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::uint64_t i = 0; i < size_; ++i) fn(at(i));
    }

private:
    std::size_t n_;
    std::uint64_t codes_ = 1;
    std::uint64_t orientations_ = 1;
    std::uint64_t size_ = 1;
};

/// Center 0; out-arcs to leaves 1..a, in-arcs from leaves a+1..a+b.
Digraph directed_star(std::size_t a, std::size_t b);

/// Every vertex gets one out-arc to a uniformly drawn other vertex.
Digraph random_functional(std::size_t n, std::uint64_t seed);
/// converse(random_functional(n, seed)).
Digraph random_contrafunctional(std::size_t n, std::uint64_t seed);

/// Number of instances the generator yields: the enumeration size for `trees`,
/// 1 for `star`, otherwise `trials` (default 1).
std::uint64_t instance_count(const GenSpec& spec);

/// The index-th instance. Random kinds use seed + index as their seed.
Digraph generate(const GenSpec& spec, std::uint64_t index);

} // namespace digdom

#endif // DIGDOM_GENERATORS_HPP
