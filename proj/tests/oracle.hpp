// Independent brute-force reference used only by the tests.
//
// Predicates are written directly from the set definitions over an arc set,
// and optima come from scanning every subset mask. Nothing here calls the
// library's validators or solvers.
#ifndef DIGDOM_TESTS_ORACLE_HPP
#define DIGDOM_TESTS_ORACLE_HPP

#include "digdom/digraph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

struct Graph {
    int n = 0;
    std::set<std::pair<int, int>> arcs;

    bool arc(int u, int v) const { return arcs.count({u, v}) > 0; }
    bool adjacent(int u, int v) const { return arc(u, v) || arc(v, u); }
};

inline Graph from(const digdom::Digraph& d) {
    Graph g;
    g.n = static_cast<int>(d.order());
    for (const auto& a : d.arcs()) g.arcs.insert({static_cast<int>(a.tail), static_cast<int>(a.head)});
    return g;
}

using Set = std::set<int>;
using Predicate = std::function<bool(const Graph&, const Set&)>;

inline int in_count(const Graph& g, const Set& s, int v) {
    int c = 0;
    for (int u : s) c += g.arc(u, v) ? 1 : 0;
    return c;
}

inline int out_count(const Graph& g, const Set& s, int v) {
    int c = 0;
    for (int w : s) c += g.arc(v, w) ? 1 : 0;
    return c;
}

inline bool k_dominating(const Graph& g, const Set& s, int k) {
    for (int v = 0; v < g.n; ++v) {
        if (!s.count(v) && in_count(g, s, v) < k) return false;
    }
    return true;
}

inline bool double_dominating(const Graph& g, const Set& s) {
    for (int v = 0; v < g.n; ++v) {
        if (static_cast<int>(s.count(v)) + in_count(g, s, v) < 2) return false;
    }
    return true;
}

inline bool total_2_dominating(const Graph& g, const Set& s) {
    for (int v = 0; v < g.n; ++v) {
        if (s.count(v)) {
            bool has = false;
            for (int u : s) has = has || (u != v && g.adjacent(u, v));
            if (!has) return false;
        } else if (in_count(g, s, v) < 2) {
            return false;
        }
    }
    return true;
}

inline bool k_limited_packing(const Graph& g, const Set& s, int k) {
    for (int v = 0; v < g.n; ++v) {
        if (static_cast<int>(s.count(v)) + out_count(g, s, v) > k) return false;
    }
    return true;
}

inline bool total_2_limited_packing(const Graph& g, const Set& s) {
    for (int v = 0; v < g.n; ++v) {
        if (s.count(v)) {
            int c = 0;
            for (int u : s) c += (u != v && g.adjacent(u, v)) ? 1 : 0;
            if (c > 1) return false;
        } else if (out_count(g, s, v) > 2) {
            return false;
        }
    }
    return true;
}

struct Optimum {
    int value;
    Set witness;  // lexicographically least optimal set
};

/// Exhaustive optimum over all 2^n subsets; empty if nothing is valid.
inline std::optional<Optimum> optimum(const Graph& g, const Predicate& valid, bool maximize) {
    std::optional<Optimum> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n); ++mask) {
        Set s;
        for (int v = 0; v < g.n; ++v) {
            if (mask >> v & 1u) s.insert(v);
        }
        if (!valid(g, s)) continue;
        const int size = static_cast<int>(s.size());
        const bool better = !best || (maximize ? size > best->value : size < best->value) ||
                            (size == best->value && s < best->witness);
        if (better) best = Optimum{size, s};
    }
    return best;
}

inline std::optional<int> gamma(const Graph& g) {
    auto o = optimum(g, [](const Graph& h, const Set& s) { return k_dominating(h, s, 1); }, false);
    return o ? std::optional<int>(o->value) : std::nullopt;
}
inline std::optional<int> gamma_x2(const Graph& g) {
    auto o = optimum(g, double_dominating, false);
    return o ? std::optional<int>(o->value) : std::nullopt;
}
inline std::optional<int> gamma_t2(const Graph& g) {
    auto o = optimum(g, total_2_dominating, false);
    return o ? std::optional<int>(o->value) : std::nullopt;
}
inline int rho(const Graph& g) {
    return optimum(g, [](const Graph& h, const Set& s) { return k_limited_packing(h, s, 1); }, true)->value;
}
inline int l2(const Graph& g) {
    return optimum(g, [](const Graph& h, const Set& s) { return k_limited_packing(h, s, 2); }, true)->value;
}
inline int l2t(const Graph& g) { return optimum(g, total_2_limited_packing, true)->value; }

inline std::vector<int> to_vector(const Set& s) { return {s.begin(), s.end()}; }

} // namespace oracle

#endif // DIGDOM_TESTS_ORACLE_HPP
