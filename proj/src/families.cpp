#include "digdom/families.hpp"

#include "digdom/error.hpp"
#include "digdom/rng.hpp"

#include <algorithm>
#include <map>

namespace digdom {

std::string to_string(Family family) {
    switch (family) {
    case Family::omega: return "omega";
    case Family::theta: return "theta";
    case Family::gamma_tree: return "gamma-tree";
    case Family::r_gadget: return "r-gadget";
    case Family::reduction_dd: return "reduction-dd";
    case Family::reduction_lp: return "reduction-lp";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::omega, Family::theta, Family::gamma_tree, Family::r_gadget,
                     Family::reduction_dd, Family::reduction_lp}) {
        if (to_string(f) == name) return f;
    }
    throw Error(ErrorCode::invalid_argument, "unknown family '" + std::string(name) + "'");
}

ParameterKind certified_kind(Family family) {
    switch (family) {
    case Family::omega: return ParameterKind::two_limited_packing();
    case Family::theta: return ParameterKind::double_domination();
    case Family::gamma_tree: return ParameterKind::total_2_domination();
    case Family::r_gadget: return ParameterKind::total_2_limited_packing();
    case Family::reduction_dd: return ParameterKind::double_domination();
    case Family::reduction_lp: return ParameterKind::two_limited_packing();
    }
    return ParameterKind::domination();
}

namespace {

VertexSet range_set(std::size_t universe, std::size_t begin, std::size_t end) {
    VertexSet s(universe);
    for (std::size_t v = begin; v < end; ++v) s.insert(static_cast<Vertex>(v));
    return s;
}

std::size_t choose_r(std::optional<std::size_t> requested, std::size_t max_degree, std::size_t n_prime,
                     const char* degree_name) {
    if (requested) {
        const std::size_t r = *requested;
        if (r < 1 || r < max_degree) {
            throw Error(ErrorCode::precondition, "r=" + std::to_string(r) + " must be >= max(" +
                                                     degree_name + "(D'), 1) = " +
                                                     std::to_string(std::max<std::size_t>(max_degree, 1)));
        }
        if (((r - 1) * n_prime) % 2 != 0) {
            throw Error(ErrorCode::precondition,
                        "(r-1)n' = " + std::to_string((r - 1) * n_prime) + " must be even");
        }
        return r;
    }
    for (std::size_t r = std::max<std::size_t>(max_degree, 1); r <= kMaxAutoR; ++r) {
        if (((r - 1) * n_prime) % 2 == 0) return r;
    }
    throw Error(ErrorCode::construction, "no r <= " + std::to_string(kMaxAutoR) + " satisfies the parity condition");
}

/// Pairs deficiency slots (vertex ids, listed in vertex order) so that no
/// pair repeats a vertex.
std::vector<std::pair<Vertex, Vertex>> pair_slots(std::vector<Vertex> slots) {
    const std::size_t half = slots.size() / 2;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(half);

    bool greedy_ok = true;
    for (std::size_t i = 0; i + 1 < slots.size(); i += 2) {
        if (slots[i] == slots[i + 1]) {
            auto it = std::find_if(slots.begin() + static_cast<std::ptrdiff_t>(i + 2), slots.end(),
                                   [&](Vertex s) { return s != slots[i]; });
            if (it == slots.end()) {
                greedy_ok = false;
                break;
            }
            std::swap(slots[i + 1], *it);
        }
        pairs.emplace_back(slots[i], slots[i + 1]);
    }
    if (greedy_ok) return pairs;

    // Retry: with slots grouped by vertex, pairing position i with i + half
    // never repeats a vertex unless one vertex owns more than half the slots.
    std::sort(slots.begin(), slots.end());
    pairs.clear();
    for (std::size_t i = 0; i < half; ++i) {
        if (slots[i] == slots[i + half]) {
            throw Error(ErrorCode::construction,
                        "deficiency of vertex " + std::to_string(slots[i]) +
                            " exceeds half of all slots; pairing needs a duplicate arc");
        }
        pairs.emplace_back(slots[i], slots[i + half]);
    }
    return pairs;
}

/// Shared skeleton of omega and theta. `forward` builds omega (arcs u -> v,
/// in-degree completion); otherwise theta (arcs v -> u, out-degree
/// completion).
FamilyInstance build_extremal(const Digraph& seed, std::optional<std::size_t> requested_r, bool forward) {
    const VertexClassification c = classify(seed);
    if (forward && !c.is_functional) {
        throw Error(ErrorCode::precondition, "omega needs a functional seed digraph");
    }
    if (!forward && !c.is_contrafunctional) {
        throw Error(ErrorCode::precondition, "theta needs a contrafunctional seed digraph");
    }
    const std::size_t n_prime = seed.order();
    const std::size_t r = choose_r(requested_r, forward ? c.Delta_minus : c.Delta_plus, n_prime,
                                   forward ? "Delta-" : "Delta+");

    std::vector<Vertex> slots;
    for (Vertex v = 0; v < n_prime; ++v) {
        const std::size_t deg = forward ? seed.in_degree(v) : seed.out_degree(v);
        slots.insert(slots.end(), r - deg, v);
    }
    const std::size_t p = slots.size();
    const std::size_t u_count = p / 2;
    const std::size_t n = n_prime + u_count;
    const auto pairs = pair_slots(std::move(slots));

    auto add = [&](std::vector<Arc>& arcs, Vertex a, Vertex b) {
        arcs.push_back(forward ? Arc{a, b} : Arc{b, a});
    };

    std::vector<Arc> arcs = seed.arcs();
    for (std::size_t i = 0; i < u_count; ++i) {
        const Vertex u = static_cast<Vertex>(n_prime + i);
        add(arcs, u, pairs[i].first);
        add(arcs, u, pairs[i].second);
    }
    // Degree completion: sources (targets for theta) in index order; seeds
    // come first, which leaves the seed degrees fixed at r.
    for (std::size_t i = 0; i < u_count; ++i) {
        const Vertex u = static_cast<Vertex>(n_prime + i);
        std::size_t added = 0;
        for (Vertex s = 0; s < n && added < r; ++s) {
            if (s == u) continue;
            add(arcs, s, u);
            ++added;
        }
        if (added < r) {
            throw Error(ErrorCode::construction, "not enough vertices to give every added vertex degree r");
        }
    }

    FamilyInstance inst;
    inst.digraph = Digraph::build(n, arcs);
    inst.family = forward ? Family::omega : Family::theta;
    inst.seed_vertices = range_set(n, 0, n_prime);
    inst.added_vertices = range_set(n, n_prime, n);
    inst.extremal_set = inst.seed_vertices;
    inst.params.r = r;
    inst.params.p = p;
    inst.params.n_prime = n_prime;
    return inst;
}

} // namespace

FamilyInstance construct_omega(const Digraph& functional, std::optional<std::size_t> r) {
    return build_extremal(functional, r, true);
}

FamilyInstance construct_theta(const Digraph& contrafunctional, std::optional<std::size_t> r) {
    return build_extremal(contrafunctional, r, false);
}

FamilyInstance construct_gamma_tree(std::size_t r, std::span<const std::size_t> star_orders, std::uint64_t seed) {
    const std::size_t r_prime = star_orders.size();
    if (r + r_prime < 2) {
        throw Error(ErrorCode::precondition,
                    "the base forest must have at least two components (r + r' >= 2), got r=" +
                        std::to_string(r) + ", r'=" + std::to_string(r_prime));
    }
    for (std::size_t t : star_orders) {
        if (t < 3) throw Error(ErrorCode::precondition, "star orders must be >= 3, got " + std::to_string(t));
    }

    Rng rng(seed);
    std::vector<Arc> arcs;
    // A-vertices (P2 vertices and star centers) with their component index.
    std::vector<std::pair<Vertex, std::size_t>> a_vertices;
    Vertex next = 0;
    for (std::size_t i = 0; i < r; ++i) {
        const Vertex tail = next++;
        const Vertex head = next++;
        arcs.push_back({tail, head});
        a_vertices.emplace_back(tail, i);
        a_vertices.emplace_back(head, i);
    }
    for (std::size_t i = 0; i < r_prime; ++i) {
        const Vertex center = next++;
        a_vertices.emplace_back(center, r + i);
        for (std::size_t leaf = 1; leaf < star_orders[i]; ++leaf) {
            const Vertex l = next++;
            arcs.push_back(rng.coin() ? Arc{l, center} : Arc{center, l});
        }
    }
    const std::size_t forest_order = next;
    const Digraph forest = Digraph::build(forest_order, arcs);

    const std::size_t q = r + r_prime - 1;
    const std::size_t n = forest_order + q;
    VertexSet used(forest_order);  // in-neighbors of the w's placed so far

    for (std::size_t j = 0; j < q; ++j) {
        // B_j: closed neighborhood in the base forest of the used vertices.
        VertexSet closed(forest_order);
        for (Vertex v : used.members()) {
            closed.insert(v);
            for (Vertex w : forest.neighbors(v)) closed.insert(w);
        }
        std::vector<std::pair<Vertex, Vertex>> valid;
        for (std::size_t x = 0; x < a_vertices.size(); ++x) {
            for (std::size_t y = x + 1; y < a_vertices.size(); ++y) {
                const auto [vx, cx] = a_vertices[x];
                const auto [vy, cy] = a_vertices[y];
                const bool ok = j == 0 ? cx != cy : closed.contains(vx) != closed.contains(vy);
                if (ok) valid.emplace_back(vx, vy);
            }
        }
        if (valid.empty()) {
            throw Error(ErrorCode::construction,
                        "no admissible in-neighbor pair for connector " + std::to_string(j + 1) +
                            " (this contradicts the construction's existence guarantee)");
        }
        const auto [x, y] = valid[rng.uniform_below(valid.size())];
        const Vertex w = static_cast<Vertex>(forest_order + j);
        arcs.push_back({x, w});
        arcs.push_back({y, w});
        used.insert(x);
        used.insert(y);
    }

    FamilyInstance inst;
    inst.digraph = Digraph::build(n, arcs);
    if (!classify(inst.digraph).is_directed_tree) {
        throw Error(ErrorCode::construction, "gamma-tree construction did not produce a directed tree");
    }
    inst.family = Family::gamma_tree;
    inst.seed_vertices = range_set(n, 0, forest_order);
    inst.added_vertices = range_set(n, forest_order, n);
    inst.extremal_set = inst.seed_vertices;
    inst.params.r = r;
    inst.params.r_prime = r_prime;
    inst.params.q = q;
    inst.params.star_orders.assign(star_orders.begin(), star_orders.end());
    inst.params.seed = seed;
    return inst;
}

FamilyInstance construct_r_gadget(const Digraph& connected) {
    const std::size_t n_prime = connected.order();
    if (n_prime == 0 || !is_weakly_connected(connected)) {
        throw Error(ErrorCode::precondition, "the R gadget needs a connected seed digraph");
    }
    const std::size_t n = 9 * n_prime;
    std::vector<Arc> arcs = connected.arcs();
    for (Vertex i = 0; i < n_prime; ++i) {
        const Vertex base = static_cast<Vertex>(n_prime + 8 * i);
        for (Vertex k = 0; k < 4; ++k) arcs.push_back({base + 2 * k, base + 2 * k + 1});
        arcs.push_back({i, base});          // (v_i, x11)
        arcs.push_back({i, base + 2});      // (v_i, x21)
        arcs.push_back({base + 4, i});      // (x31, v_i)
        arcs.push_back({base + 6, i});      // (x41, v_i)
    }
    FamilyInstance inst;
    inst.digraph = Digraph::build(n, arcs);
    inst.family = Family::r_gadget;
    inst.seed_vertices = range_set(n, 0, n_prime);
    inst.added_vertices = range_set(n, n_prime, n);
    inst.extremal_set = inst.added_vertices;
    inst.params.n_prime = n_prime;
    return inst;
}

Digraph reduce_domination_gadget(const Digraph& d) {
    const Vertex n = static_cast<Vertex>(d.order());
    std::vector<Arc> arcs = d.arcs();
    for (Vertex i = 0; i < n; ++i) {
        const Vertex w = n + i;
        const Vertex u = 2 * n + i;
        arcs.push_back({w, u});
        arcs.push_back({u, w});
        arcs.push_back({u, i});
    }
    return Digraph::build(3 * static_cast<std::size_t>(n), arcs);
}

Digraph reduce_packing_gadget(const Digraph& d) {
    const Vertex n = static_cast<Vertex>(d.order());
    std::vector<Arc> arcs = d.arcs();
    for (Vertex i = 0; i < n; ++i) arcs.push_back({i, n + i});
    return Digraph::build(2 * static_cast<std::size_t>(n), arcs);
}

namespace {

VertexSet solved_witness(const Digraph& d, ParameterKind kind, std::uint64_t budget) {
    const SolveResult res = solve_exact(d, kind, budget, SearchStrategy::pruned);
    if (!res.optimal()) {
        throw Error(ErrorCode::indeterminate, kind.symbol() + " of the source digraph is " + to_string(res.status));
    }
    return *res.witness;
}

} // namespace

FamilyInstance reduction_dd_instance(const Digraph& d, std::uint64_t budget) {
    const std::size_t n = d.order();
    const VertexSet dominating = solved_witness(d, ParameterKind::domination(), budget);
    FamilyInstance inst;
    inst.digraph = reduce_domination_gadget(d);
    inst.family = Family::reduction_dd;
    inst.seed_vertices = range_set(3 * n, 0, n);
    inst.added_vertices = range_set(3 * n, n, 3 * n);
    inst.extremal_set = inst.added_vertices;
    for (Vertex v : dominating.members()) inst.extremal_set.insert(v);
    inst.params.n_prime = n;
    return inst;
}

FamilyInstance reduction_lp_instance(const Digraph& d, std::uint64_t budget) {
    const std::size_t n = d.order();
    const VertexSet packing = solved_witness(d, ParameterKind::packing(), budget);
    FamilyInstance inst;
    inst.digraph = reduce_packing_gadget(d);
    inst.family = Family::reduction_lp;
    inst.seed_vertices = range_set(2 * n, 0, n);
    inst.added_vertices = range_set(2 * n, n, 2 * n);
    inst.extremal_set = inst.added_vertices;
    for (Vertex v : packing.members()) inst.extremal_set.insert(v);
    inst.params.n_prime = n;
    return inst;
}

bool extremal_membership(const Digraph& d, Family family, std::uint64_t budget, SearchStrategy strategy) {
    if (family != Family::omega && family != Family::theta) {
        throw Error(ErrorCode::invalid_argument, "membership is decided only for omega and theta");
    }
    const VertexClassification c = classify(d);
    if (d.order() == 0 || c.delta_minus < 1) {
        throw Error(ErrorCode::precondition, "membership needs minimum in-degree >= 1");
    }
    const ParameterKind kind = certified_kind(family);
    const SolveResult res = solve_exact(d, kind, budget, strategy);
    if (!res.optimal()) {
        throw Error(ErrorCode::indeterminate, kind.symbol() + " is " + to_string(res.status));
    }
    const std::size_t degree_term = family == Family::omega ? c.delta_minus + 1 : c.Delta_plus + 1;
    return *res.value * degree_term == 2 * d.order();
}

bool omega_certificate(const Digraph& d, const VertexSet& b) {
    const std::size_t delta_minus = classify(d).delta_minus;
    for (Vertex v = 0; v < d.order(); ++v) {
        std::size_t into_b = 0;
        for (Vertex w : d.out_neighbors(v)) into_b += b.contains(w) ? 1 : 0;
        if (b.contains(v)) {
            if (into_b != 1 || d.in_degree(v) != delta_minus) return false;
        } else if (into_b != 2) {
            return false;
        }
    }
    return !b.empty();
}

bool theta_certificate(const Digraph& d, const VertexSet& s) {
    const std::size_t Delta_plus = classify(d).Delta_plus;
    for (Vertex v = 0; v < d.order(); ++v) {
        std::size_t from_s = 0;
        for (Vertex w : d.in_neighbors(v)) from_s += s.contains(w) ? 1 : 0;
        if (s.contains(v)) {
            if (from_s != 1 || d.out_degree(v) != Delta_plus) return false;
        } else if (from_s != 2) {
            return false;
        }
    }
    return !s.empty();
}

} // namespace digdom
