#include "digdom/solvers.hpp"

#include "digdom/error.hpp"

#include <bit>
#include <cstdlib>
#include <string>

namespace digdom {

std::string Violation::reason() const {
    const std::string has = " (has " + std::to_string(observed) + ")";
    switch (clause) {
    case ViolationClause::too_few_in_neighbors:
        return "needs >=" + std::to_string(limit) + " in-neighbors in set" + has;
    case ViolationClause::member_without_in_neighbor:
        return "member needs >=1 in-neighbor in set" + has;
    case ViolationClause::isolated_member:
        return "member is isolated in the induced subdigraph";
    case ViolationClause::closed_out_neighborhood_overflow:
        return "closed out-neighborhood holds " + std::to_string(observed) +
               " members, limit " + std::to_string(limit);
    case ViolationClause::member_adjacency_overflow:
        return "adjacent with " + std::to_string(observed) + " members, limit 1";
    case ViolationClause::out_neighbor_overflow:
        return "adjacent to " + std::to_string(observed) + " members, limit 2";
    }
    return "?";
}

std::string to_string(SolveStatus status) {
    switch (status) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

namespace {

std::size_t count_in(std::span<const Vertex> vs, const VertexSet& x) {
    std::size_t c = 0;
    for (Vertex w : vs) c += x.contains(w) ? 1 : 0;
    return c;
}

} // namespace

ValidationResult validate(const Digraph& d, const VertexSet& x, ParameterKind kind) {
    for (Vertex v : x.members()) {
        if (v >= d.order()) {
            throw Error(ErrorCode::invalid_argument,
                        "set member " + std::to_string(v) + " is not a vertex (n=" +
                            std::to_string(d.order()) + ")");
        }
    }
    const unsigned k = kind.threshold();
    for (Vertex v = 0; v < d.order(); ++v) {
        const bool member = x.contains(v);
        switch (kind.tag()) {
        case ParameterTag::domination:
        case ParameterTag::k_domination: {
            if (member) break;
            const std::size_t c = count_in(d.in_neighbors(v), x);
            if (c < k) return Violation{v, ViolationClause::too_few_in_neighbors, c, k};
            break;
        }
        case ParameterTag::double_domination: {
            const std::size_t c = count_in(d.in_neighbors(v), x);
            if (member && c < 1) return Violation{v, ViolationClause::member_without_in_neighbor, c, 1};
            if (!member && c < 2) return Violation{v, ViolationClause::too_few_in_neighbors, c, 2};
            break;
        }
        case ParameterTag::total_2_domination: {
            if (member) {
                const auto nb = d.neighbors(v);
                if (count_in(nb, x) == 0) return Violation{v, ViolationClause::isolated_member, 0, 1};
            } else {
                const std::size_t c = count_in(d.in_neighbors(v), x);
                if (c < 2) return Violation{v, ViolationClause::too_few_in_neighbors, c, 2};
            }
            break;
        }
        case ParameterTag::packing:
        case ParameterTag::k_limited_packing:
        case ParameterTag::two_limited_packing: {
            const std::size_t c = count_in(d.out_neighbors(v), x) + (member ? 1 : 0);
            if (c > k) return Violation{v, ViolationClause::closed_out_neighborhood_overflow, c, k};
            break;
        }
        case ParameterTag::total_2_limited_packing: {
            if (member) {
                const std::size_t c = count_in(d.neighbors(v), x);
                if (c > 1) return Violation{v, ViolationClause::member_adjacency_overflow, c, 1};
            } else {
                const std::size_t c = count_in(d.out_neighbors(v), x);
                if (c > 2) return Violation{v, ViolationClause::out_neighbor_overflow, c, 2};
            }
            break;
        }
        }
    }
    return std::nullopt;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("DIGDOM_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultBudget;
}

namespace {

using Mask = std::uint64_t;

struct BudgetExhausted {};

/// Bit-parallel copy of the digraph plus the predicate for one kind.
class MaskChecker {
public:
    MaskChecker(const Digraph& d, ParameterKind kind, std::uint64_t budget)
        : n_(static_cast<int>(d.order())), kind_(kind.tag()), k_(kind.threshold()), budget_(budget),
          in_(d.order()), out_(d.order()), nb_(d.order()) {
        for (Vertex v = 0; v < d.order(); ++v) {
            for (Vertex w : d.in_neighbors(v)) in_[v] |= bit(w);
            for (Vertex w : d.out_neighbors(v)) out_[v] |= bit(w);
            nb_[v] = in_[v] | out_[v];
        }
        all_ = n_ == 64 ? ~Mask{0} : (bit(static_cast<Vertex>(n_)) - 1);
    }

    static Mask bit(Vertex v) { return Mask{1} << v; }
    int order() const { return n_; }
    Mask all() const { return all_; }
    /// Vertices i..n-1.
    Mask suffix(int i) const { return i >= n_ ? 0 : all_ & ~(bit(static_cast<Vertex>(i)) - 1); }
    std::uint64_t examined() const { return examined_; }

    /// Counts one candidate against the budget, then tests it.
    bool test(Mask x) {
        if (examined_ >= budget_) throw BudgetExhausted{};
        ++examined_;
        return valid(x);
    }

    bool valid(Mask x) const {
        switch (kind_) {
        case ParameterTag::domination:
        case ParameterTag::k_domination:
            for (Mask rest = all_ & ~x; rest; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                if (static_cast<unsigned>(std::popcount(in_[v] & x)) < k_) return false;
            }
            return true;
        case ParameterTag::double_domination:
            for (int v = 0; v < n_; ++v) {
                const int self = static_cast<int>((x >> v) & 1u);
                if (std::popcount(in_[v] & x) + self < 2) return false;
            }
            return true;
        case ParameterTag::total_2_domination:
            for (int v = 0; v < n_; ++v) {
                if ((x >> v) & 1u) {
                    if ((nb_[v] & x) == 0) return false;
                } else if (std::popcount(in_[v] & x) < 2) {
                    return false;
                }
            }
            return true;
        case ParameterTag::packing:
        case ParameterTag::k_limited_packing:
        case ParameterTag::two_limited_packing:
            for (int v = 0; v < n_; ++v) {
                const unsigned self = static_cast<unsigned>((x >> v) & 1u);
                if (static_cast<unsigned>(std::popcount(out_[v] & x)) + self > k_) return false;
            }
            return true;
        case ParameterTag::total_2_limited_packing:
            for (int v = 0; v < n_; ++v) {
                if ((x >> v) & 1u) {
                    if (std::popcount(nb_[v] & x) > 1) return false;
                } else if (std::popcount(out_[v] & x) > 2) {
                    return false;
                }
            }
            return true;
        }
        return false;
    }

private:
    int n_;
    ParameterTag kind_;
    unsigned k_;
    std::uint64_t budget_;
    std::uint64_t examined_ = 0;
    std::vector<Mask> in_, out_, nb_;
    Mask all_ = 0;
};

/// Lexicographic k-combinations of 0..n-1, first valid one.
std::optional<Mask> plain_scan(MaskChecker& c, int k) {
    const int n = c.order();
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mask x = 0;
        for (int i : idx) x |= MaskChecker::bit(static_cast<Vertex>(i));
        if (c.test(x)) return x;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return std::nullopt;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Valid sets are closed under supersets. A prefix is abandoned once its
/// largest completion (every vertex after the last choice) is invalid; that
/// completion only shrinks as the next choice moves right, so the loop stops.
bool pruned_up(MaskChecker& c, int pos, Mask chosen, int need, Mask& found) {
    if (need == 0) {
        if (c.test(chosen)) {
            found = chosen;
            return true;
        }
        return false;
    }
    const int n = c.order();
    for (int i = pos; i <= n - need; ++i) {
        const Mask with = chosen | MaskChecker::bit(static_cast<Vertex>(i));
        if (!c.test(with | c.suffix(i + 1))) break;
        if (pruned_up(c, i + 1, with, need - 1, found)) return true;
    }
    return false;
}

/// Valid sets are closed under subsets: an invalid prefix has no valid
/// extension.
bool pruned_down(MaskChecker& c, int pos, Mask chosen, int need, Mask& found) {
    if (need == 0) {
        found = chosen;
        return true;
    }
    const int n = c.order();
    for (int i = pos; i <= n - need; ++i) {
        const Mask with = chosen | MaskChecker::bit(static_cast<Vertex>(i));
        if (!c.test(with)) continue;
        if (pruned_down(c, i + 1, with, need - 1, found)) return true;
    }
    return false;
}

std::optional<Mask> scan_cardinality(MaskChecker& c, int k, bool maximize, SearchStrategy strategy) {
    if (strategy == SearchStrategy::plain) return plain_scan(c, k);
    Mask found = 0;
    if (maximize) {
        if (k == 0) return c.test(0) ? std::optional<Mask>(0) : std::nullopt;
        return pruned_down(c, 0, 0, k, found) ? std::optional<Mask>(found) : std::nullopt;
    }
    return pruned_up(c, 0, 0, k, found) ? std::optional<Mask>(found) : std::nullopt;
}

bool feasible(const Digraph& d, ParameterTag tag) {
    for (Vertex v = 0; v < d.order(); ++v) {
        if (tag == ParameterTag::double_domination && d.in_degree(v) == 0) return false;
        if (tag == ParameterTag::total_2_domination && d.in_degree(v) == 0 && d.out_degree(v) == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

SolveResult solve_exact(const Digraph& d, ParameterKind kind, std::uint64_t budget,
                        SearchStrategy strategy) {
    if (kind.threshold() > 2) {
        throw Error(ErrorCode::unsupported,
                    "exact solver supports k in {1,2}, got k=" + std::to_string(kind.threshold()));
    }
    const auto start = std::chrono::steady_clock::now();
    SolveResult result;
    result.kind = kind;

    auto finish = [&](SolveStatus status) {
        result.status = status;
        result.elapsed = std::chrono::steady_clock::now() - start;
        return result;
    };

    if (!feasible(d, kind.tag())) return finish(SolveStatus::infeasible);
    if (d.order() > kMaxSolverOrder) return finish(SolveStatus::budget_exceeded);

    MaskChecker checker(d, kind, budget);
    const int n = static_cast<int>(d.order());
    const bool maximize = kind.is_maximization();
    try {
        for (int step = 0; step <= n; ++step) {
            const int k = maximize ? n - step : step;
            if (auto x = scan_cardinality(checker, k, maximize, strategy)) {
                result.value = static_cast<std::size_t>(k);
                result.witness = VertexSet::from_mask(d.order(), *x);
                result.subsets_examined = checker.examined();
                return finish(SolveStatus::optimal);
            }
        }
    } catch (const BudgetExhausted&) {
        result.subsets_examined = checker.examined();
        return finish(SolveStatus::budget_exceeded);
    }
    // Unreachable for feasible kinds: V(D) or the empty set is always valid.
    result.subsets_examined = checker.examined();
    return finish(SolveStatus::infeasible);
}

std::vector<ParameterKind> solve_all_kinds() {
    return {ParameterKind::domination(),
            ParameterKind::k_domination(2),
            ParameterKind::double_domination(),
            ParameterKind::total_2_domination(),
            ParameterKind::packing(),
            ParameterKind::k_limited_packing(1),
            ParameterKind::two_limited_packing(),
            ParameterKind::total_2_limited_packing()};
}

SolveMap solve_all(const Digraph& d, std::uint64_t budget, SearchStrategy strategy) {
    SolveMap out;
    for (ParameterKind kind : solve_all_kinds()) out.emplace(kind, solve_exact(d, kind, budget, strategy));
    return out;
}

} // namespace digdom
