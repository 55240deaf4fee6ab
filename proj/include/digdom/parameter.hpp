#ifndef DIGDOM_PARAMETER_HPP
#define DIGDOM_PARAMETER_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace digdom {

enum class ParameterTag {
    domination,               // gamma
    k_domination,             // gamma_k
    double_domination,        // gamma_x2
    total_2_domination,       // gamma^t_x2
    packing,                  // rho
    k_limited_packing,        // L_k
    two_limited_packing,      // L_2
    total_2_limited_packing,  // L^t_2
};

/// Which set property a validator checks and a solver optimizes.
///
/// `k` is carried only by the two parameterized tags. Validators accept any
/// k >= 1; the exact solvers only support k in {1, 2}.
class ParameterKind {
public:
    static ParameterKind domination() { return ParameterKind(ParameterTag::domination, 0); }
    static ParameterKind k_domination(unsigned k);
    static ParameterKind double_domination() { return ParameterKind(ParameterTag::double_domination, 0); }
    static ParameterKind total_2_domination() { return ParameterKind(ParameterTag::total_2_domination, 0); }
    static ParameterKind packing() { return ParameterKind(ParameterTag::packing, 0); }
    static ParameterKind k_limited_packing(unsigned k);
    static ParameterKind two_limited_packing() { return ParameterKind(ParameterTag::two_limited_packing, 0); }
    static ParameterKind total_2_limited_packing() {
        return ParameterKind(ParameterTag::total_2_limited_packing, 0);
    }

    /// Accepts the canonical names returned by name() plus a few aliases
    /// ("double-dom", "total-2-dom", "packing", "2-limited-packing", ...).
    /// Throws Error(invalid_argument) on an unknown name.
    static ParameterKind parse(std::string_view name);

    ParameterTag tag() const noexcept { return tag_; }
    std::optional<unsigned> k() const noexcept {
        return k_ == 0 ? std::nullopt : std::optional<unsigned>(k_);
    }

    /// The k in "|N-(v) n S| >= k" or "|N+[v] n B| <= k" for the tags that
    /// reduce to k-domination / k-limited packing; 2 for the double and total
    /// variants.
    unsigned threshold() const noexcept;

    bool is_maximization() const noexcept;

    /// Canonical CLI name: gamma, gamma-2, gamma-x2, gamma-t2, rho, L1, L2, L2t,
    /// and k-dom:K / k-lp:K for the remaining parameterized forms.
    std::string name() const;
    /// Mathematical symbol, e.g. "gamma_x2(D)" style short label.
    std::string symbol() const;

    friend auto operator<=>(const ParameterKind&, const ParameterKind&) = default;

private:
    ParameterKind(ParameterTag tag, unsigned k) : tag_(tag), k_(k) {}

    ParameterTag tag_;
    unsigned k_;
};

} // namespace digdom

#endif // DIGDOM_PARAMETER_HPP
