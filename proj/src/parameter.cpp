#include "digdom/parameter.hpp"

#include "digdom/error.hpp"

#include <charconv>

namespace digdom {

namespace {

std::optional<unsigned> parse_suffix(std::string_view text, std::string_view prefix) {
    if (text.substr(0, prefix.size()) != prefix) return std::nullopt;
    text.remove_prefix(prefix.size());
    unsigned k = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
    if (ec != std::errc{} || ptr != text.data() + text.size() || k == 0) return std::nullopt;
    return k;
}

} // namespace

ParameterKind ParameterKind::k_domination(unsigned k) {
    if (k == 0) throw Error(ErrorCode::invalid_argument, "k-domination needs k >= 1");
    return ParameterKind(ParameterTag::k_domination, k);
}

ParameterKind ParameterKind::k_limited_packing(unsigned k) {
    if (k == 0) throw Error(ErrorCode::invalid_argument, "k-limited packing needs k >= 1");
    return ParameterKind(ParameterTag::k_limited_packing, k);
}

unsigned ParameterKind::threshold() const noexcept {
    switch (tag_) {
    case ParameterTag::domination:
    case ParameterTag::packing:
        return 1;
    case ParameterTag::k_domination:
    case ParameterTag::k_limited_packing:
        return k_;
    case ParameterTag::double_domination:
    case ParameterTag::total_2_domination:
    case ParameterTag::two_limited_packing:
    case ParameterTag::total_2_limited_packing:
        return 2;
    }
    return 0;
}

bool ParameterKind::is_maximization() const noexcept {
    switch (tag_) {
    case ParameterTag::packing:
    case ParameterTag::k_limited_packing:
    case ParameterTag::two_limited_packing:
    case ParameterTag::total_2_limited_packing:
        return true;
    default:
        return false;
    }
}

std::string ParameterKind::name() const {
    switch (tag_) {
    case ParameterTag::domination:
        return "gamma";
    case ParameterTag::k_domination:
        return k_ == 2 ? "gamma-2" : "k-dom:" + std::to_string(k_);
    case ParameterTag::double_domination:
        return "gamma-x2";
    case ParameterTag::total_2_domination:
        return "gamma-t2";
    case ParameterTag::packing:
        return "rho";
    case ParameterTag::k_limited_packing:
        return k_ == 1 ? "L1" : "k-lp:" + std::to_string(k_);
    case ParameterTag::two_limited_packing:
        return "L2";
    case ParameterTag::total_2_limited_packing:
        return "L2t";
    }
    return "?";
}

std::string ParameterKind::symbol() const {
    switch (tag_) {
    case ParameterTag::domination:
        return "gamma";
    case ParameterTag::k_domination:
        return "gamma_" + std::to_string(k_);
    case ParameterTag::double_domination:
        return "gamma_x2";
    case ParameterTag::total_2_domination:
        return "gamma^t_x2";
    case ParameterTag::packing:
        return "rho";
    case ParameterTag::k_limited_packing:
        return "L_" + std::to_string(k_);
    case ParameterTag::two_limited_packing:
        return "L_2";
    case ParameterTag::total_2_limited_packing:
        return "L^t_2";
    }
    return "?";
}

ParameterKind ParameterKind::parse(std::string_view name) {
    if (name == "gamma" || name == "dom" || name == "domination") return domination();
    if (name == "gamma-2" || name == "2-dom") return k_domination(2);
    if (name == "gamma-x2" || name == "double-dom" || name == "double-domination") {
        return double_domination();
    }
    if (name == "gamma-t2" || name == "total-2-dom" || name == "total-2-domination") {
        return total_2_domination();
    }
    if (name == "rho" || name == "packing") return packing();
    if (name == "L1") return k_limited_packing(1);
    if (name == "L2" || name == "2-limited-packing") return two_limited_packing();
    if (name == "L2t" || name == "total-2-limited-packing") return total_2_limited_packing();
    if (auto k = parse_suffix(name, "k-dom:")) return k_domination(*k);
    if (auto k = parse_suffix(name, "k-lp:")) return k_limited_packing(*k);
    throw Error(ErrorCode::invalid_argument, "unknown parameter '" + std::string(name) + "'");
}

} // namespace digdom
