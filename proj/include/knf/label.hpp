#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "knf/rational.hpp"

namespace knf {

/// Highest weight λ = Σ m_i ω_i together with a half-twist parameter a
/// (the representation V^λ{a/2}).
struct IrrepLabel {
    std::vector<int> m;
    Rational twist_a;

    IrrepLabel() = default;
    explicit IrrepLabel(std::vector<int> coeffs, Rational a = Rational{}) : m(std::move(coeffs)), twist_a(a) {}

    [[nodiscard]] std::size_t rank() const { return m.size(); }
    [[nodiscard]] bool is_dominant() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] int coefficient_sum() const;

    /// "ω1+2ω3" style rendering with 1-based indices; "0" for the trivial weight.
    /// A nonzero twist is appended as "{a=...}".
    [[nodiscard]] std::string str() const;

    friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
    friend auto operator<=>(const IrrepLabel& x, const IrrepLabel& y) {
        if (auto c = x.m <=> y.m; c != 0) return c;
        return x.twist_a <=> y.twist_a;
    }
};

/// Label with m_i = 1 at the given 1-based indices (ω_0 and ω_{rank+1} are
/// read as zero, so fundamental_sum(n, {0, k}) == ω_k).
IrrepLabel fundamental_sum(std::size_t rank, std::initializer_list<int> indices, Rational a = Rational{});

/// Parses comma-separated ω-coefficients such as "0,0,1". Throws
/// std::invalid_argument on malformed input or negative entries.
std::vector<int> parse_coefficients(std::string_view text);

}  // namespace knf
