#pragma once

// Finite-dimensional representation theory over a RootSystem: Weyl
// dimensions, Freudenthal weight multiplicities, Klimyk tensor products and
// exterior powers. Weights are carried in integer ω-coordinates.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "knf/label.hpp"
#include "knf/rootsys.hpp"

namespace knf {

using IntWeight = std::vector<int>;

/// A weight of a (possibly twisted) character: ω-coordinates and the
/// additive twist parameter a carried by the summand it came from.
struct CharKey {
    IntWeight weight;
    Rational twist;

    friend bool operator==(const CharKey&, const CharKey&) = default;
    friend auto operator<=>(const CharKey& x, const CharKey& y) {
        if (auto c = x.weight <=> y.weight; c != 0) return c;
        return x.twist <=> y.twist;
    }
};

/// Formal weight multiset with integer (possibly negative) multiplicities.
class Character {
public:
    Character() = default;

    void add(const CharKey& key, std::int64_t mult);
    void add(const Character& other, std::int64_t scale = 1);

    [[nodiscard]] std::int64_t multiplicity(const CharKey& key) const;
    [[nodiscard]] std::int64_t multiplicity(const IntWeight& w) const { return multiplicity(CharKey{w, {}}); }
    /// Σ of multiplicities (the dimension for a genuine module).
    [[nodiscard]] std::int64_t mass() const;
    [[nodiscard]] bool empty() const { return terms_.empty(); }
    [[nodiscard]] const std::map<CharKey, std::int64_t>& terms() const { return terms_; }

    /// Character with every weight shifted by `by` and every twist by `twist`.
    [[nodiscard]] Character shifted(const IntWeight& by, const Rational& twist = Rational{}) const;
    /// Pointwise product of formal characters.
    [[nodiscard]] Character times(const Character& other) const;

    friend bool operator==(const Character&, const Character&) = default;

private:
    std::map<CharKey, std::int64_t> terms_;
};

/// Multiset of irreducibles V^λ{a/2}, keyed by label (twist included).
using Decomposition = std::map<IrrepLabel, std::int64_t>;

/// Default 10^5; KNF_DIM_GUARD in the environment overrides the default.
std::int64_t dimension_guard();
void set_dimension_guard(std::int64_t limit);

/// ∏_{α>0} ⟨λ+ρ,α⟩/⟨ρ,α⟩. Throws on non-dominant λ.
std::int64_t weyl_dim(const RootSystem& rs, std::span<const int> lambda);

/// Weyl dimension for the reductive subalgebra generated by the simple
/// roots flagged in `subset` (λ needs to be dominant only on those).
std::int64_t weyl_dim(const RootSystem& rs, std::span<const int> lambda, const std::vector<bool>& subset);

/// Full weight multiset of V^λ via Freudenthal's formula; every weight
/// carries `twist`. Throws GuardError when weyl_dim exceeds the guard.
Character character(const RootSystem& rs, std::span<const int> lambda, const Rational& twist = Rational{});

/// Character of the irreducible module of the Levi subalgebra spanned by
/// the simple roots in `subset`, with highest weight λ.
Character levi_character(const RootSystem& rs, const std::vector<bool>& subset, std::span<const int> lambda,
                         const Rational& twist = Rational{});

/// Peels a genuine character into irreducibles by repeatedly removing the
/// highest remaining weight. Throws Error if a negative remainder appears.
Decomposition decompose(const RootSystem& rs, const Character& ch);

/// Dimension of Σ mult·V^λ.
std::int64_t total_dimension(const RootSystem& rs, const Decomposition& d);

Decomposition tensor_decompose(const RootSystem& rs, const IrrepLabel& lambda, const IrrepLabel& nu);
/// Tensor product of a decomposed module with an irreducible.
Decomposition tensor_decompose(const RootSystem& rs, const Decomposition& lhs, const IrrepLabel& nu);

/// k-th exterior power of a character (elementary symmetric expansion).
Character exterior_power(const Character& ch, int k);

Decomposition wedge_decompose(const RootSystem& rs, const IrrepLabel& lambda, int k);
/// ⋀^k of ⊕_i V^{λ_i}{a_i/2}; twists add across the factors of each wedge.
Decomposition wedge_of_sum(const RootSystem& rs, std::span<const IrrepLabel> summands, int k);

}  // namespace knf
