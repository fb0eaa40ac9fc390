#pragma once

// Weyl group elements as reduced words and the set W⁰ of minimal-length
// representatives of W_K \ W (the Hasse diagram of the compact dual).

#include <map>
#include <utility>
#include <vector>

#include "knf/hermitian.hpp"

namespace knf {

/// w = s_{word[0]} s_{word[1]} ⋯ s_{word[k−1]} (0-based simple indices); the
/// rightmost reflection acts first.
class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(std::vector<std::size_t> word) : word_(std::move(word)) {}

    [[nodiscard]] const std::vector<std::size_t>& word() const { return word_; }
    /// Length of the stored word; reduced for every element built by this module.
    [[nodiscard]] std::size_t length() const { return word_.size(); }
    [[nodiscard]] WeylElement inverse() const;
    /// s_i · w.
    [[nodiscard]] WeylElement left_multiply(std::size_t i) const;
    /// w · s_i.
    [[nodiscard]] WeylElement right_multiply(std::size_t i) const;

    friend bool operator==(const WeylElement&, const WeylElement&) = default;

private:
    std::vector<std::size_t> word_;
};

WeightVector apply(const RootSystem& rs, const WeylElement& w, const WeightVector& v);
/// w·λ = w(λ+ρ) − ρ.
WeightVector dot_action(const RootSystem& rs, const WeylElement& w, const WeightVector& lambda);
/// |{α > 0 : w⁻¹α < 0}|, which equals ℓ(w).
std::size_t inversion_count(const RootSystem& rs, const WeylElement& w);

/// w ∈ W⁰ ⟺ w⁻¹σ > 0 for every compact simple root σ.
bool is_min_coset_rep(const DomainSpec& d, const WeylElement& w);
/// Equivalent form: w(ρ) is strictly dominant on the compact simple roots.
bool rho_image_compact_dominant(const DomainSpec& d, const WeylElement& w);

/// W⁰ sorted by length, then lexicographically by word; elements of length ≤ max_k
/// (a negative max_k means all of W⁰).
std::vector<WeylElement> enumerate_W0(const DomainSpec& d, int max_k = -1);

/// Groups W⁰(k) by j = ½(E(w·λ) − a − 1). Keys are (k, j); j may be
/// negative. Throws ParityError when E(λ) − a is not odd.
std::map<std::pair<int, std::int64_t>, std::vector<WeylElement>> stratify_by_j(const DomainSpec& d,
                                                                                const IrrepLabel& lambda, int max_k);

}  // namespace knf
