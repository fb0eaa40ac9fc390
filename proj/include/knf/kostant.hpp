#pragma once

// Kostant's theorem for H^k(n, V^λ) graded by the E-eigenvalue, the μ
// invariants and the existence test for infinitesimal normal functions.

#include <cstdint>
#include <set>
#include <vector>

#include "knf/hermitian.hpp"
#include "knf/weyl.hpp"

namespace knf {

struct CohomologyEntry {
    int k = 0;
    std::int64_t j = 0;
    WeylElement w;
    /// w·λ in the ambient basis and in ω-coordinates.
    WeightVector xi;
    std::vector<int> xi_omega;
    /// E(w·λ) − a.
    Rational shifted_E;
    bool dominant0 = false;
    /// Dimension of the K-module V₀^{w·λ}.
    std::int64_t dim0 = 0;
};

struct CohomologyTable {
    DomainSpec domain;
    IrrepLabel lambda;
    int max_k = 0;
    std::vector<CohomologyEntry> entries;

    /// {j ≥ 0 : some entry at k = 1 has this j}.
    [[nodiscard]] std::set<std::int64_t> nonzero_H1_j() const;
    [[nodiscard]] bool nonzero(int k, std::int64_t j) const;
};

/// ½(E(s·λ) − a − 1), s the reflection in σ_I. No parity check.
Rational mu(const DomainSpec& d, const IrrepLabel& l);

/// Entries for all w ∈ W⁰ with ℓ(w) ≤ max_k. Throws ParityError unless E(λ) − a is odd.
CohomologyTable cohomology(const DomainSpec& d, const IrrepLabel& l, int max_k);

struct MuReport {
    Rational mu_lambda;
    Rational mu_tau_lambda;
    bool placeable = false;
    bool has_inf_nf = false;
    /// max(−E(λ)+a, −E(τλ)−a); an odd integer whenever placeable.
    Rational level;
};

/// μ(λ,a) and μ(τλ,−a); has_inf_nf ⟺ placeable ∧ (either μ ≥ 0), where
/// placeable also requires both μ values to be integers.
MuReport has_infinitesimal_nf(const DomainSpec& d, const IrrepLabel& l);

enum class VerdictKind { NoReducedNF, HasInfinitesimalNF };
std::string verdict_name(VerdictKind v);

struct Witness {
    /// false: the summand V^λ{a/2}; true: V^{τλ}{−a/2}.
    bool from_tau = false;
    int k = 1;
    std::int64_t j = 0;
};

struct Verdict {
    VerdictKind kind = VerdictKind::NoReducedNF;
    bool placeable = false;
    std::vector<Witness> witnesses;
};

/// Reads off the (k = 1, j ≥ 0) Kostant strata of both summands of Ṽ^λ{a/2}.
/// A label that cannot be placed in weight −1 gets NoReducedNF with placeable = false.
Verdict vanishing_verdict(const DomainSpec& d, const IrrepLabel& l);

/// Compares Π_{α∈Δ(n)}(1 − e^{−α})·ch V^λ with Σ_{w∈W⁰} (−1)^{ℓ(w)} ch V₀^{w·λ}.
/// Throws GuardError when |Δ⁺| > 40.
bool euler_character_check(const DomainSpec& d, const IrrepLabel& l);

}  // namespace knf
