#pragma once

// Irreducible Hermitian symmetric domains D = G/K as a pair (root system,
// special simple root σ_I), together with the grading element E and the
// invariants of a highest weight attached to it.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "knf/label.hpp"
#include "knf/rootsys.hpp"

namespace knf {

enum class DomainKind { I, II, III, IV, EIII, EVII };

struct DomainSpec {
    DomainKind kind = DomainKind::III;
    /// Table parameters: (p, q) for I, n for II/III, m for IV; unused entries are 0.
    int p = 0;
    int q = 0;
    int n = 0;
    RootSystemPtr rs;
    /// 0-based index of the special simple root σ_I.
    std::size_t special = 0;
    /// Riesz vector of the grading functional: E(v) = ⟨grading, v⟩.
    WeightVector grading;
    /// E(ω_i) for each fundamental weight.
    std::vector<Rational> grading_omega;
    /// Diagram automorphism τ = −w₀ on 0-based node indices.
    std::vector<std::size_t> tau;
    int dim_D = 0;
    bool tube_type = false;

    /// Canonical name: "I p q", "II n", "III n", "IV m", "EIII", "EVII".
    [[nodiscard]] std::string name() const;
    [[nodiscard]] std::size_t rank() const { return static_cast<std::size_t>(rs->rank()); }
    [[nodiscard]] bool is_compact_node(std::size_t i) const { return i != special; }
    [[nodiscard]] Rational E(const WeightVector& v) const { return inner(grading, v); }
    /// E of the weight with the given ω-coordinates.
    [[nodiscard]] Rational E_omega(std::span<const int> m) const;
    /// Positive roots with E(α) = −2 (the roots of n).
    [[nodiscard]] std::vector<std::size_t> noncompact_positive_roots() const;
};

/// Builds from a canonical name; tokens may be separated by spaces, commas
/// or parentheses ("I 2 2", "I(2,2)", "III3"). Throws RangeError for
/// parameters outside the table and std::invalid_argument for bad syntax.
DomainSpec build_domain(std::string_view name);
DomainSpec build_domain(DomainKind kind, int a = 0, int b = 0);

/// Number of integer parameters following the type name ("I" → 2, "EIII" → 0).
int domain_parameter_count(std::string_view kind);

enum class RealityType { Real, Complex, Quaternionic };
std::string reality_name(RealityType r);

Rational E_of(const DomainSpec& d, const IrrepLabel& l);
/// Permutes m by τ and negates the twist.
IrrepLabel tau_of(const DomainSpec& d, const IrrepLabel& l);
/// λ in σ-coordinates.
std::vector<Rational> sigma_coords(const DomainSpec& d, const IrrepLabel& l);
RealityType reality_type(const DomainSpec& d, const IrrepLabel& l);

/// E(λ) − a is an odd integer.
bool placeable(const DomainSpec& d, const IrrepLabel& l);

/// max(−E(λ)+a, −E(τλ)−a). Throws ParityError if it is not an integer.
std::int64_t level_of(const DomainSpec& d, const IrrepLabel& l);
/// −½(E(λ)+E(τλ)).
Rational complex_level(const DomainSpec& d, const IrrepLabel& l);

struct HodgeGrading {
    /// Shifted E-eigenvalue 2p+1 → multiplicity h^p.
    std::map<std::int64_t, std::int64_t> entries;
    std::int64_t level = 0;

    [[nodiscard]] std::int64_t total() const;
    /// Multiplicities in increasing eigenvalue order.
    [[nodiscard]] std::vector<std::int64_t> numbers() const;
};

/// Grading of Ṽ^λ{a/2} = V^λ{a/2} ⊕ V^{τλ}{−a/2}; only the first summand is
/// used when V^λ is real and a = 0. Throws ParityError when not placeable.
HodgeGrading hodge_numbers(const DomainSpec& d, const IrrepLabel& l);

/// Checks that a label matches the domain's rank and is dominant.
void check_label(const DomainSpec& d, const IrrepLabel& l);

}  // namespace knf
