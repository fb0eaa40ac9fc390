#pragma once

// Bounded search for irreducible Ṽ^λ admitting infinitesimal normal
// functions, one-parameter family detection, and the abelian-variety
// scenario reports (quaternionic, Weil, k-Weil, spin, Calabi-Yau twists).

#include <optional>
#include <string>
#include <vector>

#include "knf/kostant.hpp"
#include "knf/reps.hpp"

namespace knf {

struct Bounds {
    int coeff_bound = 8;
    int level_bound = 15;
};

struct Hit {
    IrrepLabel label;
    MuReport report;
};

/// {base + s·stride·ω_free : s ≥ 0}; every member is a hit.
struct LabelFamily {
    IrrepLabel base;
    /// 0-based index of the free coefficient.
    std::size_t free_index = 0;
    int stride = 1;

    /// "ω1+aω2 (a≥1)" style rendering, with m_free = stride·a + (base − stride).
    [[nodiscard]] std::string str() const;
    [[nodiscard]] IrrepLabel member(int s) const;

    friend bool operator==(const LabelFamily&, const LabelFamily&) = default;
    friend auto operator<=>(const LabelFamily&, const LabelFamily&) = default;
};

struct ClassificationResult {
    std::string domain;
    Bounds bounds;
    /// Hits not covered by any family, sorted by label.
    std::vector<Hit> finite_hits;
    std::vector<LabelFamily> families;
    /// Every hit found within the bounds, sorted by label.
    std::vector<Hit> all_hits;

    [[nodiscard]] bool empty() const { return finite_hits.empty() && families.empty(); }
    [[nodiscard]] std::vector<IrrepLabel> finite_labels() const;
};

/// Index i is free when raising m_i never lowers μ(λ) or μ(τλ); its stride is
/// the least t ≥ 1 with t·E(ω_i) even, so parity is kept.
struct FreeDirection {
    std::size_t index = 0;
    int stride = 1;
};
std::vector<FreeDirection> free_directions(const DomainSpec& d);

/// All dominant λ (a = 0) with Σm ≤ coeff_bound and level ≤ level_bound that
/// pass has_infinitesimal_nf with level > 1, grouped into families along
/// the smallest free index. Throws RangeError on bounds < 1.
ClassificationResult classify_domain(const DomainSpec& d, Bounds bounds = {});

/// Tube-type domains in the intro list: classical ones of rank ≤ max_rank and EVII.
std::vector<std::string> intro_domains(int max_rank = 6);
std::vector<ClassificationResult> reproduce_intro_list(Bounds bounds = {}, int max_rank = 6);

// Scenario reports.

struct OccurrenceCheck {
    IrrepLabel label;
    /// Odd wedge degrees k (of the ambient H¹) containing the label.
    std::vector<int> degrees;
    /// Largest degree examined before the dimension guard stopped the search.
    int max_degree_checked = 0;
    /// Half-integral ambient coordinates: cannot occur in any tensor power of ω1.
    bool lattice_obstructed = false;

    [[nodiscard]] bool occurs() const { return !degrees.empty(); }
};

/// Quaternionic (II_n) and Weil (I_{p,p}) abelian varieties.
struct AbelianScenario {
    std::string scenario;
    int parameter = 0;
    ClassificationResult raw;
    std::vector<OccurrenceCheck> occurrence;
    /// Hits of `raw` removed by the occurrence filter.
    std::vector<IrrepLabel> filtered_out;
    /// Classification after the filter.
    ClassificationResult filtered;
    VerdictKind verdict = VerdictKind::NoReducedNF;
};

/// Pre: n ≥ 4. For II(6) hits are kept only if they occur in some odd
/// wedge power of V^{ω1} ⊕ V^{ω1}.
AbelianScenario scenario_quaternionic(int n, Bounds bounds = {});
/// Pre: p ≥ 2.
AbelianScenario scenario_weil(int p, Bounds bounds = {});

struct KWeilTerm {
    int d = 0;
    int j = 0;
    IrrepLabel label;
    MuReport report;
    Rational mu_closed_form;

    [[nodiscard]] bool matches() const { return report.mu_lambda == mu_closed_form; }
};

struct KWeilReport {
    int n = 0;
    int p = 0;
    Rational a;
    std::vector<KWeilTerm> terms;
    /// Odd degrees k with a level > 1 constituent passing μ ≥ 0 (or its mirror 2n+2−k).
    std::vector<int> computed_degrees;
    /// The three-way verdict: p ≤ 3 all of 3..2n−1; 3 < p < (n+1)/2 2p−1..2n−2p+3;
    /// otherwise none. It bounds where such variations can lie.
    std::vector<int> verdict_degrees;
    std::string degree_rule;

    [[nodiscard]] int mismatches() const;
    [[nodiscard]] bool computed_within_verdict() const;
};

/// The constituent ω_j + ω_{n−2d+j} of ⋀^{2d+1}/⋀^{2d−1} of H = V^{ω1}{a/2} ⊕ V^{ωn}{−a/2},
/// with twist −a(2d+1−2j).
IrrepLabel k_weil_constituent(int n, int p, int d, int j);
/// Four-case closed form for μ of that constituent.
Rational k_weil_closed_form(int n, int p, int d, int j);
std::vector<int> k_weil_verdict_degrees(int n, int p);
/// Pre: n ≥ 2, 1 ≤ p ≤ ⌊(n+1)/2⌋.
KWeilReport scenario_k_weil(int n, int p);

/// ⋀^{2d+1}H − ⋀^{2d−1}H compared with ⊕_j of the constituents (A_n, twists tracked).
struct WedgeIdentityCheck {
    int n = 0;
    int p = 0;
    int d = 0;
    bool checked = false;
    bool holds = false;
    std::string note;
};
WedgeIdentityCheck k_weil_wedge_identity(int n, int p, int d);

struct SpinReport {
    int m = 0;
    ClassificationResult classification;
    /// The aω1+ω_n (and aω1+ω_{n−1} for D) families predicted in the text.
    std::vector<LabelFamily> expected_families;
    bool expected_found = false;
    /// ω1+ω_n (B) resp. ω1+ω_{n−1}, ω1+ω_n (D) inside S^{⊗3}, S the spin module;
    /// nullopt when the dimension guard stops the computation.
    std::optional<bool> occurrence;
    std::string occurrence_note;
};
/// Pre: m ≥ 5.
SpinReport scenario_spin(int m, Bounds bounds = {});

struct CyTwistRow {
    int k = 0;
    IrrepLabel label;
    Rational a;
    Rational a_closed_form;
    MuReport report;
    Rational mu_closed_form;

    [[nodiscard]] bool matches() const { return report.mu_lambda == mu_closed_form && a == a_closed_form; }
};

struct CyTwistReport {
    std::string domain;
    std::vector<CyTwistRow> rows;
    /// k with generic μ ≥ 0, and the same from the closed forms.
    std::vector<int> nonneg_k;
    std::vector<int> expected_nonneg_k;
    std::string nonneg_rule;

    [[nodiscard]] bool consistent() const;
};

/// Minimal-level twist of kω_I: a = ½(E(kω_I) − E(kτω_I)) + ε(½(E(kω_I) + E(kτω_I))),
/// ε(even) = 1, ε(odd) = 2. Domains I(p,q≠p), II(odd), EIII; RangeError otherwise.
CyTwistReport scenario_cy_twist(const DomainSpec& d, int k_max);

}  // namespace knf
