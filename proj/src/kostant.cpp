#include "knf/kostant.hpp"

#include "knf/error.hpp"
#include "knf/reps.hpp"

namespace knf {

namespace {

std::vector<bool> compact_subset(const DomainSpec& d) {
    std::vector<bool> s(d.rank(), true);
    s[d.special] = false;
    return s;
}

std::vector<int> integral_omega(const RootSystem& rs, const WeightVector& v) {
    std::vector<int> out;
    for (const auto& c : rs.to_omega_coords(v)) out.push_back(static_cast<int>(c.to_integer()));
    return out;
}

}  // namespace

std::set<std::int64_t> CohomologyTable::nonzero_H1_j() const {
    std::set<std::int64_t> out;
    for (const auto& e : entries)
        if (e.k == 1 && e.j >= 0) out.insert(e.j);
    return out;
}

bool CohomologyTable::nonzero(int k, std::int64_t j) const {
    for (const auto& e : entries)
        if (e.k == k && e.j == j) return true;
    return false;
}

Rational mu(const DomainSpec& d, const IrrepLabel& l) {
    check_label(d, l);
    const WeightVector lam = d.rs->from_omega_coords(std::span<const int>(l.m));
    const WeightVector s_lam = dot_action(*d.rs, WeylElement({d.special}), lam);
    return (d.E(s_lam) - l.twist_a - Rational(1)) / Rational(2);
}

CohomologyTable cohomology(const DomainSpec& d, const IrrepLabel& l, int max_k) {
    check_label(d, l);
    if (!placeable(d, l))
        throw ParityError("E(λ) - a = " + (E_of(d, l) - l.twist_a).str() + " is not odd for " + l.str() + " on " +
                          d.name() + "; cohomology is graded by half-integers only for odd values");
    CohomologyTable t{d, l, max_k, {}};
    const auto compact = compact_subset(d);
    const WeightVector lam = d.rs->from_omega_coords(std::span<const int>(l.m));
    for (auto& w : enumerate_W0(d, max_k)) {
        CohomologyEntry e;
        e.k = static_cast<int>(w.length());
        e.xi = dot_action(*d.rs, w, lam);
        e.xi_omega = integral_omega(*d.rs, e.xi);
        e.shifted_E = d.E(e.xi) - l.twist_a;
        e.j = ((e.shifted_E - Rational(1)) / Rational(2)).to_integer();
        e.dominant0 = true;
        for (std::size_t i = 0; i < d.rank(); ++i)
            if (compact[i] && e.xi_omega[i] < 0) e.dominant0 = false;
        e.dim0 = e.dominant0 ? weyl_dim(*d.rs, e.xi_omega, compact) : 0;
        e.w = std::move(w);
        t.entries.push_back(std::move(e));
    }
    return t;
}

MuReport has_infinitesimal_nf(const DomainSpec& d, const IrrepLabel& l) {
    check_label(d, l);
    const IrrepLabel t = tau_of(d, l);
    MuReport r;
    r.mu_lambda = mu(d, l);
    r.mu_tau_lambda = mu(d, t);
    r.level = std::max(-E_of(d, l) + l.twist_a, -E_of(d, t) + t.twist_a);
    r.placeable = placeable(d, l) && r.mu_lambda.is_integer() && r.mu_tau_lambda.is_integer();
    r.has_inf_nf = r.placeable && (r.mu_lambda >= Rational(0) || r.mu_tau_lambda >= Rational(0));
    return r;
}

std::string verdict_name(VerdictKind v) {
    return v == VerdictKind::NoReducedNF ? "NoReducedNF" : "HasInfinitesimalNF";
}

Verdict vanishing_verdict(const DomainSpec& d, const IrrepLabel& l) {
    Verdict v;
    const IrrepLabel t = tau_of(d, l);
    v.placeable = has_infinitesimal_nf(d, l).placeable;
    if (!v.placeable) return v;
    const bool one_summand = l.twist_a.is_zero() && reality_type(d, l) == RealityType::Real;
    for (const auto& [lab, from_tau] : {std::pair{l, false}, std::pair{t, true}}) {
        if (from_tau && one_summand) continue;
        for (const auto& e : cohomology(d, lab, 1).entries)
            if (e.k == 1 && e.j >= 0) v.witnesses.push_back({from_tau, 1, e.j});
    }
    if (!v.witnesses.empty()) v.kind = VerdictKind::HasInfinitesimalNF;
    return v;
}

bool euler_character_check(const DomainSpec& d, const IrrepLabel& l) {
    check_label(d, l);
    if (d.rs->positive_roots().size() > 40)
        throw GuardError("Euler characteristic check needs |Δ⁺| <= 40; " + d.rs->name() + " has " +
                         std::to_string(d.rs->positive_roots().size()));
    const RootSystem& rs = *d.rs;
    Character lhs = character(rs, l.m);
    for (std::size_t r : d.noncompact_positive_roots()) {
        IntWeight minus(rs.positive_roots_omega()[r]);
        for (auto& c : minus) c = -c;
        Character factor;
        factor.add(CharKey{IntWeight(d.rank(), 0), {}}, 1);
        factor.add(CharKey{minus, {}}, -1);
        lhs = lhs.times(factor);
    }

    const auto compact = compact_subset(d);
    const WeightVector lam = rs.from_omega_coords(std::span<const int>(l.m));
    Character rhs;
    for (const auto& w : enumerate_W0(d)) {
        const auto xi = integral_omega(rs, dot_action(rs, w, lam));
        rhs.add(levi_character(rs, compact, xi), w.length() % 2 == 0 ? 1 : -1);
    }
    return lhs == rhs;
}

}  // namespace knf
