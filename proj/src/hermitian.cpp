#include "knf/hermitian.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "knf/error.hpp"
#include "knf/reps.hpp"

namespace knf {

namespace {

// Solves ⟨t,σ_I⟩ = −2, ⟨t,σ_j⟩ = 0 (j ≠ I) with t in the span of the simple roots.
WeightVector solve_grading(const RootSystem& rs, std::size_t special) {
    const auto n = static_cast<std::size_t>(rs.rank());
    RatMatrix g(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = inner(rs.simple_roots()[i], rs.simple_roots()[j]);
    std::vector<Rational> b(n);
    b[special] = -2;
    const auto c = solve(g, b);
    return rs.from_sigma_coords(c);
}

// τ = −w₀, with w₀ built as the word that carries ρ to −ρ.
std::vector<std::size_t> compute_tau(const RootSystem& rs) {
    const auto n = static_cast<std::size_t>(rs.rank());
    std::vector<std::size_t> word;
    WeightVector v = rs.rho();
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t i = 0; i < n; ++i)
            if (inner(v, rs.simple_roots()[i]) > Rational(0)) {
                v = rs.simple_reflect(i, v);
                word.push_back(i);
                moved = true;
                break;
            }
    }
    std::vector<std::size_t> tau(n);
    for (std::size_t i = 0; i < n; ++i) {
        WeightVector u = rs.simple_roots()[i];
        for (std::size_t s : word) u = rs.simple_reflect(s, u);
        u = -u;
        auto it = std::find(rs.simple_roots().begin(), rs.simple_roots().end(), u);
        if (it == rs.simple_roots().end()) throw std::logic_error("−w₀ does not permute the simple roots");
        tau[i] = static_cast<std::size_t>(it - rs.simple_roots().begin());
    }
    return tau;
}

std::vector<std::string> tokenize(std::string_view name) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
    };
    for (char ch : name) {
        const bool alpha = std::isalpha(static_cast<unsigned char>(ch)) != 0;
        const bool digit = std::isdigit(static_cast<unsigned char>(ch)) != 0;
        if (!alpha && !digit) {
            flush();
            continue;
        }
        if (!cur.empty() && (std::isalpha(static_cast<unsigned char>(cur.back())) != 0) != alpha) flush();
        cur += ch;
    }
    flush();
    return out;
}

int to_int(const std::string& s, std::string_view whole) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("malformed domain name '" + std::string(whole) + "'");
}

}  // namespace

std::string DomainSpec::name() const {
    switch (kind) {
        case DomainKind::I: return "I " + std::to_string(p) + " " + std::to_string(q);
        case DomainKind::II: return "II " + std::to_string(n);
        case DomainKind::III: return "III " + std::to_string(n);
        case DomainKind::IV: return "IV " + std::to_string(n);
        case DomainKind::EIII: return "EIII";
        case DomainKind::EVII: return "EVII";
    }
    return "?";
}

Rational DomainSpec::E_omega(std::span<const int> m) const {
    if (m.size() != rank())
        throw Error("weight has " + std::to_string(m.size()) + " coefficients, domain " + name() + " has rank " +
                    std::to_string(rank()));
    Rational s;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0) s += Rational(m[i]) * grading_omega[i];
    return s;
}

std::vector<std::size_t> DomainSpec::noncompact_positive_roots() const {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < rs->positive_roots().size(); ++r)
        if (rs->positive_roots_sigma()[r][special] != 0) out.push_back(r);
    return out;
}

int domain_parameter_count(std::string_view kind) {
    if (kind == "I") return 2;
    if (kind == "II" || kind == "III" || kind == "IV") return 1;
    if (kind == "EIII" || kind == "EVII") return 0;
    throw std::invalid_argument("unknown domain type '" + std::string(kind) +
                                "' (expected I, II, III, IV, EIII or EVII)");
}

DomainSpec build_domain(std::string_view name) {
    const auto tok = tokenize(name);
    if (tok.empty()) throw std::invalid_argument("empty domain name");
    const int want = domain_parameter_count(tok[0]);
    if (static_cast<int>(tok.size()) != want + 1)
        throw std::invalid_argument("domain '" + tok[0] + "' takes " + std::to_string(want) + " parameter(s), got '" +
                                    std::string(name) + "'");
    std::vector<int> a;
    for (std::size_t i = 1; i < tok.size(); ++i) a.push_back(to_int(tok[i], name));
    a.resize(2, 0);
    static const std::map<std::string, DomainKind> kinds{{"I", DomainKind::I},       {"II", DomainKind::II},
                                                         {"III", DomainKind::III},   {"IV", DomainKind::IV},
                                                         {"EIII", DomainKind::EIII}, {"EVII", DomainKind::EVII}};
    return build_domain(kinds.at(tok[0]), a[0], a[1]);
}

DomainSpec build_domain(DomainKind kind, int a, int b) {
    DomainSpec d;
    d.kind = kind;
    switch (kind) {
        case DomainKind::I: {
            if (a < 1 || b < a || a + b < 3)
                throw RangeError("domain I p q requires 1 <= p <= q and p + q >= 3 (A_n with n = p+q-1 >= 2), got p=" +
                                 std::to_string(a) + ", q=" + std::to_string(b));
            d.p = a;
            d.q = b;
            d.rs = build_root_system(Family::A, a + b - 1);
            d.special = static_cast<std::size_t>(a - 1);
            d.tube_type = a == b;
            break;
        }
        case DomainKind::II:
            if (a < 4) throw RangeError("domain II n requires n >= 4 (D_n, σ_n), got n=" + std::to_string(a));
            d.n = a;
            d.rs = build_root_system(Family::D, a);
            d.special = static_cast<std::size_t>(a - 1);
            d.tube_type = a % 2 == 0;
            break;
        case DomainKind::III:
            if (a < 1) throw RangeError("domain III n requires n >= 1 (C_n, σ_n), got n=" + std::to_string(a));
            d.n = a;
            d.rs = build_root_system(Family::C, a);
            d.special = static_cast<std::size_t>(a - 1);
            d.tube_type = true;
            break;
        case DomainKind::IV:
            if (a % 2 == 1 && a >= 5) {
                d.rs = build_root_system(Family::B, (a + 1) / 2);
            } else if (a % 2 == 0 && a >= 6) {
                d.rs = build_root_system(Family::D, (a + 2) / 2);
            } else {
                throw RangeError("domain IV m requires m = 2n-1 with n >= 3 (B_n, σ_1) or m = 2n-2 with n >= 4 "
                                 "(D_n, σ_1), got m=" + std::to_string(a));
            }
            d.n = a;
            d.special = 0;
            d.tube_type = true;
            break;
        case DomainKind::EIII:
            d.rs = build_root_system(Family::E6, 6);
            d.special = 0;
            break;
        case DomainKind::EVII:
            d.rs = build_root_system(Family::E7, 7);
            d.special = 6;
            d.tube_type = true;
            break;
    }
    const auto& rs = *d.rs;
    if (rs.highest_root_sigma()[d.special] != 1)
        throw std::logic_error("σ_I is not special in " + rs.name());
    d.grading = solve_grading(rs, d.special);
    for (const auto& w : rs.fundamental_weights()) d.grading_omega.push_back(d.E(w));
    d.tau = compute_tau(rs);
    for (const auto& r : rs.positive_roots()) {
        const Rational e = d.E(r);
        if (e == Rational(-2))
            ++d.dim_D;
        else if (!e.is_zero())
            throw std::logic_error("grading takes a value other than 0, -2 on a positive root");
    }
    return d;
}

std::string reality_name(RealityType r) {
    switch (r) {
        case RealityType::Real: return "real";
        case RealityType::Complex: return "complex";
        case RealityType::Quaternionic: return "quaternionic";
    }
    return "?";
}

void check_label(const DomainSpec& d, const IrrepLabel& l) {
    if (l.m.size() != d.rank())
        throw Error("label " + l.str() + " has " + std::to_string(l.m.size()) + " coefficients; domain " + d.name() +
                    " has rank " + std::to_string(d.rank()));
    if (!l.is_dominant()) throw Error("label " + l.str() + " is not dominant");
}

Rational E_of(const DomainSpec& d, const IrrepLabel& l) { return d.E_omega(l.m); }

IrrepLabel tau_of(const DomainSpec& d, const IrrepLabel& l) {
    if (l.m.size() != d.rank()) throw Error("label rank does not match domain " + d.name());
    IrrepLabel out(std::vector<int>(l.m.size(), 0), -l.twist_a);
    for (std::size_t i = 0; i < l.m.size(); ++i) out.m[d.tau[i]] = l.m[i];
    return out;
}

std::vector<Rational> sigma_coords(const DomainSpec& d, const IrrepLabel& l) {
    if (l.m.size() != d.rank()) throw Error("label rank does not match domain " + d.name());
    const auto& inv = d.rs->inv_cartan();
    std::vector<Rational> c(l.m.size());
    for (std::size_t i = 0; i < l.m.size(); ++i) {
        if (l.m[i] == 0) continue;
        for (std::size_t j = 0; j < c.size(); ++j) c[j] += Rational(l.m[i]) * inv[i][j];
    }
    return c;
}

RealityType reality_type(const DomainSpec& d, const IrrepLabel& l) {
    if (tau_of(d, l).m != l.m) return RealityType::Complex;
    const auto c = sigma_coords(d, l);
    Rational s;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (d.is_compact_node(i)) s += c[i];
    return s.is_integer() ? RealityType::Real : RealityType::Quaternionic;
}

bool placeable(const DomainSpec& d, const IrrepLabel& l) { return (E_of(d, l) - l.twist_a).is_odd_integer(); }

std::int64_t level_of(const DomainSpec& d, const IrrepLabel& l) {
    const Rational x = -E_of(d, l) + l.twist_a;
    const Rational y = -E_of(d, tau_of(d, l)) - l.twist_a;
    const Rational lv = std::max(x, y);
    if (!lv.is_integer())
        throw ParityError("level of " + l.str() + " on " + d.name() + " is " + lv.str() + ", not an integer");
    return lv.to_integer();
}

Rational complex_level(const DomainSpec& d, const IrrepLabel& l) {
    return Rational(-1, 2) * (E_of(d, l) + E_of(d, tau_of(d, l)));
}

std::int64_t HodgeGrading::total() const {
    std::int64_t s = 0;
    for (const auto& [e, m] : entries) s += m;
    return s;
}

std::vector<std::int64_t> HodgeGrading::numbers() const {
    std::vector<std::int64_t> out;
    for (const auto& [e, m] : entries) out.push_back(m);
    return out;
}

HodgeGrading hodge_numbers(const DomainSpec& d, const IrrepLabel& l) {
    check_label(d, l);
    if (!placeable(d, l))
        throw ParityError("V^" + l.str() + " cannot be placed in weight -1 on " + d.name() + ": E(λ)-a = " +
                          (E_of(d, l) - l.twist_a).str() + " is not odd");
    HodgeGrading h;
    auto add = [&](const IrrepLabel& lab, const Rational& shift) {
        const Character ch = character(*d.rs, lab.m);
        for (const auto& [key, mult] : ch.terms()) {
            const Rational e = d.E_omega(key.weight) + shift;
            h.entries[e.to_integer()] += mult;
        }
    };
    add(l, -l.twist_a);
    const bool single = l.twist_a.is_zero() && reality_type(d, l) == RealityType::Real;
    if (!single) {
        const IrrepLabel t = tau_of(d, l);
        add(t, -t.twist_a);
    }
    h.level = h.entries.empty() ? 0 : std::max(h.entries.rbegin()->first, -h.entries.begin()->first);
    return h;
}

}  // namespace knf
