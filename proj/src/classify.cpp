#include "knf/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "knf/error.hpp"

namespace knf {

namespace {

void for_each_label(std::size_t rank, int bound, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> m(rank, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == rank) {
            fn(m);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            m[i] = c;
            self(self, i + 1, left - c);
        }
        m[i] = 0;
    };
    rec(rec, 0, bound);
}

IrrepLabel unit(std::size_t rank, std::size_t i, int c = 1) {
    std::vector<int> m(rank, 0);
    m[i] = c;
    return IrrepLabel(std::move(m));
}

bool is_hit(const MuReport& r, const Bounds& b) {
    return r.has_inf_nf && r.level > Rational(1) && r.level <= Rational(b.level_bound);
}

ClassificationResult group_hits(const DomainSpec& d, const Bounds& bounds, std::vector<Hit> hits) {
    ClassificationResult out;
    out.domain = d.name();
    out.bounds = bounds;
    std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) { return x.label < y.label; });
    const auto free = free_directions(d);
    if (free.empty()) {
        out.finite_hits = hits;
    } else {
        const auto [i, t] = free.front();
        std::map<std::pair<std::vector<int>, int>, IrrepLabel> bases;
        for (const auto& h : hits) {
            std::vector<int> rest = h.label.m;
            rest[i] = 0;
            auto key = std::make_pair(std::move(rest), h.label.m[i] % t);
            auto it = bases.find(key);
            if (it == bases.end() || h.label.m[i] < it->second.m[i]) bases.insert_or_assign(key, h.label);
        }
        for (const auto& [key, base] : bases) out.families.push_back(LabelFamily{base, i, t});
        std::sort(out.families.begin(), out.families.end());
    }
    out.all_hits = std::move(hits);
    return out;
}

Rational epsilon(const Rational& m) {
    if (!m.is_integer()) throw ParityError("ε needs an integer argument, got " + m.str());
    return m.is_even_integer() ? Rational(1) : Rational(2);
}

std::int64_t floor_div2(std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

std::vector<int> odd_range(int lo, int hi) {
    std::vector<int> out;
    for (int k = lo; k <= hi; ++k)
        if (k % 2 != 0) out.push_back(k);
    return out;
}

bool ambient_integral(const DomainSpec& d, const IrrepLabel& l) {
    for (const auto& c : d.rs->from_omega_coords(std::span<const int>(l.m)).coords())
        if (!c.is_integer()) return false;
    return true;
}

struct WedgeTable {
    std::vector<std::pair<int, Decomposition>> odd;
    int max_degree_checked = 0;
};

// Odd exterior powers of ⊕ h1 up to the dimension guard.
WedgeTable odd_wedges(const DomainSpec& d, const std::vector<IrrepLabel>& h1) {
    WedgeTable t;
    std::int64_t total = 0;
    for (const auto& s : h1) total += weyl_dim(*d.rs, s.m);
    for (int k = 1; k <= total; k += 2) {
        try {
            t.odd.emplace_back(k, wedge_of_sum(*d.rs, h1, k));
        } catch (const GuardError&) {
            break;
        }
        t.max_degree_checked = k;
    }
    return t;
}

OccurrenceCheck check_occurrence(const DomainSpec& d, const WedgeTable& t, const IrrepLabel& l) {
    OccurrenceCheck oc;
    oc.label = l;
    oc.lattice_obstructed = !ambient_integral(d, l);
    oc.max_degree_checked = t.max_degree_checked;
    for (const auto& [k, dec] : t.odd)
        if (dec.count(l)) oc.degrees.push_back(k);
    return oc;
}

}  // namespace

std::string LabelFamily::str() const {
    const int r = base.m[free_index] - stride;
    std::string s;
    for (std::size_t j = 0; j < base.m.size(); ++j) {
        std::string coef;
        if (j == free_index) {
            std::string a = stride == 1 ? "a" : std::to_string(stride) + "a";
            if (r == 0) coef = a;
            else coef = "(" + a + (r > 0 ? "+" : "-") + std::to_string(r > 0 ? r : -r) + ")";
        } else if (base.m[j] == 0) {
            continue;
        } else if (base.m[j] != 1) {
            coef = std::to_string(base.m[j]);
        }
        if (!s.empty()) s += "+";
        s += coef + "ω" + std::to_string(j + 1);
    }
    return s + " (a≥1)";
}

IrrepLabel LabelFamily::member(int s) const {
    IrrepLabel l = base;
    l.m[free_index] += s * stride;
    return l;
}

std::vector<IrrepLabel> ClassificationResult::finite_labels() const {
    std::vector<IrrepLabel> out;
    for (const auto& h : finite_hits) out.push_back(h.label);
    return out;
}

std::vector<FreeDirection> free_directions(const DomainSpec& d) {
    const std::size_t r = d.rank();
    const IrrepLabel zero(std::vector<int>(r, 0));
    const Rational mu0 = mu(d, zero);
    std::vector<FreeDirection> out;
    for (std::size_t i = 0; i < r; ++i) {
        const IrrepLabel w = unit(r, i);
        if (mu(d, w) - mu0 < Rational(0) || mu(d, tau_of(d, w)) - mu0 < Rational(0)) continue;
        const Rational e1 = d.grading_omega[i];
        const Rational e2 = d.grading_omega[d.tau[i]];
        int t = 1;
        while (!(e1 * Rational(t)).is_even_integer() || !(e2 * Rational(t)).is_even_integer()) ++t;
        out.push_back({i, t});
    }
    return out;
}

ClassificationResult classify_domain(const DomainSpec& d, Bounds bounds) {
    if (bounds.coeff_bound < 1 || bounds.level_bound < 1)
        throw RangeError("classification bounds must be >= 1 (got coeff " + std::to_string(bounds.coeff_bound) +
                         ", level " + std::to_string(bounds.level_bound) + ")");
    const std::size_t r = d.rank();
    std::vector<Hit> hits;
    for_each_label(r, bounds.coeff_bound, [&](const std::vector<int>& m) {
        // Cheap screen on E(λ), E(τλ) before the full computation.
        Rational e, et;
        for (std::size_t i = 0; i < r; ++i) {
            if (m[i] == 0) continue;
            e += d.grading_omega[i] * Rational(m[i]);
            et += d.grading_omega[d.tau[i]] * Rational(m[i]);
        }
        if (!e.is_odd_integer()) return;
        const Rational level = std::max(-e, -et);
        if (level <= Rational(1) || level > Rational(bounds.level_bound)) return;
        IrrepLabel l(m);
        MuReport rep = has_infinitesimal_nf(d, l);
        if (is_hit(rep, bounds)) hits.push_back({std::move(l), rep});
    });
    return group_hits(d, bounds, std::move(hits));
}

std::vector<std::string> intro_domains(int max_rank) {
    std::vector<std::string> out;
    for (int p = 2; 2 * p - 1 <= max_rank; ++p) out.push_back("I " + std::to_string(p) + " " + std::to_string(p));
    for (int n = 4; n <= max_rank; n += 2) out.push_back("II " + std::to_string(n));
    for (int n = 1; n <= max_rank; ++n) out.push_back("III " + std::to_string(n));
    for (int n = 3; n <= max_rank; ++n) out.push_back("IV " + std::to_string(2 * n - 1));
    for (int n = 4; n <= max_rank; ++n) out.push_back("IV " + std::to_string(2 * n - 2));
    out.push_back("EVII");
    return out;
}

std::vector<ClassificationResult> reproduce_intro_list(Bounds bounds, int max_rank) {
    std::vector<ClassificationResult> out;
    for (const auto& name : intro_domains(max_rank)) out.push_back(classify_domain(build_domain(name), bounds));
    return out;
}

namespace {

AbelianScenario finish_scenario(AbelianScenario s) {
    s.verdict = s.filtered.empty() ? VerdictKind::NoReducedNF : VerdictKind::HasInfinitesimalNF;
    return s;
}

}  // namespace

AbelianScenario scenario_quaternionic(int n, Bounds bounds) {
    if (n < 4) throw RangeError("quaternionic scenario needs n >= 4, got " + std::to_string(n));
    const DomainSpec d = build_domain(DomainKind::II, n);
    AbelianScenario s;
    s.scenario = "quaternionic";
    s.parameter = n;
    s.raw = classify_domain(d, bounds);
    if (n != 6) {
        s.filtered = s.raw;
        return finish_scenario(std::move(s));
    }
    const IrrepLabel w1 = unit(d.rank(), 0);
    const WedgeTable wedges = odd_wedges(d, {w1, w1});
    std::vector<Hit> kept;
    for (const auto& h : s.raw.all_hits) {
        s.occurrence.push_back(check_occurrence(d, wedges, h.label));
        if (s.occurrence.back().occurs()) kept.push_back(h);
        else s.filtered_out.push_back(h.label);
    }
    s.filtered = group_hits(d, bounds, std::move(kept));
    return finish_scenario(std::move(s));
}

AbelianScenario scenario_weil(int p, Bounds bounds) {
    if (p < 2) throw RangeError("Weil scenario needs p >= 2, got " + std::to_string(p));
    AbelianScenario s;
    s.scenario = "weil";
    s.parameter = p;
    s.raw = classify_domain(build_domain(DomainKind::I, p, p), bounds);
    s.filtered = s.raw;
    return finish_scenario(std::move(s));
}

IrrepLabel k_weil_constituent(int n, int p, int d, int j) {
    const Rational a(2 * p - n - 1, n + 1);
    return fundamental_sum(static_cast<std::size_t>(n), {j, n - 2 * d + j}, -a * Rational(2 * d + 1 - 2 * j));
}

Rational k_weil_closed_form(int n, int p, int d, int j) {
    if (p == j || p == n - 2 * d + j) return Rational(1 - d);
    if (p < j) return Rational(j - d - p);
    if (p < n - 2 * d + j) return Rational(-d);
    return Rational(p + d - j - n);
}

std::vector<int> k_weil_verdict_degrees(int n, int p) {
    if (p <= 3) return odd_range(3, 2 * n - 1);
    if (2 * p < n + 1) return odd_range(2 * p - 1, 2 * n - 2 * p + 3);
    return {};
}

int KWeilReport::mismatches() const {
    return static_cast<int>(std::count_if(terms.begin(), terms.end(), [](const KWeilTerm& t) { return !t.matches(); }));
}

bool KWeilReport::computed_within_verdict() const {
    return std::includes(verdict_degrees.begin(), verdict_degrees.end(), computed_degrees.begin(), computed_degrees.end());
}

KWeilReport scenario_k_weil(int n, int p) {
    if (n < 2 || p < 1 || p > (n + 1) / 2)
        throw RangeError("k-Weil scenario needs n >= 2 and 1 <= p <= floor((n+1)/2), got n=" + std::to_string(n) +
                         ", p=" + std::to_string(p));
    const DomainSpec dom = build_domain(DomainKind::I, p, n + 1 - p);
    KWeilReport r;
    r.n = n;
    r.p = p;
    r.a = Rational(2 * p - n - 1, n + 1);
    std::set<int> degrees;
    for (int d = 1; 2 * d <= n; ++d)
        for (int j = 0; j <= 2 * d + 1; ++j) {
            KWeilTerm t;
            t.d = d;
            t.j = j;
            t.label = k_weil_constituent(n, p, d, j);
            t.report = has_infinitesimal_nf(dom, t.label);
            t.mu_closed_form = k_weil_closed_form(n, p, d, j);
            if (t.report.placeable && t.report.level > Rational(1) && t.report.mu_lambda >= Rational(0)) {
                degrees.insert(2 * d + 1);
                degrees.insert(2 * n + 1 - 2 * d);
            }
            r.terms.push_back(std::move(t));
        }
    r.computed_degrees.assign(degrees.begin(), degrees.end());
    r.verdict_degrees = k_weil_verdict_degrees(n, p);
    if (p <= 3) r.degree_rule = "all possible degrees (3 thru 2n-1)";
    else if (2 * p < n + 1) r.degree_rule = "degrees 2p-1 thru 2n-2p+3";
    else r.degree_rule = "no degrees";
    return r;
}

WedgeIdentityCheck k_weil_wedge_identity(int n, int p, int d) {
    WedgeIdentityCheck c{n, p, d, false, false, {}};
    const DomainSpec dom = build_domain(DomainKind::I, p, n + 1 - p);
    const Rational a(2 * p - n - 1, n + 1);
    const std::size_t r = static_cast<std::size_t>(n);
    const std::vector<IrrepLabel> h{fundamental_sum(r, {1}, a), fundamental_sum(r, {n}, -a)};
    try {
        Decomposition lhs = wedge_of_sum(*dom.rs, h, 2 * d + 1);
        for (const auto& [l, mult] : wedge_of_sum(*dom.rs, h, 2 * d - 1)) {
            lhs[l] -= mult;
            if (lhs[l] == 0) lhs.erase(l);
        }
        Decomposition rhs;
        for (int j = 0; j <= 2 * d + 1; ++j) rhs[k_weil_constituent(n, p, d, j)] += 1;
        c.checked = true;
        c.holds = lhs == rhs;
    } catch (const GuardError& e) {
        c.note = e.what();
    }
    return c;
}

SpinReport scenario_spin(int m, Bounds bounds) {
    if (m < 5) throw RangeError("spin scenario needs m >= 5, got " + std::to_string(m));
    const DomainSpec d = build_domain(DomainKind::IV, m);
    const std::size_t n = d.rank();
    SpinReport s;
    s.m = m;
    s.classification = classify_domain(d, bounds);
    std::vector<IrrepLabel> spin{unit(n, n - 1)};
    if (m % 2 == 0) spin.insert(spin.begin(), unit(n, n - 2));
    std::vector<IrrepLabel> targets;
    for (const auto& sp : spin) {
        IrrepLabel base = sp;
        base.m[0] += 1;
        targets.push_back(base);
        s.expected_families.push_back(LabelFamily{base, 0, 1});
    }
    s.expected_found = std::all_of(s.expected_families.begin(), s.expected_families.end(), [&](const LabelFamily& f) {
        return std::find(s.classification.families.begin(), s.classification.families.end(), f) !=
               s.classification.families.end();
    });
    try {
        Decomposition cube;
        for (const auto& sp : spin) cube[sp] += 1;
        for (int step = 0; step < 2; ++step) {
            Decomposition next;
            for (const auto& sp : spin)
                for (const auto& [l, mult] : tensor_decompose(*d.rs, cube, sp)) next[l] += mult;
            cube = std::move(next);
        }
        s.occurrence = std::all_of(targets.begin(), targets.end(), [&](const IrrepLabel& t) { return cube.count(t) > 0; });
    } catch (const GuardError& e) {
        s.occurrence_note = e.what();
    }
    return s;
}

bool CyTwistReport::consistent() const {
    return nonneg_k == expected_nonneg_k &&
           std::all_of(rows.begin(), rows.end(), [](const CyTwistRow& r) { return r.matches(); });
}

CyTwistReport scenario_cy_twist(const DomainSpec& d, int k_max) {
    const bool supported = (d.kind == DomainKind::I && d.p != d.q) || (d.kind == DomainKind::II && d.n % 2 == 1) ||
                           d.kind == DomainKind::EIII;
    if (!supported)
        throw RangeError("Calabi-Yau twist scenario needs I(p,q) with p != q, II(n) with n odd, or EIII; got " + d.name());
    if (k_max < 1) throw RangeError("k_max must be >= 1");
    CyTwistReport rep;
    rep.domain = d.name();
    if (d.kind == DomainKind::I) rep.nonneg_rule = "p = 1 or 2: all k; otherwise none";
    else if (d.kind == DomainKind::II) rep.nonneg_rule = "(m,k) = (2,1)";
    else rep.nonneg_rule = "k = 1";
    for (int k = 1; k <= k_max; ++k) {
        CyTwistRow row;
        row.k = k;
        const IrrepLabel kw = unit(d.rank(), d.special, k);
        const Rational e = E_of(d, kw);
        const Rational et = E_of(d, tau_of(d, kw));
        row.a = (e - et) / Rational(2) + epsilon((e + et) / Rational(2));
        row.label = IrrepLabel(kw.m, row.a);
        row.report = has_infinitesimal_nf(d, row.label);
        if (d.kind == DomainKind::I) {
            const int p = d.p, n = d.p + d.q - 1;
            row.a_closed_form = Rational(2 * k * p * p, n + 1) - Rational(k * p) + epsilon(Rational(k * p));
            row.mu_closed_form = Rational(k - floor_div2(k * p + 1));
        } else if (d.kind == DomainKind::II) {
            const int mm = (d.n - 1) / 2;
            row.a_closed_form = Rational(-k, 2) + epsilon(Rational(mm * k));
            row.mu_closed_form = Rational(1 - floor_div2(mm * k + 1));
        } else {
            row.a_closed_form = Rational(-2 * k, 3) + Rational(1);
            row.mu_closed_form = Rational(1 - k);
        }
        if (row.report.placeable && row.report.mu_lambda >= Rational(0)) rep.nonneg_k.push_back(k);
        if (row.mu_closed_form >= Rational(0)) rep.expected_nonneg_k.push_back(k);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace knf
