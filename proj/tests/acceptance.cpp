// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "knf/classify.hpp"
#include "knf/error.hpp"

using namespace knf;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << id << ". " << title;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!ok) ++failures;
}

IrrepLabel L(std::vector<int> m) { return IrrepLabel(std::move(m)); }

IrrepLabel fund(std::size_t rank, std::initializer_list<std::pair<int, int>> terms) {
    std::vector<int> m(rank, 0);
    for (auto [i, c] : terms) m[static_cast<std::size_t>(i - 1)] += c;
    return IrrepLabel(std::move(m));
}

// Family {base + s·stride·ω_free}, 1-based free index.
LabelFamily fam(IrrepLabel base, int free, int stride = 1) {
    return LabelFamily{std::move(base), static_cast<std::size_t>(free - 1), stride};
}

std::string join(const std::vector<std::string>& v, std::size_t limit = 6) {
    std::string s;
    for (std::size_t i = 0; i < v.size() && i < limit; ++i) s += (i ? "; " : "") + v[i];
    if (v.size() > limit) s += "; ... (" + std::to_string(v.size()) + " total)";
    return s;
}

std::string describe(const ClassificationResult& r) {
    std::string s = r.domain + " {";
    bool first = true;
    for (const auto& h : r.finite_hits) {
        s += (first ? "" : ", ") + h.label.str();
        first = false;
    }
    for (const auto& f : r.families) {
        s += (first ? "" : ", ") + f.str();
        first = false;
    }
    return s + "}";
}

bool same(const ClassificationResult& r, std::set<IrrepLabel> finite, std::set<LabelFamily> families) {
    const auto labels = r.finite_labels();
    return std::set<IrrepLabel>(labels.begin(), labels.end()) == finite &&
           std::set<LabelFamily>(r.families.begin(), r.families.end()) == families;
}

void for_each_label(std::size_t rank, int bound, const std::function<void(const IrrepLabel&)>& fn) {
    std::vector<int> m(rank, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == rank) return fn(IrrepLabel(m));
        for (int c = 0; c <= left; ++c) {
            m[i] = c;
            rec(i + 1, left - c);
        }
        m[i] = 0;
    };
    rec(0, bound);
}

std::vector<std::string> domains_up_to_rank(int max_rank) {
    std::vector<std::string> out;
    for (int n = 2; n <= max_rank; ++n)
        for (int p = 1; p <= (n + 1) / 2; ++p) out.push_back("I " + std::to_string(p) + " " + std::to_string(n + 1 - p));
    for (int n = 4; n <= max_rank; ++n) out.push_back("II " + std::to_string(n));
    for (int n = 1; n <= max_rank; ++n) out.push_back("III " + std::to_string(n));
    for (int n = 3; n <= max_rank; ++n) out.push_back("IV " + std::to_string(2 * n - 1));
    for (int n = 4; n <= max_rank; ++n) out.push_back("IV " + std::to_string(2 * n - 2));
    if (max_rank >= 6) out.push_back("EIII");
    if (max_rank >= 7) out.push_back("EVII");
    return out;
}

void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto results = reproduce_intro_list();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::set<std::pair<std::string, IrrepLabel>> finite, exp_finite{
        {"I 3 3", fund(5, {{3, 1}})}, {"II 6", fund(6, {{6, 1}})}, {"III 3", fund(3, {{3, 1}})}, {"EVII", fund(7, {{7, 1}})}};
    std::set<std::pair<std::string, LabelFamily>> fams, exp_fams{
        {"I 2 2", fam(fund(3, {{1, 1}, {2, 1}}), 2)}, {"I 2 2", fam(fund(3, {{3, 1}, {2, 1}}), 2)},
        {"II 4", fam(fund(4, {{1, 1}, {4, 1}}), 4)},  {"II 4", fam(fund(4, {{3, 1}, {4, 1}}), 4)},
        {"III 1", fam(L({3}), 1, 2)},                 {"III 2", fam(L({1, 1}), 2)}};
    for (std::size_t n = 3; n <= 6; ++n)
        exp_fams.insert({"IV " + std::to_string(2 * n - 1), fam(fund(n, {{1, 1}, {int(n), 1}}), 1)});
    for (std::size_t n = 4; n <= 6; ++n) {
        exp_fams.insert({"IV " + std::to_string(2 * n - 2), fam(fund(n, {{1, 1}, {int(n) - 1, 1}}), 1)});
        exp_fams.insert({"IV " + std::to_string(2 * n - 2), fam(fund(n, {{1, 1}, {int(n), 1}}), 1)});
    }
    std::vector<std::string> diffs;
    for (const auto& r : results) {
        for (const auto& h : r.finite_hits) finite.insert({r.domain, h.label});
        for (const auto& f : r.families) fams.insert({r.domain, f});
    }
    for (const auto& x : finite)
        if (!exp_finite.count(x)) diffs.push_back("extra " + x.first + " " + x.second.str());
    for (const auto& x : exp_finite)
        if (!finite.count(x)) diffs.push_back("missing " + x.first + " " + x.second.str());
    for (const auto& x : fams)
        if (!exp_fams.count(x)) diffs.push_back("extra " + x.first + " " + x.second.str());
    for (const auto& x : exp_fams)
        if (!fams.count(x)) diffs.push_back("missing " + x.first + " " + x.second.str());
    std::ostringstream d;
    d << results.size() << " tube domains, " << finite.size() << " pairs + " << fams.size() << " families in " << secs
      << " s; flagged: II 4 reference form ω1+aω3 / ω1+aω4, computed ω1+aω4 / ω3+aω4";
    if (!diffs.empty()) d << "; " << join(diffs);
    report(1, "Intro classification list", diffs.empty(), d.str());
}

void criterion2() {
    std::vector<std::string> bad;
    for (int n = 5; n <= 8; ++n) {
        auto r = scenario_quaternionic(n).filtered;
        if (!r.empty()) bad.push_back("II " + std::to_string(n) + " not empty: " + describe(r));
    }
    auto ii4 = classify_domain(build_domain("II 4"));
    if (!same(ii4, {}, {fam(fund(4, {{1, 1}, {4, 1}}), 4), fam(fund(4, {{3, 1}, {4, 1}}), 4)}))
        bad.push_back("II 4: " + describe(ii4));
    auto q6 = scenario_quaternionic(6);
    if (!same(q6.raw, {fund(6, {{6, 1}})}, {})) bad.push_back("II 6 raw: " + describe(q6.raw));
    if (!q6.filtered.empty() || q6.filtered_out != std::vector<IrrepLabel>{fund(6, {{6, 1}})})
        bad.push_back("II 6 filter kept " + describe(q6.filtered));
    report(2, "II(n) classification", bad.empty(),
           bad.empty() ? "II 4 two families; II 5..8 empty; II 6 raw {ω6} removed by the occurrence filter" : join(bad));
}

void criterion3() {
    std::vector<std::string> bad;
    for (int p = 4; p <= 6; ++p) {
        auto r = classify_domain(build_domain(DomainKind::I, p, p));
        if (!r.empty()) bad.push_back(describe(r));
    }
    auto i22 = classify_domain(build_domain("I 2 2"));
    if (!same(i22, {}, {fam(fund(3, {{1, 1}, {2, 1}}), 2), fam(fund(3, {{3, 1}, {2, 1}}), 2)})) bad.push_back(describe(i22));
    auto i33 = classify_domain(build_domain("I 3 3"));
    if (!same(i33, {fund(5, {{3, 1}})}, {})) bad.push_back(describe(i33));
    report(3, "I(p,p) classification", bad.empty(),
           bad.empty() ? "p=2 two conjugate families, p=3 {ω3}, p=4..6 empty" : join(bad));
}

void criterion4() {
    std::vector<std::string> bad;
    auto r1 = classify_domain(build_domain("III 1"));
    if (!same(r1, {}, {fam(L({3}), 1, 2)})) bad.push_back(describe(r1));
    auto r2 = classify_domain(build_domain("III 2"));
    if (!same(r2, {}, {fam(L({1, 1}), 2)})) bad.push_back(describe(r2));
    auto r3 = classify_domain(build_domain("III 3"));
    if (!same(r3, {L({0, 0, 1})}, {})) bad.push_back(describe(r3));
    for (int n = 4; n <= 8; ++n) {
        auto r = classify_domain(build_domain(DomainKind::III, n));
        if (!r.empty()) bad.push_back(describe(r));
    }
    report(4, "III(n) solution sets", bad.empty(),
           bad.empty() ? "(2a+1)ω1, ω1+aω2, ω3; n=4..8 empty" : join(bad));
}

void criterion5() {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> dist(0, 5);
    auto rnd = [&](int r) {
        std::vector<int> m(static_cast<std::size_t>(r));
        for (auto& c : m) c = dist(rng);
        return m;
    };
    using Formula = std::function<Rational(const std::vector<int>&)>;
    struct Case {
        std::string domain;
        int rank;
        Formula mu;
    };
    std::vector<Case> cases;
    for (int n = 1; n <= 8; ++n)
        cases.push_back({"III " + std::to_string(n), n, [n](const std::vector<int>& m) {
                             Rational r = Rational(1, 2) + Rational(2 - n, 2) * m[n - 1];
                             for (int i = 1; i < n; ++i) r -= Rational(i * m[i - 1], 2);
                             return r;
                         }});
    cases.push_back({"EVII", 7, [](const std::vector<int>& m) {
                         return -Rational(m[0]) - Rational(3, 2) * m[1] - Rational(2 * m[2]) - Rational(3 * m[3]) -
                                Rational(5, 2) * m[4] - Rational(2 * m[5]) - Rational(1, 2) * m[6] + Rational(1, 2);
                     }});
    for (int n = 4; n <= 8; ++n)
        cases.push_back({"II " + std::to_string(n), n, [n](const std::vector<int>& m) {
                             Rational r = Rational(1, 2) - Rational(n - 2, 4) * m[n - 2] - Rational(n - 4, 4) * m[n - 1];
                             for (int i = 1; i <= n - 2; ++i) r -= Rational(i * m[i - 1], 2);
                             return r;
                         }});
    for (int p = 2; p <= 4; ++p)
        cases.push_back({"I " + std::to_string(p) + " " + std::to_string(p), 2 * p - 1, [p](const std::vector<int>& m) {
                             Rational r = Rational(1, 2) - Rational(p - 2, 2) * m[p - 1];
                             for (int i = 1; i < p; ++i) r -= Rational(i * m[i - 1], 2);
                             for (int i = p + 1; i <= 2 * p - 1; ++i) r -= Rational(2 * p - i, 2) * m[i - 1];
                             return r;
                         }});
    for (int n = 3; n <= 8; ++n)
        cases.push_back({"IV " + std::to_string(2 * n - 1), n, [n](const std::vector<int>& m) {
                             Rational r = Rational(1, 2) - Rational(m[n - 1], 2);
                             for (int i = 2; i <= n - 1; ++i) r -= Rational(m[i - 1]);
                             return r;
                         }});
    for (int n = 4; n <= 8; ++n)
        cases.push_back({"IV " + std::to_string(2 * n - 2), n, [n](const std::vector<int>& m) {
                             Rational r = Rational(1, 2) - Rational(m[n - 2] + m[n - 1], 2);
                             for (int i = 2; i <= n - 2; ++i) r -= Rational(m[i - 1]);
                             return r;
                         }});
    std::vector<std::string> bad;
    int checked = 0;
    for (const auto& c : cases) {
        const auto d = build_domain(c.domain);
        for (int t = 0; t < 100; ++t) {
            const auto m = rnd(c.rank);
            const Rational generic = mu(d, IrrepLabel(m)), closed = c.mu(m);
            ++checked;
            if (generic != closed) bad.push_back(c.domain + " " + IrrepLabel(m).str() + ": " + generic.str() + " vs " + closed.str());
        }
    }
    report(5, "μ closed-form oracle", bad.empty(),
           std::to_string(cases.size()) + " (family, rank) cases, " + std::to_string(checked) + " labels" +
               (bad.empty() ? "" : "; " + join(bad)));
}

void criterion6() {
    std::vector<std::string> mu_bad, verdict_bad;
    int terms = 0;
    for (int n = 2; n <= 9; ++n)
        for (int p = 1; p <= (n + 1) / 2; ++p) {
            const auto r = scenario_k_weil(n, p);
            for (const auto& t : r.terms) {
                ++terms;
                if (!t.matches())
                    mu_bad.push_back("(n,p,d,j)=(" + std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(t.d) +
                                     "," + std::to_string(t.j) + ") μ=" + t.report.mu_lambda.str() +
                                     " closed form " + t.mu_closed_form.str());
            }
            if (r.verdict_degrees != k_weil_verdict_degrees(n, p) || !r.computed_within_verdict())
                verdict_bad.push_back("(n,p)=(" + std::to_string(n) + "," + std::to_string(p) + ")");
        }
    std::string detail = std::to_string(terms) + " constituents; degree verdicts " +
                         (verdict_bad.empty() ? "all match the three-way rule" : "differ at " + join(verdict_bad));
    if (!mu_bad.empty()) detail += "; closed form differs at " + std::to_string(mu_bad.size()) + ": " + join(mu_bad, 10);
    report(6, "k-Weil closed form and degree verdict", mu_bad.empty() && verdict_bad.empty(), detail);
}

void criterion7() {
    std::vector<std::string> bad;
    std::vector<std::string> names;
    for (int n = 2; n <= 7; ++n)
        for (int p = 1; 2 * p < n + 1; ++p) names.push_back("I " + std::to_string(p) + " " + std::to_string(n + 1 - p));
    for (int m = 2; m <= 4; ++m) names.push_back("II " + std::to_string(2 * m + 1));
    names.push_back("EIII");
    for (const auto& name : names) {
        const auto d = build_domain(name);
        const auto r = scenario_cy_twist(d, 6);
        for (const auto& row : r.rows)
            if (!row.matches())
                bad.push_back(name + " k=" + std::to_string(row.k) + ": μ=" + row.report.mu_lambda.str() + " closed form " +
                              row.mu_closed_form.str());
        // Reference loci: p = 1 or 2 (I), (m,k) = (2,1) (II_{2m+1}), k = 1 (EIII).
        std::vector<int> locus;
        for (int k = 1; k <= 6; ++k) {
            bool in = false;
            if (d.kind == DomainKind::I) in = d.p <= 2;
            else if (d.kind == DomainKind::II) in = (d.n - 1) / 2 == 2 && k == 1;
            else in = k == 1;
            if (in) locus.push_back(k);
        }
        if (r.nonneg_k != locus) bad.push_back(name + " non-negativity locus differs");
    }
    report(7, "Calabi-Yau twists", bad.empty(),
           std::to_string(names.size()) + " domains, k ≤ 6" + (bad.empty() ? "" : "; " + join(bad, 8)));
}

void criterion8() {
    std::vector<std::string> bad;
    const auto d4 = parse_root_system("D4");
    const auto w = wedge_decompose(*d4, L({1, 0, 0, 0}), 3);
    if (w != Decomposition{{L({0, 0, 1, 1}), 1}} || total_dimension(*d4, w) != 56) bad.push_back("D4 ⋀³ω1");
    const auto b3 = parse_root_system("B3");
    const auto t = tensor_decompose(*b3, L({0, 0, 1}), L({0, 0, 1}));
    if (t != Decomposition{{L({0, 0, 2}), 1}, {L({0, 1, 0}), 1}, {L({1, 0, 0}), 1}, {L({0, 0, 0}), 1}})
        bad.push_back("B3 ω3⊗ω3");
    int checked = 0, skipped = 0;
    for (int n = 2; n <= 7; ++n)
        for (int p = 1; p <= (n + 1) / 2; ++p)
            for (int d = 1; 2 * d <= n; ++d) {
                const auto c = k_weil_wedge_identity(n, p, d);
                if (!c.checked) {
                    ++skipped;
                    continue;
                }
                ++checked;
                if (!c.holds) bad.push_back("exterior identity (n,p,d)=(" + std::to_string(n) + "," + std::to_string(p) + "," +
                                            std::to_string(d) + ")");
            }
    report(8, "Branching identities", bad.empty(),
           "⋀³V^{ω1}=V^{ω3+ω4} (56), (V^{ω3})^{⊗2} on B3, exterior identity at " + std::to_string(checked) +
               " (n,p,d), " + std::to_string(skipped) + " beyond the dimension guard" + (bad.empty() ? "" : "; " + join(bad)));
}

void criterion9() {
    std::vector<std::string> bad;
    int checked = 0;
    for (const auto& name : domains_up_to_rank(4)) {
        const auto d = build_domain(name);
        for_each_label(d.rank(), 2, [&](const IrrepLabel& l) {
            ++checked;
            if (!euler_character_check(d, l)) bad.push_back(name + " " + l.str());
        });
    }
    const auto t = cohomology(build_domain("III 3"), L({0, 0, 1}), 2);
    const bool h2 = t.nonzero(2, 1);
    if (!h2) bad.push_back("ℋ²(1) vanishes for III 3, ω3");
    report(9, "Kostant Euler-characteristic oracle", bad.empty(),
           std::to_string(checked) + " (domain, λ) pairs; ℋ²(1)≠0 for (III 3, ω3)" + (bad.empty() ? "" : "; " + join(bad)));
}

int table_dim(const DomainSpec& d) {
    switch (d.kind) {
        case DomainKind::I: return d.p * d.q;
        case DomainKind::II: return d.n * (d.n - 1) / 2;
        case DomainKind::III: return d.n * (d.n + 1) / 2;
        case DomainKind::IV: return d.n;
        case DomainKind::EIII: return 16;
        case DomainKind::EVII: return 27;
    }
    return -1;
}

void criterion10() {
    std::vector<std::string> bad;
    int pairs = 0, hodge = 0, hodge_skipped = 0;
    for (const auto& name : domains_up_to_rank(8)) {
        const auto d = build_domain(name);
        if (d.dim_D != table_dim(d)) bad.push_back(name + " dim_D");
        const auto w0 = enumerate_W0(d, 1);
        if (w0.size() != 2 || !w0[0].word().empty() || w0[1].word() != std::vector<std::size_t>{d.special})
            bad.push_back(name + " W⁰(≤1)");
        for_each_label(d.rank(), d.rank() >= 7 ? 1 : 2, [&](const IrrepLabel& l) {
            if (!placeable(d, l)) return;
            ++pairs;
            for (const auto& e : cohomology(d, l, 2).entries) {
                if (!e.dominant0) bad.push_back(name + " " + l.str() + " w·λ not Δ₀⁺-dominant");
                if (e.k == 0 && e.j >= 0) bad.push_back(name + " " + l.str() + " ℋ⁰(j≥0)≠0");
            }
            try {
                const auto h = hodge_numbers(d, l);
                const auto dim = weyl_dim(*d.rs, l.m);
                const int copies = reality_type(d, l) == RealityType::Real ? 1 : 2;
                ++hodge;
                if (h.total() != copies * dim) bad.push_back(name + " " + l.str() + " Hodge mass");
            } catch (const GuardError&) {
                ++hodge_skipped;
            }
        });
    }
    if (hodge_numbers(build_domain("III 3"), L({0, 0, 1})).numbers() != std::vector<std::int64_t>{1, 6, 6, 1})
        bad.push_back("III 3 ω3 Hodge numbers");
    if (hodge_numbers(build_domain("I 3 3"), L({0, 0, 1, 0, 0})).numbers() != std::vector<std::int64_t>{1, 9, 9, 1})
        bad.push_back("I 3 3 ω3 Hodge numbers");
    report(10, "Structural properties", bad.empty(),
           std::to_string(domains_up_to_rank(8).size()) + " domains, " + std::to_string(pairs) + " placeable λ, " +
               std::to_string(hodge) + " Hodge masses" +
               (hodge_skipped ? " (" + std::to_string(hodge_skipped) + " beyond the dimension guard)" : "") +
               (bad.empty() ? "" : "; " + join(bad)));
}

}  // namespace

int main() {
    const std::vector<std::function<void()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                      criterion6, criterion7, criterion8, criterion9, criterion10};
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            criteria[i]();
        } catch (const std::exception& e) {
            report(static_cast<int>(i + 1), "criterion raised", false, e.what());
        }
    }
    std::cout << (10 - failures) << "/10 criteria pass" << std::endl;
    return failures == 0 ? 0 : 1;
}
