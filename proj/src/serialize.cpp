#include "knf/serialize.hpp"

#include <sstream>

#include "knf/error.hpp"

namespace knf {

namespace {

Json one_based(const std::vector<std::size_t>& v) {
    Json out = Json::array();
    for (auto x : v) out.push_back(x + 1);
    return out;
}

Json rationals_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(rational_json(r));
    return out;
}

Json labels_json(const std::vector<IrrepLabel>& v) {
    Json out = Json::array();
    for (const auto& l : v) out.push_back(label_json(l));
    return out;
}

std::string kind_name(DomainKind k) {
    switch (k) {
        case DomainKind::I: return "I";
        case DomainKind::II: return "II";
        case DomainKind::III: return "III";
        case DomainKind::IV: return "IV";
        case DomainKind::EIII: return "EIII";
        case DomainKind::EVII: return "EVII";
    }
    return "?";
}

Json hit_json(const Hit& h) { return {{"label", label_json(h.label)}, {"report", mu_report_json(h.report)}}; }

Hit hit_from_json(const Json& j) { return {label_from_json(j.at("label")), mu_report_from_json(j.at("report"))}; }

bool is_scalar_array(const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j)
        if (e.is_structured()) return false;
    return true;
}

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

std::string scalar_array_text(const Json& j) {
    std::string s = "[";
    bool first = true;
    for (const auto& e : j) {
        if (!first) s += ", ";
        s += scalar_text(e);
        first = false;
    }
    return s + "]";
}

void render(std::ostringstream& os, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, v] : j.items()) {
            if (!v.is_structured()) os << pad << key << ": " << scalar_text(v) << "\n";
            else if (is_scalar_array(v)) os << pad << key << ": " << scalar_array_text(v) << "\n";
            else if (v.empty()) os << pad << key << ": " << (v.is_array() ? "[]" : "{}") << "\n";
            else {
                os << pad << key << ":\n";
                render(os, v, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (!v.is_structured()) os << pad << "- " << scalar_text(v) << "\n";
            else if (is_scalar_array(v)) os << pad << "- " << scalar_array_text(v) << "\n";
            else {
                os << pad << "-\n";
                render(os, v, indent + 2);
            }
        }
    } else {
        os << pad << scalar_text(j) << "\n";
    }
}

}  // namespace

Json rational_json(const Rational& r) { return std::to_string(r.num()) + "/" + std::to_string(r.den()); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    return Rational::parse(j.get<std::string>());
}

Json label_json(const IrrepLabel& l) {
    return {{"coefficients", l.m}, {"twist", rational_json(l.twist_a)}, {"text", l.str()}};
}

IrrepLabel label_from_json(const Json& j) {
    if (j.is_array()) return IrrepLabel(j.get<std::vector<int>>());
    Rational a;
    if (j.contains("twist")) a = rational_from_json(j.at("twist"));
    return IrrepLabel(j.at("coefficients").get<std::vector<int>>(), a);
}

Json domain_json(const DomainSpec& d) {
    Json tau = one_based(d.tau);
    return {{"name", d.name()},
            {"type", kind_name(d.kind)},
            {"root_system", d.rs->name()},
            {"rank", d.rank()},
            {"special_node", d.special + 1},
            {"tube_type", d.tube_type},
            {"dim_D", d.dim_D},
            {"positive_roots", d.rs->positive_roots().size()},
            {"noncompact_positive_roots", d.noncompact_positive_roots().size()},
            {"E_of_omega", rationals_json(d.grading_omega)},
            {"tau", tau}};
}

Json mu_report_json(const MuReport& r) {
    return {{"mu_lambda", rational_json(r.mu_lambda)},
            {"mu_tau_lambda", rational_json(r.mu_tau_lambda)},
            {"placeable", r.placeable},
            {"has_inf_nf", r.has_inf_nf},
            {"level", rational_json(r.level)}};
}

MuReport mu_report_from_json(const Json& j) {
    MuReport r;
    r.mu_lambda = rational_from_json(j.at("mu_lambda"));
    r.mu_tau_lambda = rational_from_json(j.at("mu_tau_lambda"));
    r.placeable = j.at("placeable").get<bool>();
    r.has_inf_nf = j.at("has_inf_nf").get<bool>();
    r.level = rational_from_json(j.at("level"));
    return r;
}

Json invariant_json(const DomainSpec& d, const IrrepLabel& l) {
    check_label(d, l);
    const IrrepLabel t = tau_of(d, l);
    Json out{{"domain", d.name()},
             {"label", label_json(l)},
             {"tau_label", label_json(t)},
             {"E", rational_json(E_of(d, l))},
             {"E_tau", rational_json(E_of(d, t))},
             {"reality", reality_name(reality_type(d, l))},
             {"complex_level", rational_json(complex_level(d, l))},
             {"mu", mu_report_json(has_infinitesimal_nf(d, l))}};
    if (!placeable(d, l)) {
        out["hodge"] = nullptr;
        out["verdict"] = {{"kind", verdict_name(VerdictKind::NoReducedNF)}, {"placeable", false}, {"witnesses", Json::array()}};
        return out;
    }
    try {
        const HodgeGrading h = hodge_numbers(d, l);
        out["hodge"] = {{"level", h.level}, {"numbers", h.numbers()}, {"total", h.total()}};
    } catch (const GuardError& e) {
        out["hodge"] = {{"skipped", e.what()}};
    }
    const Verdict v = vanishing_verdict(d, l);
    Json w = Json::array();
    for (const auto& x : v.witnesses) w.push_back({{"summand", x.from_tau ? "tau" : "lambda"}, {"k", x.k}, {"j", x.j}});
    out["verdict"] = {{"kind", verdict_name(v.kind)}, {"placeable", v.placeable}, {"witnesses", w}};
    return out;
}

Json cohomology_json(const CohomologyTable& t) {
    Json entries = Json::array();
    for (const auto& e : t.entries) {
        entries.push_back({{"k", e.k},
                           {"j", e.j},
                           {"word", one_based(e.w.word())},
                           {"xi_omega", e.xi_omega},
                           {"xi", rationals_json(e.xi.coords())},
                           {"shifted_E", rational_json(e.shifted_E)},
                           {"dominant_for_levi", e.dominant0},
                           {"dim", e.dim0}});
    }
    Json h1 = Json::array();
    for (auto j : t.nonzero_H1_j()) h1.push_back(j);
    return {{"domain", t.domain.name()}, {"label", label_json(t.lambda)}, {"max_k", t.max_k},
            {"entries", entries},        {"H1_nonneg_j", h1}};
}

Json family_json(const LabelFamily& f) {
    return {{"base", label_json(f.base)}, {"free_index", f.free_index + 1}, {"stride", f.stride}, {"text", f.str()}};
}

LabelFamily family_from_json(const Json& j) {
    return LabelFamily{label_from_json(j.at("base")), j.at("free_index").get<std::size_t>() - 1, j.at("stride").get<int>()};
}

Json classification_json(const ClassificationResult& r) {
    Json finite = Json::array(), fams = Json::array(), all = Json::array();
    for (const auto& h : r.finite_hits) finite.push_back(hit_json(h));
    for (const auto& f : r.families) fams.push_back(family_json(f));
    for (const auto& h : r.all_hits) all.push_back(hit_json(h));
    return {{"domain", r.domain},
            {"bounds", {{"coeff_bound", r.bounds.coeff_bound}, {"level_bound", r.bounds.level_bound}}},
            {"finite_hits", finite},
            {"families", fams},
            {"all_hits", all}};
}

ClassificationResult classification_from_json(const Json& j) {
    ClassificationResult r;
    r.domain = j.at("domain").get<std::string>();
    r.bounds = {j.at("bounds").at("coeff_bound").get<int>(), j.at("bounds").at("level_bound").get<int>()};
    for (const auto& h : j.at("finite_hits")) r.finite_hits.push_back(hit_from_json(h));
    for (const auto& f : j.at("families")) r.families.push_back(family_from_json(f));
    for (const auto& h : j.at("all_hits")) r.all_hits.push_back(hit_from_json(h));
    return r;
}

Json decomposition_json(const RootSystem& rs, const Decomposition& d) {
    Json terms = Json::array();
    for (const auto& [l, mult] : d)
        terms.push_back({{"label", label_json(l)}, {"multiplicity", mult}, {"dim", weyl_dim(rs, l.m)}});
    return {{"root_system", rs.name()}, {"terms", terms}, {"total_dim", total_dimension(rs, d)}};
}

Decomposition decomposition_from_json(const Json& j) {
    Decomposition d;
    for (const auto& t : j.at("terms")) d[label_from_json(t.at("label"))] += t.at("multiplicity").get<std::int64_t>();
    return d;
}

Json abelian_scenario_json(const AbelianScenario& s) {
    Json occ = Json::array();
    for (const auto& o : s.occurrence)
        occ.push_back({{"label", label_json(o.label)},
                       {"wedge_degrees", o.degrees},
                       {"max_degree_checked", o.max_degree_checked},
                       {"lattice_obstructed", o.lattice_obstructed}});
    return {{"scenario", s.scenario},
            {"parameter", s.parameter},
            {"raw", classification_json(s.raw)},
            {"occurrence", occ},
            {"filtered_out", labels_json(s.filtered_out)},
            {"filtered", classification_json(s.filtered)},
            {"verdict", verdict_name(s.verdict)}};
}

Json k_weil_json(const KWeilReport& r) {
    Json terms = Json::array();
    for (const auto& t : r.terms)
        terms.push_back({{"d", t.d},
                         {"j", t.j},
                         {"label", label_json(t.label)},
                         {"mu", rational_json(t.report.mu_lambda)},
                         {"mu_closed_form", rational_json(t.mu_closed_form)},
                         {"level", rational_json(t.report.level)},
                         {"placeable", t.report.placeable},
                         {"matches", t.matches()}});
    return {{"scenario", "k_weil"},
            {"n", r.n},
            {"p", r.p},
            {"a", rational_json(r.a)},
            {"terms", terms},
            {"computed_degrees", r.computed_degrees},
            {"verdict_degrees", r.verdict_degrees},
            {"degree_rule", r.degree_rule},
            {"mismatches", r.mismatches()}};
}

Json wedge_identity_json(const WedgeIdentityCheck& c) {
    Json out{{"n", c.n}, {"p", c.p}, {"d", c.d}, {"checked", c.checked}, {"holds", c.holds}};
    if (!c.note.empty()) out["note"] = c.note;
    return out;
}

Json spin_json(const SpinReport& s) {
    Json exp = Json::array();
    for (const auto& f : s.expected_families) exp.push_back(family_json(f));
    Json out{{"scenario", "spin"},
             {"m", s.m},
             {"classification", classification_json(s.classification)},
             {"expected_families", exp},
             {"expected_found", s.expected_found},
             {"occurrence_in_cube", s.occurrence ? Json(*s.occurrence) : Json(nullptr)}};
    if (!s.occurrence_note.empty()) out["occurrence_note"] = s.occurrence_note;
    return out;
}

Json cy_twist_json(const CyTwistReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"k", row.k},
                        {"label", label_json(row.label)},
                        {"a", rational_json(row.a)},
                        {"a_closed_form", rational_json(row.a_closed_form)},
                        {"mu", rational_json(row.report.mu_lambda)},
                        {"mu_closed_form", rational_json(row.mu_closed_form)},
                        {"level", rational_json(row.report.level)},
                        {"placeable", row.report.placeable},
                        {"matches", row.matches()}});
    return {{"scenario", "cy_twist"},
            {"domain", r.domain},
            {"rows", rows},
            {"nonneg_k", r.nonneg_k},
            {"closed_form_nonneg_k", r.expected_nonneg_k},
            {"nonneg_rule", r.nonneg_rule},
            {"consistent", r.consistent()}};
}

Json document_json(const OutputDocument& doc) {
    return {{"schema_version", doc.schema_version}, {"command", doc.command}, {"payload", doc.payload}};
}

OutputDocument document_from_json(const Json& j) {
    OutputDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    doc.command = j.at("command");
    doc.payload = j.at("payload");
    return doc;
}

std::string dump_json(const OutputDocument& doc) { return document_json(doc).dump(2) + "\n"; }

std::string render_text(const OutputDocument& doc) {
    std::ostringstream os;
    render(os, document_json(doc), 0);
    return os.str();
}

}  // namespace knf
