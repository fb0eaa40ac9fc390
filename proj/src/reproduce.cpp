#include "knf/reproduce.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>

#include "knf/error.hpp"

#ifndef KNF_TABLES_DIR
#define KNF_TABLES_DIR "tables"
#endif

namespace knf {

namespace {

using Mismatches = std::vector<std::string>;

template <class T>
void compare_sets(const std::string& what, const std::set<T>& computed, const std::set<T>& expected, Mismatches& out,
                  const std::function<std::string(const T&)>& show) {
    for (const auto& x : expected)
        if (!computed.count(x)) out.push_back("missing " + what + " " + show(x));
    for (const auto& x : computed)
        if (!expected.count(x)) out.push_back("unexpected " + what + " " + show(x));
}

std::set<IrrepLabel> label_set(const Json& arr) {
    std::set<IrrepLabel> out;
    for (const auto& l : arr) out.insert(label_from_json(l));
    return out;
}

std::set<LabelFamily> family_set(const Json& arr) {
    std::set<LabelFamily> out;
    for (const auto& f : arr) out.insert(family_from_json(f));
    return out;
}

void compare_classification(const std::string& prefix, const ClassificationResult& r, const Json& finite,
                            const Json& families, Mismatches& out) {
    const auto labels = r.finite_labels();
    compare_sets<IrrepLabel>(prefix + " finite hit", {labels.begin(), labels.end()}, label_set(finite), out,
                             [](const IrrepLabel& l) { return l.str(); });
    compare_sets<LabelFamily>(prefix + " family", {r.families.begin(), r.families.end()}, family_set(families), out,
                              [](const LabelFamily& f) { return f.str(); });
}

Json summary_json(const ClassificationResult& r) {
    Json finite = Json::array(), fams = Json::array();
    for (const auto& h : r.finite_hits) finite.push_back(label_json(h.label));
    for (const auto& f : r.families) fams.push_back(family_json(f));
    return {{"domain", r.domain}, {"finite", finite}, {"families", fams}};
}

Bounds bounds_from(const Json& g) {
    Bounds b;
    if (g.contains("bounds")) {
        b.coeff_bound = g.at("bounds").at("coeff_bound").get<int>();
        b.level_bound = g.at("bounds").at("level_bound").get<int>();
    }
    return b;
}

std::string tuple_text(std::initializer_list<std::pair<const char*, long long>> kv) {
    std::string s = "(";
    for (const auto& [k, v] : kv) s += std::string(s.size() > 1 ? ", " : "") + k + "=" + std::to_string(v);
    return s + ")";
}

void run_intro(const Json& g, ReproduceResult& r) {
    const Bounds b = bounds_from(g);
    const auto results = reproduce_intro_list(b, g.at("max_rank").get<int>());
    std::set<std::pair<std::string, IrrepLabel>> finite, exp_finite;
    std::set<std::pair<std::string, LabelFamily>> fams, exp_fams;
    r.computed = Json::array();
    for (const auto& c : results) {
        r.computed.push_back(summary_json(c));
        for (const auto& h : c.finite_hits) finite.insert({c.domain, h.label});
        for (const auto& f : c.families) fams.insert({c.domain, f});
    }
    for (const auto& e : g.at("finite")) exp_finite.insert({e.at("domain").get<std::string>(), label_from_json(e.at("label"))});
    for (const auto& e : g.at("families")) exp_fams.insert({e.at("domain").get<std::string>(), family_from_json(e)});
    compare_sets<std::pair<std::string, IrrepLabel>>("finite hit", finite, exp_finite, r.mismatches,
                                                      [](const auto& x) { return x.first + ": " + x.second.str(); });
    compare_sets<std::pair<std::string, LabelFamily>>("family", fams, exp_fams, r.mismatches,
                                                       [](const auto& x) { return x.first + ": " + x.second.str(); });
}

void run_abelian(const Json& g, ReproduceResult& r, bool quaternionic) {
    const Bounds b = bounds_from(g);
    const char* key = quaternionic ? "n" : "p";
    r.computed = Json::array();
    for (const auto& c : g.at("cases")) {
        const int param = c.at(key).get<int>();
        const auto s = quaternionic ? scenario_quaternionic(param, b) : scenario_weil(param, b);
        const std::string prefix = s.raw.domain;
        compare_classification(prefix + " raw", s.raw, c.at("raw_finite"), c.at("raw_families"), r.mismatches);
        compare_classification(prefix + " filtered", s.filtered, c.at("filtered_finite"), c.at("filtered_families"),
                               r.mismatches);
        if (verdict_name(s.verdict) != c.at("verdict").get<std::string>())
            r.mismatches.push_back(prefix + " verdict " + verdict_name(s.verdict) + ", expected " +
                                   c.at("verdict").get<std::string>());
        Json filtered_out = Json::array();
        for (const auto& l : s.filtered_out) filtered_out.push_back(label_json(l));
        r.computed.push_back({{key, param},
                              {"raw", summary_json(s.raw)},
                              {"filtered_out", filtered_out},
                              {"filtered", summary_json(s.filtered)},
                              {"verdict", verdict_name(s.verdict)}});
    }
}

void run_thm3(const Json& g, ReproduceResult& r) {
    Json cases = Json::array();
    for (const auto& c : g.at("cases")) {
        const int n = c.at("n").get<int>(), p = c.at("p").get<int>();
        const auto rep = scenario_k_weil(n, p);
        const auto expected = c.at("verdict_degrees").get<std::vector<int>>();
        const std::string id = tuple_text({{"n", n}, {"p", p}});
        if (rep.verdict_degrees != expected) r.mismatches.push_back("degree verdict differs at " + id);
        if (!rep.computed_within_verdict())
            r.mismatches.push_back("computed degrees outside the verdict at " + id);
        else if (rep.computed_degrees != rep.verdict_degrees)
            r.flags.push_back("computed degrees strictly inside the verdict at " + id);
        cases.push_back({{"n", n},
                         {"p", p},
                         {"degree_rule", rep.degree_rule},
                         {"verdict_degrees", rep.verdict_degrees},
                         {"computed_degrees", rep.computed_degrees}});
    }
    Json wedge = Json::array();
    const int n_max = g.at("wedge_identity").at("n_max").get<int>();
    for (int n = 2; n <= n_max; ++n)
        for (int p = 1; p <= (n + 1) / 2; ++p)
            for (int d = 1; 2 * d <= n; ++d) {
                const auto c = k_weil_wedge_identity(n, p, d);
                if (!c.checked) r.flags.push_back("exterior power identity skipped at " +
                                                  tuple_text({{"n", n}, {"p", p}, {"d", d}}) + ": " + c.note);
                else if (!c.holds)
                    r.mismatches.push_back("exterior power identity fails at " + tuple_text({{"n", n}, {"p", p}, {"d", d}}));
                wedge.push_back(wedge_identity_json(c));
            }
    r.computed = {{"cases", cases}, {"wedge_identity", wedge}};
}

void run_eq22(const Json& g, ReproduceResult& r) {
    std::map<std::pair<int, int>, KWeilReport> reports;
    Json rows = Json::array();
    for (const auto& e : g.at("entries")) {
        const int n = e.at("n").get<int>(), p = e.at("p").get<int>(), d = e.at("d").get<int>(), j = e.at("j").get<int>();
        auto it = reports.find({n, p});
        if (it == reports.end()) it = reports.emplace(std::make_pair(n, p), scenario_k_weil(n, p)).first;
        const auto& terms = it->second.terms;
        auto t = std::find_if(terms.begin(), terms.end(), [&](const KWeilTerm& x) { return x.d == d && x.j == j; });
        if (t == terms.end()) throw Error("eq22 golden entry outside the computed range");
        const Rational expected = rational_from_json(e.at("mu"));
        const std::string id = tuple_text({{"n", n}, {"p", p}, {"d", d}, {"j", j}});
        if (t->report.mu_lambda != expected)
            r.mismatches.push_back("mu at " + id + " is " + t->report.mu_lambda.str() + ", expected " + expected.str());
        rows.push_back({{"n", n},
                        {"p", p},
                        {"d", d},
                        {"j", j},
                        {"label", t->label.str()},
                        {"mu", rational_json(t->report.mu_lambda)},
                        {"expected", rational_json(expected)}});
    }
    r.computed = rows;
}

void run_cy(const Json& g, ReproduceResult& r) {
    const int k_max = g.at("k_max").get<int>();
    r.computed = Json::array();
    for (const auto& dom : g.at("domains")) {
        const std::string name = dom.at("domain").get<std::string>();
        const auto rep = scenario_cy_twist(build_domain(name), k_max);
        const auto& rows = dom.at("rows");
        for (std::size_t i = 0; i < rows.size() && i < rep.rows.size(); ++i) {
            const auto& row = rep.rows[i];
            const Rational a = rational_from_json(rows[i].at("a")), mu = rational_from_json(rows[i].at("mu"));
            const std::string id = name + " k=" + std::to_string(row.k);
            if (row.a != a) r.mismatches.push_back("twist at " + id + " is " + row.a.str() + ", expected " + a.str());
            if (row.report.mu_lambda != mu)
                r.mismatches.push_back("mu at " + id + " is " + row.report.mu_lambda.str() + ", expected " + mu.str());
        }
        if (rows.size() != rep.rows.size()) r.mismatches.push_back("row count differs for " + name);
        if (rep.nonneg_k != dom.at("nonneg_k").get<std::vector<int>>())
            r.mismatches.push_back("non-negativity locus differs for " + name);
        r.computed.push_back(cy_twist_json(rep));
    }
}

void run_wedge_d4(const Json& g, ReproduceResult& r) {
    const auto rs = parse_root_system(g.at("root_system").get<std::string>());
    const IrrepLabel l = label_from_json(g.at("lambda"));
    const int k = g.at("k").get<int>();
    const Decomposition dec = wedge_decompose(*rs, l, k);
    Decomposition expected;
    for (const auto& t : g.at("decomposition")) expected[label_from_json(t.at("label"))] += t.at("multiplicity").get<std::int64_t>();
    if (dec != expected) r.mismatches.push_back("decomposition of the exterior power differs");
    if (total_dimension(*rs, dec) != g.at("dim").get<std::int64_t>()) r.mismatches.push_back("dimension differs");
    r.computed = decomposition_json(*rs, dec);
}

void run_spin_tensor(const Json& g, ReproduceResult& r) {
    Json squares = Json::array(), cubes = Json::array();
    for (const auto& c : g.at("square")) {
        const int n = c.at("rank").get<int>();
        const auto rs = build_root_system(Family::B, n);
        IrrepLabel spin(std::vector<int>(static_cast<std::size_t>(n), 0));
        spin.m.back() = 1;
        const auto dec = tensor_decompose(*rs, spin, spin);
        Decomposition expected;
        for (const auto& t : c.at("decomposition")) expected[label_from_json(t.at("label"))] += t.at("multiplicity").get<std::int64_t>();
        if (dec != expected) r.mismatches.push_back("square of the spin module differs for B" + std::to_string(n));
        squares.push_back(decomposition_json(*rs, dec));
    }
    for (const auto& c : g.at("cube")) {
        const int n = c.at("rank").get<int>();
        const auto rs = build_root_system(Family::B, n);
        IrrepLabel spin(std::vector<int>(static_cast<std::size_t>(n), 0));
        spin.m.back() = 1;
        const auto dec = tensor_decompose(*rs, tensor_decompose(*rs, spin, spin), spin);
        const IrrepLabel target = label_from_json(c.at("contains"));
        const bool found = dec.count(target) > 0;
        if (!found) r.mismatches.push_back(target.str() + " missing from the cube for B" + std::to_string(n));
        cubes.push_back({{"root_system", rs->name()},
                         {"contains", label_json(target)},
                         {"found", found},
                         {"multiplicity", found ? dec.at(target) : 0},
                         {"total_dim", total_dimension(*rs, dec)}});
    }
    r.computed = {{"square", squares}, {"cube", cubes}};
}

}  // namespace

Json ReproduceResult::payload() const {
    return {{"table", table}, {"match", match}, {"mismatches", mismatches}, {"flags", flags}, {"computed", computed}};
}

const std::vector<std::string>& table_ids() {
    static const std::vector<std::string> ids{"intro", "thm1",      "thm2",     "thm3",
                                              "eq22",  "cy-twists", "wedge-d4", "spin-tensor"};
    return ids;
}

std::filesystem::path default_tables_dir() {
    if (const char* env = std::getenv("KNF_TABLES_DIR"); env && *env) return env;
    return KNF_TABLES_DIR;
}

Json load_golden(const std::filesystem::path& dir, std::string_view id) {
    const auto path = dir / (std::string(id) + ".json");
    std::ifstream in(path);
    if (!in) throw Error("golden file " + path.string() + " cannot be read");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error("golden file " + path.string() + " is malformed: " + e.what());
    }
}

ReproduceResult reproduce_table(std::string_view id, const std::filesystem::path& tables_dir) {
    const auto& ids = table_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw std::invalid_argument("unknown table '" + std::string(id) +
                                    "'; expected intro, thm1, thm2, thm3, eq22, cy-twists, wedge-d4 or spin-tensor");
    const Json g = load_golden(tables_dir, id);
    ReproduceResult r;
    r.table = std::string(id);
    try {
        if (id == "intro") run_intro(g, r);
        else if (id == "thm1") run_abelian(g, r, true);
        else if (id == "thm2") run_abelian(g, r, false);
        else if (id == "thm3") run_thm3(g, r);
        else if (id == "eq22") run_eq22(g, r);
        else if (id == "cy-twists") run_cy(g, r);
        else if (id == "wedge-d4") run_wedge_d4(g, r);
        else run_spin_tensor(g, r);
    } catch (const nlohmann::json::exception& e) {
        throw Error("golden file for " + r.table + " is malformed: " + e.what());
    }
    if (g.contains("flags"))
        for (const auto& f : g.at("flags")) r.flags.push_back(f.at("note").get<std::string>());
    r.match = r.mismatches.empty();
    return r;
}

}  // namespace knf
