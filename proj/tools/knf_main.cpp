// Command-line front end. Exit status: 0 success or golden match, 1 usage
// error, 2 computation error, 3 golden-file mismatch.

#include <cstdlib>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "knf/error.hpp"
#include "knf/reproduce.hpp"
#include "knf/serialize.hpp"

namespace {

using knf::Json;

constexpr int kUsage = 1;
constexpr int kComputation = 2;
constexpr int kMismatch = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Consumes a domain name from args[pos...]: either one token ("I(2,2)",
// "III3", "I 2 2") or a type token followed by its integer parameters.
knf::DomainSpec take_domain(const std::vector<std::string>& args, std::size_t& pos) {
    if (pos >= args.size()) throw UsageError("missing domain name (e.g. III 3, I 2 2, EVII)");
    std::string name = args[pos++];
    static const std::vector<std::string> kinds{"I", "II", "III", "IV", "EIII", "EVII"};
    if (std::find(kinds.begin(), kinds.end(), name) != kinds.end()) {
        const int count = knf::domain_parameter_count(name);
        for (int i = 0; i < count; ++i) {
            if (pos >= args.size()) throw UsageError("domain " + name + " needs " + std::to_string(count) + " parameter(s)");
            name += " " + args[pos++];
        }
    }
    try {
        return knf::build_domain(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("domain: ") + e.what());
    } catch (const knf::RangeError& e) {
        throw UsageError(std::string("domain: ") + e.what());
    }
}

std::string take(const std::vector<std::string>& args, std::size_t& pos, const std::string& what) {
    if (pos >= args.size()) throw UsageError("missing " + what);
    return args[pos++];
}

void expect_end(const std::vector<std::string>& args, std::size_t pos) {
    if (pos < args.size()) throw UsageError("unexpected argument '" + args[pos] + "'");
}

knf::IrrepLabel take_label(const std::vector<std::string>& args, std::size_t& pos, std::size_t rank,
                           const knf::Rational& twist = knf::Rational{}) {
    const std::string text = take(args, pos, "ω-coefficients (comma separated, e.g. 0,0,1)");
    std::vector<int> m;
    try {
        m = knf::parse_coefficients(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("coefficients: ") + e.what());
    }
    if (m.size() != rank)
        throw UsageError("coefficients: expected " + std::to_string(rank) + " entries, got " + std::to_string(m.size()));
    return knf::IrrepLabel(std::move(m), twist);
}

int take_int(const std::vector<std::string>& args, std::size_t& pos, const std::string& what) {
    const std::string text = take(args, pos, what);
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError(what + ": '" + text + "' is not an integer");
    }
}

knf::Rational parse_twist(const std::string& text) {
    if (text.empty()) return {};
    try {
        return knf::Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--twist: ") + e.what());
    }
}

knf::RootSystemPtr take_group(const std::vector<std::string>& args, std::size_t& pos) {
    static const std::regex root_system("[ABCDE][0-9]+");
    if (pos < args.size() && std::regex_match(args[pos], root_system)) {
        try {
            return knf::parse_root_system(args[pos++]);
        } catch (const knf::RangeError& e) {
            throw UsageError(std::string("root system: ") + e.what());
        }
    }
    return take_domain(args, pos).rs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knf: Kostant n-cohomology, Hodge invariants and infinitesimal normal functions "
                 "over Hermitian symmetric domains"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::int64_t dim_guard = 0;
    std::string tables_dir;
    app.add_flag("--json", as_json, "Print the JSON document instead of the text rendering");
    app.add_option("--dim-guard", dim_guard, "Largest module dimension to expand (overrides KNF_DIM_GUARD)")
        ->check(CLI::PositiveNumber);
    app.add_option("--tables-dir", tables_dir, "Directory with the golden tables (overrides KNF_TABLES_DIR)");

    std::vector<std::string> args;
    std::string twist_text;
    int max_k = 2;
    knf::Bounds bounds;

    auto* info = app.add_subcommand("domain-info", "Table data of a domain: E(ω_i), τ, |Δ(n)|, dim D");
    info->add_option("domain", args, "Domain name, e.g. III 3, I 2 2, IV 7, EVII")->required();
    auto* inv = app.add_subcommand("invariant", "μ, level, reality type, Hodge numbers and verdict of Ṽ^λ{a/2}");
    inv->add_option("args", args, "DOMAIN COEFFS")->required();
    inv->add_option("--twist", twist_text, "Half-twist parameter a (rational, e.g. -1/3)");
    auto* coh = app.add_subcommand("cohomology", "Kostant n-cohomology ℋ^k(j) for k ≤ max-k");
    coh->add_option("args", args, "DOMAIN COEFFS")->required();
    coh->add_option("--max-k", max_k, "Largest cohomological degree")->check(CLI::NonNegativeNumber);
    coh->add_option("--twist", twist_text, "Half-twist parameter a");
    auto* cls = app.add_subcommand("classify", "All λ (a = 0) with infinitesimal normal functions, within bounds");
    cls->add_option("domain", args, "Domain name")->required();
    cls->add_option("--coeff-bound", bounds.coeff_bound, "Largest Σ m_i")->check(CLI::PositiveNumber);
    cls->add_option("--level-bound", bounds.level_bound, "Largest level")->check(CLI::PositiveNumber);
    auto* rep = app.add_subcommand("reproduce", "Regenerate a stored table and compare it with its golden file");
    rep->add_option("table", args, "intro, thm1, thm2, thm3, eq22, cy-twists, wedge-d4, spin-tensor")->required();
    auto* dec = app.add_subcommand("decompose", "Tensor products and exterior powers");
    dec->require_subcommand(1);
    dec->fallthrough();
    auto* tensor = dec->add_subcommand("tensor", "V^λ ⊗ V^ν");
    tensor->add_option("args", args, "GROUP LAMBDA NU (GROUP: A3, B3, D4, E6, ... or a domain)")->required();
    auto* wedge = dec->add_subcommand("wedge", "⋀^k V^λ");
    wedge->add_option("args", args, "GROUP LAMBDA K")->required();
    auto* sc = app.add_subcommand("scenario", "Abelian-variety and Calabi-Yau scenario reports");
    sc->add_option("args", args,
                   "quaternionic N | weil P | k-weil N P | spin M | cy-twist DOMAIN K")
        ->required();
    sc->add_option("--coeff-bound", bounds.coeff_bound, "Largest Σ m_i")->check(CLI::PositiveNumber);
    sc->add_option("--level-bound", bounds.level_bound, "Largest level")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    knf::OutputDocument doc;
    Json echo = Json::array();
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) != "--json") echo.push_back(argv[i]);
    int status = 0;
    try {
        if (dim_guard > 0) knf::set_dimension_guard(dim_guard);
        std::size_t pos = 0;
        const knf::Rational twist = parse_twist(twist_text);
        if (info->parsed()) {
            doc.command = {{"name", "domain-info"}, {"arguments", echo}};
            const auto d = take_domain(args, pos);
            expect_end(args, pos);
            doc.payload = knf::domain_json(d);
        } else if (inv->parsed()) {
            doc.command = {{"name", "invariant"}, {"arguments", echo}};
            const auto d = take_domain(args, pos);
            const auto l = take_label(args, pos, d.rank(), twist);
            expect_end(args, pos);
            doc.payload = knf::invariant_json(d, l);
        } else if (coh->parsed()) {
            doc.command = {{"name", "cohomology"}, {"arguments", echo}};
            const auto d = take_domain(args, pos);
            const auto l = take_label(args, pos, d.rank(), twist);
            expect_end(args, pos);
            doc.payload = knf::cohomology_json(knf::cohomology(d, l, max_k));
        } else if (cls->parsed()) {
            doc.command = {{"name", "classify"}, {"arguments", echo}};
            const auto d = take_domain(args, pos);
            expect_end(args, pos);
            doc.payload = knf::classification_json(knf::classify_domain(d, bounds));
        } else if (rep->parsed()) {
            doc.command = {{"name", "reproduce"}, {"arguments", echo}};
            const std::string id = take(args, pos, "table id");
            expect_end(args, pos);
            const auto& ids = knf::table_ids();
            if (std::find(ids.begin(), ids.end(), id) == ids.end())
                throw UsageError("table: unknown id '" + id +
                                 "'; expected intro, thm1, thm2, thm3, eq22, cy-twists, wedge-d4 or spin-tensor");
            const auto dir = tables_dir.empty() ? knf::default_tables_dir() : std::filesystem::path(tables_dir);
            const auto result = knf::reproduce_table(id, dir);
            doc.payload = result.payload();
            if (!result.match) status = kMismatch;
        } else if (tensor->parsed()) {
            doc.command = {{"name", "decompose tensor"}, {"arguments", echo}};
            const auto rs = take_group(args, pos);
            const auto l = take_label(args, pos, static_cast<std::size_t>(rs->rank()));
            const auto n = take_label(args, pos, static_cast<std::size_t>(rs->rank()));
            expect_end(args, pos);
            doc.payload = knf::decomposition_json(*rs, knf::tensor_decompose(*rs, l, n));
        } else if (wedge->parsed()) {
            doc.command = {{"name", "decompose wedge"}, {"arguments", echo}};
            const auto rs = take_group(args, pos);
            const auto l = take_label(args, pos, static_cast<std::size_t>(rs->rank()));
            const int k = take_int(args, pos, "exterior power k");
            expect_end(args, pos);
            if (k < 0) throw UsageError("exterior power k must be >= 0");
            doc.payload = knf::decomposition_json(*rs, knf::wedge_decompose(*rs, l, k));
        } else if (sc->parsed()) {
            doc.command = {{"name", "scenario"}, {"arguments", echo}};
            const std::string kind = take(args, pos, "scenario name");
            try {
                if (kind == "quaternionic") {
                    const int n = take_int(args, pos, "n");
                    expect_end(args, pos);
                    doc.payload = knf::abelian_scenario_json(knf::scenario_quaternionic(n, bounds));
                } else if (kind == "weil") {
                    const int p = take_int(args, pos, "p");
                    expect_end(args, pos);
                    doc.payload = knf::abelian_scenario_json(knf::scenario_weil(p, bounds));
                } else if (kind == "k-weil") {
                    const int n = take_int(args, pos, "n");
                    const int p = take_int(args, pos, "p");
                    expect_end(args, pos);
                    doc.payload = knf::k_weil_json(knf::scenario_k_weil(n, p));
                } else if (kind == "spin") {
                    const int m = take_int(args, pos, "m");
                    expect_end(args, pos);
                    doc.payload = knf::spin_json(knf::scenario_spin(m, bounds));
                } else if (kind == "cy-twist") {
                    const auto d = take_domain(args, pos);
                    const int k = take_int(args, pos, "k_max");
                    expect_end(args, pos);
                    doc.payload = knf::cy_twist_json(knf::scenario_cy_twist(d, k));
                } else {
                    throw UsageError("scenario: unknown name '" + kind +
                                     "'; expected quaternionic, weil, k-weil, spin or cy-twist");
                }
            } catch (const knf::RangeError& e) {
                throw UsageError(std::string("scenario: ") + e.what());
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "knf: usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const knf::Error& e) {
        std::cerr << "knf: computation error: " << e.what() << "\n";
        return kComputation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "knf: usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "knf: computation error: " << e.what() << "\n";
        return kComputation;
    }

    std::cout << (as_json ? knf::dump_json(doc) : knf::render_text(doc));
    return status;
}
