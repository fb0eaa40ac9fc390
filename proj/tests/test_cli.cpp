#include "doctest.h"

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "knf/error.hpp"
#include "knf/reproduce.hpp"
#include "knf/serialize.hpp"

using knf::build_domain;
using knf::IrrepLabel;
using knf::Json;
using knf::Rational;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(KNF_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// Scalar leaves of a JSON value, in document order, as the text renderer prints them.
void leaves(const Json& j, std::vector<std::string>& out) {
    if (j.is_structured()) {
        for (const auto& v : j) leaves(v, out);
    } else {
        out.push_back(j.is_string() ? j.get<std::string>() : j.dump());
    }
}

}  // namespace

TEST_CASE("rationals serialize as num/den") {
    CHECK(knf::rational_json(Rational(3)) == "3/1");
    CHECK(knf::rational_json(Rational(-1, 2)) == "-1/2");
    CHECK(knf::rational_from_json(Json("-4/6")) == Rational(-2, 3));
    CHECK(knf::rational_from_json(Json(5)) == Rational(5));
}

TEST_CASE("round trips") {
    const IrrepLabel l({0, 2, 1}, Rational(-1, 3));
    CHECK(knf::label_from_json(knf::label_json(l)) == l);

    auto d = build_domain("I 2 2");
    auto r = knf::classify_domain(d);
    const Json j = knf::classification_json(r);
    CHECK(knf::classification_json(knf::classification_from_json(j)) == j);
    auto back = knf::classification_from_json(j);
    CHECK(back.families == r.families);
    CHECK(back.finite_labels() == r.finite_labels());

    auto rep = knf::has_infinitesimal_nf(build_domain("III 3"), IrrepLabel({0, 0, 1}));
    auto rep2 = knf::mu_report_from_json(knf::mu_report_json(rep));
    CHECK(rep2.mu_lambda == rep.mu_lambda);
    CHECK(rep2.level == rep.level);
    CHECK(rep2.has_inf_nf == rep.has_inf_nf);

    auto b3 = knf::parse_root_system("B3");
    auto dec = knf::tensor_decompose(*b3, IrrepLabel({0, 0, 1}), IrrepLabel({0, 0, 1}));
    CHECK(knf::decomposition_from_json(knf::decomposition_json(*b3, dec)) == dec);

    knf::OutputDocument doc{knf::kSchemaVersion, {{"name", "classify"}}, j};
    CHECK(knf::document_from_json(Json::parse(knf::dump_json(doc))) == doc);
}

TEST_CASE("text rendering carries the JSON payload") {
    knf::OutputDocument doc{knf::kSchemaVersion, {{"name", "invariant"}},
                            knf::invariant_json(build_domain("EVII"), IrrepLabel({0, 0, 0, 0, 0, 0, 1}))};
    const std::string text = knf::render_text(doc);
    std::vector<std::string> vals;
    leaves(knf::document_json(doc), vals);
    std::size_t at = 0;
    for (const auto& v : vals) {
        const auto found = text.find(v, at);
        REQUIRE_MESSAGE(found != std::string::npos, v);
        at = found + v.size();
    }
}

TEST_CASE("domain info") {
    const Json j = knf::domain_json(build_domain("III 3"));
    CHECK(j["root_system"] == "C3");
    CHECK(j["special_node"] == 3);
    CHECK(j["dim_D"] == 6);
    CHECK(j["noncompact_positive_roots"] == 6);
    CHECK(j["tau"] == Json::array({1, 2, 3}));
}

TEST_CASE("golden tables") {
    const auto dir = knf::default_tables_dir();
    for (const auto& id : {"intro", "thm2", "thm3", "wedge-d4", "spin-tensor"}) {
        auto r = knf::reproduce_table(id, dir);
        CHECK_MESSAGE(r.match, id);
    }
    auto intro = knf::reproduce_table("intro", dir);
    REQUIRE(intro.flags.size() == 1);
    CHECK(intro.flags[0].find("II 4") != std::string::npos);
    CHECK_THROWS_AS(knf::reproduce_table("nope", dir), std::invalid_argument);
    CHECK_THROWS_AS(knf::reproduce_table("intro", "/nonexistent"), knf::Error);
}

TEST_CASE("CLI examples and exit codes") {
    auto inv = run("invariant III 3 0,0,1 --json");
    REQUIRE(inv.status == 0);
    const Json p = Json::parse(inv.out)["payload"];
    CHECK(p["mu"]["mu_lambda"] == "0/1");
    CHECK(p["mu"]["level"] == "3/1");
    CHECK(p["mu"]["has_inf_nf"] == true);
    CHECK(p["reality"] == "real");

    auto e7 = run("--json invariant EVII 0,0,0,0,0,0,1");
    REQUIRE(e7.status == 0);
    CHECK(Json::parse(e7.out)["payload"]["mu"]["level"] == "3/1");

    CHECK(run("invariant 'I(3,3)' 0,0,1,0,0").status == 0);
    CHECK(run("reproduce thm2").status == 0);
    CHECK(run("reproduce eq22").status == 3);
    CHECK(run("reproduce nonsense").status == 1);
    CHECK(run("invariant III 3 0,0").status == 1);
    CHECK(run("invariant III 3 0,x,1").status == 1);
    CHECK(run("invariant II 3 0,0,1").status == 1);
    CHECK(run("invariant III 3 0,0,1 --twist 1/0").status == 1);
    CHECK(run("frobnicate").status == 1);
    CHECK(run("cohomology III 4 0,0,0,1").status == 2);
    CHECK(run("--dim-guard 20 decompose wedge D4 1,0,0,0 3").status == 2);
    CHECK(run("decompose wedge D4 1,0,0,0 3").status == 0);
    CHECK(run("scenario k-weil 9 4").status == 0);
    CHECK(run("scenario cy-twist III 3 2").status == 1);
}

TEST_CASE("CLI output is deterministic and text matches JSON") {
    for (const auto& args : {"classify I 2 2", "cohomology III 3 0,0,1", "domain-info EVII", "decompose tensor B3 0,0,1 0,0,1",
                             "scenario quaternionic 6"}) {
        auto a = run(std::string(args) + " --json");
        auto b = run(std::string(args) + " --json");
        REQUIRE(a.status == 0);
        CHECK(a.out == b.out);
        auto t = run(args);
        CHECK(t.out == knf::render_text(knf::document_from_json(Json::parse(a.out))));
    }
}
