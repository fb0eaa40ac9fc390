#include "doctest.h"

#include <random>

#include "knf/error.hpp"
#include "knf/hermitian.hpp"
#include "knf/reps.hpp"

using knf::build_domain;
using knf::DomainSpec;
using knf::IrrepLabel;
using knf::Rational;
using knf::RealityType;

namespace {

IrrepLabel L(std::vector<int> m, Rational a = Rational{}) { return IrrepLabel(std::move(m), a); }

IrrepLabel random_label(std::mt19937& rng, std::size_t rank, int max_coeff = 4) {
    std::uniform_int_distribution<int> dist(0, max_coeff);
    std::vector<int> m(rank);
    for (auto& c : m) c = dist(rng);
    return L(m);
}

// Closed forms for E(λ), written with the convention E(λ) < 0 on dominant λ.
Rational closed_E(const DomainSpec& d, const std::vector<int>& m) {
    const int n = static_cast<int>(m.size());
    Rational e;
    switch (d.kind) {
        case knf::DomainKind::III:
            for (int i = 1; i <= n; ++i) e -= Rational(i * m[i - 1]);
            return e;
        case knf::DomainKind::II:
            for (int i = 1; i <= n - 2; ++i) e -= Rational(i * m[i - 1]);
            return e - Rational(n - 2, 2) * m[n - 2] - Rational(n, 2) * m[n - 1];
        case knf::DomainKind::IV:
            if (d.rs->family() == knf::Family::B) {
                for (int i = 1; i <= n - 1; ++i) e -= Rational(2 * m[i - 1]);
                return e - Rational(m[n - 1]);
            }
            for (int i = 1; i <= n - 2; ++i) e -= Rational(2 * m[i - 1]);
            return e - Rational(m[n - 2] + m[n - 1]);
        case knf::DomainKind::I: {
            // negative of the generic-p formula
            const int p = d.p;
            Rational s;
            for (int i = 1; i <= p; ++i) s += Rational((n + 1 - p) * i * m[i - 1]);
            for (int i = p + 1; i <= n; ++i) s += Rational(p * (n + 1 - i) * m[i - 1]);
            return -Rational(2, n + 1) * s;
        }
        case knf::DomainKind::EIII:
            return Rational(-2, 3) * Rational(4 * m[0] + 5 * m[2] + 4 * m[4] + 2 * m[5]) - Rational(2 * m[1] + 4 * m[3]);
        case knf::DomainKind::EVII:
            return -Rational(2 * m[0] + 3 * m[1] + 4 * m[2] + 6 * m[3] + 5 * m[4] + 4 * m[5] + 3 * m[6]);
    }
    return e;
}

// Same-p formula for the tube case I p p.
Rational closed_E_Ipp(int p, const std::vector<int>& m) {
    Rational e;
    for (int i = 1; i <= p; ++i) e -= Rational(i * m[i - 1]);
    for (int i = p + 1; i <= 2 * p - 1; ++i) e -= Rational((2 * p - i) * m[i - 1]);
    return e;
}

std::vector<std::string> sample_domains() {
    return {"I 1 2", "I 2 2", "I 2 3", "I 3 3", "I 2 6", "I 1 5", "II 4",  "II 5",  "II 6", "II 7", "III 1",
            "III 2", "III 3", "III 5", "IV 5",  "IV 6",  "IV 7",  "IV 8", "IV 10", "EIII", "EVII"};
}

}  // namespace

TEST_CASE("table examples") {
    auto d = build_domain("III 3");
    CHECK(d.special == 2);
    for (std::size_t i = 0; i < 3; ++i) CHECK(d.grading[i] == Rational(-1));
    CHECK(d.dim_D == 6);
    CHECK(build_domain("IV 7").rs->name() == "B4");
    CHECK(build_domain("IV 7").dim_D == 7);
    CHECK(build_domain("I 2 2").rs->name() == "A3");
    CHECK(build_domain("I 2 2").dim_D == 4);
    CHECK(build_domain("I(2,2)").name() == "I 2 2");
    CHECK(build_domain("III3").name() == "III 3");
}

TEST_CASE("dim_D matches the table's closed forms up to rank 8") {
    for (int n = 2; n <= 8; ++n)
        for (int p = 1; p <= (n + 1) / 2; ++p)
            CHECK(build_domain(knf::DomainKind::I, p, n + 1 - p).dim_D == p * (n - p + 1));
    for (int n = 4; n <= 8; ++n) CHECK(build_domain(knf::DomainKind::II, n).dim_D == n * (n - 1) / 2);
    for (int n = 1; n <= 8; ++n) CHECK(build_domain(knf::DomainKind::III, n).dim_D == n * (n + 1) / 2);
    for (int n = 3; n <= 8; ++n) CHECK(build_domain(knf::DomainKind::IV, 2 * n - 1).dim_D == 2 * n - 1);
    for (int n = 4; n <= 8; ++n) CHECK(build_domain(knf::DomainKind::IV, 2 * n - 2).dim_D == 2 * n - 2);
    CHECK(build_domain("EIII").dim_D == 16);
    CHECK(build_domain("EVII").dim_D == 27);
}

TEST_CASE("range errors") {
    CHECK_THROWS_AS(build_domain("II 3"), knf::RangeError);
    CHECK_THROWS_AS(build_domain("IV 3"), knf::RangeError);
    CHECK_THROWS_AS(build_domain("IV 4"), knf::RangeError);
    CHECK_THROWS_AS(build_domain("III 0"), knf::RangeError);
    CHECK_THROWS_AS(build_domain("I 3 2"), knf::RangeError);
    CHECK_THROWS_AS(build_domain("I 1 1"), knf::RangeError);
    CHECK_THROWS_AS(build_domain("V 3"), std::invalid_argument);
    CHECK_THROWS_AS(build_domain("II"), std::invalid_argument);
}

TEST_CASE("τ agrees with the listed diagram automorphisms") {
    for (int n = 2; n <= 8; ++n) {
        auto d = build_domain(knf::DomainKind::I, 1, n);
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) CHECK(d.tau[i] == n - 1 - i);
    }
    for (int n = 4; n <= 8; ++n) {
        auto d = build_domain(knf::DomainKind::II, n);
        for (std::size_t i = 0; i + 2 < static_cast<std::size_t>(n); ++i) CHECK(d.tau[i] == i);
        const auto a = static_cast<std::size_t>(n - 2), b = static_cast<std::size_t>(n - 1);
        CHECK(d.tau[a] == (n % 2 ? b : a));
        CHECK(d.tau[b] == (n % 2 ? a : b));
    }
    CHECK(build_domain("EIII").tau == std::vector<std::size_t>{5, 1, 4, 3, 2, 0});
    for (auto name : {"III 4", "IV 7", "IV 10", "EVII"}) {
        auto d = build_domain(name);
        for (std::size_t i = 0; i < d.rank(); ++i) CHECK(d.tau[i] == i);
    }
    CHECK(knf::tau_of(build_domain("I 2 2"), L({1, 0, 0})) == L({0, 0, 1}));
    CHECK(knf::tau_of(build_domain("II 5"), L({0, 0, 0, 1, 0})) == L({0, 0, 0, 0, 1}));
    CHECK(knf::tau_of(build_domain("III 3"), L({1, 2, 3}, 1)) == L({1, 2, 3}, -1));
}

TEST_CASE("E_of matches the closed forms on random labels") {
    std::mt19937 rng(20260);
    for (const auto& name : sample_domains()) {
        auto d = build_domain(name);
        for (int t = 0; t < 100; ++t) {
            auto l = random_label(rng, d.rank());
            CHECK_MESSAGE(knf::E_of(d, l) == closed_E(d, l.m), name << " " << l.str());
            if (d.kind == knf::DomainKind::I && d.p == d.q) CHECK(knf::E_of(d, l) == closed_E_Ipp(d.p, l.m));
            if (!l.is_zero()) CHECK(knf::E_of(d, l) < Rational(0));
            const auto t_l = knf::tau_of(d, l);
            CHECK(knf::tau_of(d, t_l) == l);
            CHECK((knf::reality_type(d, l) == RealityType::Complex) == (t_l != l));
            if (d.tube_type) CHECK(knf::E_of(d, l) == knf::E_of(d, t_l));
        }
    }
}

TEST_CASE("E_of examples") {
    CHECK(knf::E_of(build_domain("III 4"), L({1, 0, 0, 0})) == Rational(-1));
    CHECK(knf::E_of(build_domain("EVII"), L({0, 0, 0, 0, 0, 0, 1})) == Rational(-3));
    CHECK(knf::E_of(build_domain("I 2 6"), L({0, 0, 0, 0, 0, 1, 0})) == Rational(-1));
    CHECK(knf::E_of(build_domain("EIII"), L({1, 0, 0, 0, 0, 0})) == Rational(-8, 3));
}

TEST_CASE("reality types agree with the per-family descriptions") {
    std::mt19937 rng(7);
    for (int t = 0; t < 60; ++t) {
        for (int n : {4, 5, 6, 7, 8}) {
            auto d = build_domain(knf::DomainKind::II, n);
            auto l = random_label(rng, d.rank(), 3);
            const auto& m = l.m;
            int s = 0;
            for (int i = 1; i <= n - 2; ++i) s += i * m[i - 1];
            RealityType expect = RealityType::Real;
            if (n % 2 == 0) {
                if ((s + m[n - 2]) % 2 != 0) expect = RealityType::Quaternionic;
            } else if (m[n - 2] != m[n - 1]) {
                expect = RealityType::Complex;
            } else if (s % 2 != 0) {
                expect = RealityType::Quaternionic;
            }
            CHECK_MESSAGE(knf::reality_type(d, l) == expect, d.name() << " " << l.str());
        }
        for (int n : {4, 5, 6, 8}) {
            auto d = build_domain(knf::DomainKind::IV, 2 * n - 2);
            auto l = random_label(rng, d.rank(), 3);
            RealityType expect = RealityType::Real;
            if (n % 2 == 1 && l.m[n - 2] != l.m[n - 1]) expect = RealityType::Complex;
            if (n % 4 == 0 && (l.m[n - 2] + l.m[n - 1]) % 2 == 1) expect = RealityType::Quaternionic;
            CHECK_MESSAGE(knf::reality_type(d, l) == expect, d.name() << " " << l.str());
        }
        for (int n : {3, 4, 5, 6, 7}) {
            auto d = build_domain(knf::DomainKind::IV, 2 * n - 1);
            auto l = random_label(rng, d.rank(), 3);
            const bool quat = l.m[n - 1] % 2 == 1 && ((n - 1) / 2) % 2 == 1;
            CHECK(knf::reality_type(d, l) == (quat ? RealityType::Quaternionic : RealityType::Real));
        }
        for (int n : {1, 2, 3, 4}) {
            auto d = build_domain(knf::DomainKind::III, n);
            CHECK(knf::reality_type(d, random_label(rng, d.rank(), 3)) == RealityType::Real);
        }
        auto e7 = build_domain("EVII");
        CHECK(knf::reality_type(e7, random_label(rng, 7, 3)) == RealityType::Real);
        for (int p : {2, 3, 4}) {
            auto d = build_domain(knf::DomainKind::I, p, p);
            CHECK(knf::reality_type(d, random_label(rng, d.rank(), 3)) != RealityType::Quaternionic);
        }
    }
    CHECK(knf::reality_type(build_domain("II 4"), L({1, 0, 0, 0})) == RealityType::Quaternionic);
    CHECK(knf::reality_type(build_domain("II 6"), L({0, 0, 0, 0, 0, 1})) == RealityType::Real);
}

TEST_CASE("levels") {
    CHECK(knf::level_of(build_domain("III 3"), L({0, 0, 1})) == 3);
    for (int n = 2; n <= 9; ++n)
        for (int p = 1; p <= (n + 1) / 2; ++p) {
            auto d = build_domain(knf::DomainKind::I, p, n + 1 - p);
            std::vector<int> m(n, 0);
            m[0] = 1;
            CHECK(knf::level_of(d, L(m, Rational(2 * p - n - 1, n + 1))) == 1);
        }
    for (const auto& name : sample_domains()) {
        auto d = build_domain(name);
        CHECK(knf::level_of(d, L(std::vector<int>(d.rank(), 0))) == 0);
    }
    CHECK_THROWS_AS(knf::level_of(build_domain("EIII"), L({1, 0, 0, 0, 0, 0})), knf::ParityError);
    CHECK(knf::complex_level(build_domain("EIII"), L({1, 0, 0, 0, 0, 0})) == Rational(2));
}

TEST_CASE("Hodge numbers") {
    CHECK(knf::hodge_numbers(build_domain("III 1"), L({1})).numbers() == std::vector<std::int64_t>{1, 1});
    auto h = knf::hodge_numbers(build_domain("III 3"), L({0, 0, 1}));
    CHECK(h.numbers() == std::vector<std::int64_t>{1, 6, 6, 1});
    CHECK(h.level == 3);
    CHECK(h.entries.begin()->first == -3);
    CHECK(knf::hodge_numbers(build_domain("I 3 3"), L({0, 0, 1, 0, 0})).numbers() ==
          std::vector<std::int64_t>{1, 9, 9, 1});
    CHECK(knf::hodge_numbers(build_domain("EVII"), L({0, 0, 0, 0, 0, 0, 1})).numbers() ==
          std::vector<std::int64_t>{1, 27, 27, 1});
    CHECK_THROWS_AS(knf::hodge_numbers(build_domain("III 4"), L({0, 0, 0, 1})), knf::ParityError);
}

TEST_CASE("Hodge mass is (1 or 2) × Weyl dimension and the grading is symmetric") {
    std::mt19937 rng(99);
    for (const auto& name : sample_domains()) {
        auto d = build_domain(name);
        int done = 0;
        for (int t = 0; t < 400 && done < 6; ++t) {
            auto l = random_label(rng, d.rank(), 2);
            if (!knf::placeable(d, l)) continue;
            try {
                if (knf::weyl_dim(*d.rs, l.m) > 3000) continue;
            } catch (const knf::GuardError&) {
                continue;
            }
            ++done;
            auto h = knf::hodge_numbers(d, l);
            const auto factor = knf::reality_type(d, l) == RealityType::Real ? 1 : 2;
            CHECK(h.total() == factor * knf::weyl_dim(*d.rs, l.m));
            for (const auto& [e, m] : h.entries) {
                CHECK(e % 2 != 0);
                auto it = h.entries.find(-e);
                REQUIRE(it != h.entries.end());
                CHECK(it->second == m);
            }
            CHECK(h.level == knf::level_of(d, l));
        }
    }
}
