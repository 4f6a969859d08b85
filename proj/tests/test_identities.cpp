#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bifib/grammar.hpp"
#include "bifib/identities.hpp"

#include <json.hpp>

#include <algorithm>

using namespace bifib;

TEST_CASE("catalog is complete and well-named") {
    CHECK(catalog().size() == 37);
    CHECK(identity_from_name("SIMPSON_F") == IdentityId::SIMPSON_F);
    CHECK(identity_from_name("EIGVAL_BAN") == IdentityId::EIGVAL_BAN);
    CHECK_FALSE(identity_from_name("NOSUCH").has_value());
    for (const auto& info : catalog())
        CHECK(identity_from_name(info.name) == info.id);
}

TEST_CASE("Simpson formula at n = 2 gives y on both sides") {
    auto report = check_symbolic(IdentityId::SIMPSON_F, 2);
    CHECK(report.pass);
    CHECK(report.lhs == "y");
    CHECK(report.rhs == "y");
}

TEST_CASE("four-gap Lucas product at n = 0") {
    auto report = check_symbolic(IdentityId::LUCAS_4GAP, 0);
    CHECK(report.pass);
    CHECK(report.lhs == "x^4 + 5*x^2*y + 4*y^2");
    CHECK(report.rhs == "x^4 + 5*x^2*y + 4*y^2");
}

TEST_CASE("binomial transform at n = 1") {
    auto report = check_symbolic(IdentityId::BINOM_F, 1);
    CHECK(report.pass);
    CHECK(report.lhs == "x");
}

TEST_CASE("Lucas power expansion at n = 1, m = 2") {
    auto report = check_symbolic(IdentityId::LUCAS_POWER, 1, nullptr, 2);
    CHECK(report.pass);
    CHECK(report.lhs == "x^2");
    CHECK(report.rhs == "x^2");
}

TEST_CASE("generalized Simpson with params (1, x) at n = 1") {
    SeqParams params{MultiPoly(1), MultiPoly::variable(Var::x)};
    auto report = check_symbolic(IdentityId::SIMPSON_H, 1, &params, std::nullopt, "(1,x)");
    CHECK(report.pass);
    CHECK(report.rhs == "-1*y^2");
    CHECK(report.params_label == "(1,x)");
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(check_symbolic(IdentityId::SIMPSON_F, 0), DomainError);
    CHECK_THROWS_AS(check_symbolic(IdentityId::L2N_SPLIT, 0), DomainError);
    CHECK_THROWS_AS(check_symbolic(IdentityId::LUCAS_POWER, 3), DomainError);  // missing m
    CHECK_THROWS_AS(check_symbolic(IdentityId::LUCAS_POWER, 3, nullptr, 0), DomainError);
    CHECK_THROWS_AS(check_symbolic(IdentityId::QFORM_BOUNDS, 3), DomainError);
    CHECK_THROWS_AS(check_numeric(IdentityId::SIMPSON_F, SweepConfig::defaults()),
                    DomainError);
    CHECK_THROWS_AS(run_suite({IdentityId::SIMPSON_F}, 1, SweepConfig::defaults()),
                    DomainError);
}

TEST_CASE("run_suite shapes") {
    SweepConfig cfg = SweepConfig::defaults();
    auto none = run_suite({}, 16, cfg);
    CHECK(none.empty());

    auto simpson = run_suite({IdentityId::SIMPSON_F}, 4, cfg);
    REQUIRE(simpson.size() == 4);
    for (const auto& r : simpson) CHECK(r.pass);
    CHECK(simpson.front().n == 1);
    CHECK(simpson.back().n == 4);

    // parameterized identities sweep the five presets
    auto simpson_h = run_suite({IdentityId::SIMPSON_H}, 4, cfg);
    CHECK(simpson_h.size() == 5 * 4);
    CHECK(param_presets().size() == 5);

    // LUCAS_POWER sweeps m = 1..6
    auto lucas_power = run_suite({IdentityId::LUCAS_POWER}, 3, cfg);
    CHECK(lucas_power.size() == 3 * 6);

    // catalog order is preserved regardless of the requested order
    auto pair = run_suite({IdentityId::DOUBLE_STEP, IdentityId::SIMPSON_F}, 2, cfg);
    CHECK(pair.front().id == IdentityId::SIMPSON_F);
}

TEST_CASE("all symbolic identities pass up to n = 16") {
    SweepConfig cfg = SweepConfig::defaults();
    std::vector<IdentityId> ids;
    for (const auto& info : catalog())
        if (info.symbolic) ids.push_back(info.id);
    auto reports = run_suite(ids, 16, cfg);
    for (const auto& r : reports) {
        CAPTURE(identity_name(r.id));
        CAPTURE(r.n);
        CHECK(r.pass);
    }
}

TEST_CASE("numeric sweeps pass on the default grid") {
    SweepConfig cfg = SweepConfig::defaults();
    for (IdentityId id : {IdentityId::SCHUR_F, IdentityId::SCHUR_L, IdentityId::EIGVEC_A,
                          IdentityId::EIGVAL_BAN}) {
        auto report = check_numeric(id, cfg);
        CAPTURE(identity_name(id));
        CHECK(report.pass);
        CHECK(report.findings.empty());
    }
}

TEST_CASE("quadratic form bounds hold on the y = 1 slice and survey the rest") {
    auto report = check_numeric(IdentityId::QFORM_BOUNDS, SweepConfig::defaults());
    CHECK(report.pass);  // y = 1 slice is the hard gate
    // the sweep reports what it saw elsewhere instead of failing
    CHECK(report.note.find("survey") != std::string::npos);
}

TEST_CASE("empty grid is an error") {
    SweepConfig cfg = SweepConfig::defaults();
    cfg.ys = {Rat(0)};
    CHECK_THROWS_AS(check_numeric(IdentityId::SCHUR_F, cfg), EmptyGrid);
    cfg.ys.clear();
    CHECK_THROWS_AS(check_numeric(IdentityId::QFORM_BOUNDS, cfg), EmptyGrid);
}

TEST_CASE("report serialization") {
    SweepConfig cfg = SweepConfig::defaults();
    auto reports = run_suite({IdentityId::SIMPSON_F, IdentityId::LUCAS_POWER}, 3, cfg);
    auto parsed = nlohmann::json::parse(reports_to_json(reports));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == reports.size());
    for (const auto& obj : parsed) {
        CHECK(obj.contains("id"));
        CHECK(obj.contains("n"));
        CHECK(obj["status"] == "pass");
        // polynomials round-trip through the canonical grammar
        MultiPoly lhs = parse_poly(obj["lhs"].get<std::string>());
        MultiPoly rhs = parse_poly(obj["rhs"].get<std::string>());
        CHECK(lhs == rhs);
    }
    auto lp = std::find_if(parsed.begin(), parsed.end(),
                           [](const auto& o) { return o["id"] == "LUCAS_POWER"; });
    REQUIRE(lp != parsed.end());
    CHECK((*lp).contains("m"));
}

TEST_CASE("reports carry timing and the failure slot stays empty on pass") {
    auto report = check_symbolic(IdentityId::DOUBLE_STEP, 5);
    CHECK(report.pass);
    CHECK(report.failures.empty());
    CHECK(report.elapsed.count() >= 0.0);
}
