#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qboson/suite.hpp"

using namespace qboson;

namespace {

SuiteConfig base_config() {
    SuiteConfig config;
    config.n = 1;
    config.cutoff = 3;
    config.lmax = 1;
    config.modes = {ParamMode::ThreeParam};
    config.checks = {CheckKind::Pieri};
    config.random.seed = 7;
    config.random.count = 2;
    return config;
}

} // namespace

TEST_CASE("single-particle Pieri suite passes") {
    const SuiteReport report = run_suite(base_config());
    CHECK(report.pass);
    REQUIRE(report.results.size() == 2);
    for (const CheckUnitResult& r : report.results) {
        CHECK(r.check == CheckKind::Pieri);
        CHECK(r.cases == 4);  // lambda_1 <= 3, l = 1
        CHECK(r.failed == 0);
    }
}

TEST_CASE("literal variant fails with the canonical witness") {
    SuiteConfig config = base_config();
    config.variant = CoeffVariant::LiteralInnerSum;
    const SuiteReport report = run_suite(config);
    CHECK_FALSE(report.pass);
    REQUIRE_FALSE(report.results.empty());
    const CheckUnitResult& unit = report.results.front();
    CHECK(unit.failed > 0);
    REQUIRE_FALSE(unit.failures.empty());
    // the failing report carries lambda, l, params and the residual so the
    // case is reproducible through the query commands
    const Json& witness = unit.failures.front();
    CHECK(witness.contains("lambda"));
    CHECK(witness.contains("l"));
    CHECK(witness.contains("residual"));
    CHECK_FALSE(witness["residual"].empty());
    // residual at lambda = (0) is the constant -t0
    CHECK(witness["lambda"] == Json::array({0}));
    CHECK(witness["residual"][0]["coeff"] == to_json(-unit.params.t0));
}

TEST_CASE("reports are byte-identical for identical configs") {
    SuiteConfig config = base_config();
    config.checks = {CheckKind::Pieri, CheckKind::Gauge, CheckKind::Commute};
    config.n = 2;
    config.cutoff = 2;
    config.lmax = 2;
    config.modes = {ParamMode::ThreeParam, ParamMode::FourParam};
    const std::string first = run_suite(config).to_json(false).dump(2);
    const std::string second = run_suite(config).to_json(false).dump(2);
    CHECK(first == second);

    // scheduling must not leak into the report
    SuiteConfig serial = config;
    serial.threads = 1;
    SuiteConfig parallel = config;
    parallel.threads = 4;
    CHECK(run_suite(serial).to_json(false).dump(2) ==
          run_suite(parallel).to_json(false).dump(2));
}

TEST_CASE("explicit degenerate tuples are rejected") {
    SuiteConfig config = base_config();
    RawParams bad{Rational(1), Rational(1, 5), Rational(1, 7), Rational(1, 11), Rational(0)};
    config.explicit_tuples = {bad};
    CHECK_THROWS_AS(run_suite(config), ParameterDegeneracy);
}

TEST_CASE("config validation") {
    SuiteConfig config = base_config();
    config.cutoff = 0;
    CHECK_THROWS_AS(run_suite(config), ConfigError);
    config = base_config();
    config.lmax = 2;  // > n
    CHECK_THROWS_AS(run_suite(config), ConfigError);
    config = base_config();
    config.modes = {};
    CHECK_THROWS_AS(run_suite(config), ConfigError);
}

TEST_CASE("random tuples are generic and reproducible") {
    std::mt19937_64 a(99), b(99);
    int redraws_a = 0, redraws_b = 0;
    for (int i = 0; i < 5; ++i) {
        const RawParams va = draw_tuple(ParamMode::FourParam, a, 13, 3, redraws_a);
        const RawParams vb = draw_tuple(ParamMode::FourParam, b, 13, 3, redraws_b);
        CHECK(va.t == vb.t);
        CHECK(va.t3 == vb.t3);
        CHECK(generic_for_suite(ParamMode::FourParam, va, 3));
    }
    CHECK(redraws_a == redraws_b);
}

TEST_CASE("degeneration checks run in both directions") {
    SuiteConfig config;
    config.n = 2;
    config.cutoff = 2;
    config.modes = {ParamMode::ThreeParam, ParamMode::FourParam};
    config.checks = {CheckKind::Degenerate};
    config.random.seed = 5;
    config.random.count = 1;
    const SuiteReport report = run_suite(config);
    CHECK(report.pass);
    REQUIRE(report.results.size() == 2);
    CHECK(report.results[0].mode == ParamMode::ThreeParam);
    CHECK(report.results[1].mode == ParamMode::FourParam);
    for (const CheckUnitResult& r : report.results) CHECK(r.cases > 0);
}

TEST_CASE("full small suite passes every check") {
    SuiteConfig config;
    config.n = 2;
    config.cutoff = 2;
    config.modes = {ParamMode::ThreeParam, ParamMode::FourParam};
    config.random.seed = 11;
    config.random.count = 1;
    const SuiteReport report = run_suite(config);
    CHECK(report.pass);
    // all six checks, two modes, one tuple
    CHECK(report.results.size() == 12);
    const Json j = report.to_json(false);
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() == 12);
}
