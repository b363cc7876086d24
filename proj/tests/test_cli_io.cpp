#include <doctest.h>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "ldmax/cli_io.hpp"

using namespace ldmax;

TEST_CASE("parse model specs") {
    const TailModel p = parse_model_spec("pareto:alpha=1.5,xm=1");
    CHECK(p.family() == Family::Pareto);
    CHECK(p.alpha() == doctest::Approx(1.5));
    CHECK(p.param_xm() == doctest::Approx(1.0));

    const TailModel b = parse_model_spec("burr:c=1,k=2");
    CHECK(b.alpha() == doctest::Approx(2.0));

    // keys are case-insensitive
    const TailModel lp = parse_model_spec("LogPareto:Alpha=1,GAMMA=0.5,x0=1");
    CHECK(lp.family() == Family::LogPareto);
    CHECK(lp.param_gamma() == doctest::Approx(0.5));

    CHECK_THROWS_AS((void)parse_model_spec("logpareto:alpha=1,gamma=2,x0=1"), parse_error);
    CHECK_THROWS_AS((void)parse_model_spec("cauchy:alpha=1"), parse_error);
    CHECK_THROWS_AS((void)parse_model_spec("pareto:alpha=1"), parse_error);
    CHECK_THROWS_AS((void)parse_model_spec("pareto:alpha=1,xm=1,extra=2"), parse_error);
    CHECK_THROWS_AS((void)parse_model_spec("pareto:alpha=abc,xm=1"), parse_error);
    CHECK_THROWS_AS((void)parse_model_spec("pareto"), parse_error);
}

TEST_CASE("parse set specs") {
    const BorelSubset a = parse_set_spec("(2,3]U[5,inf)");
    REQUIRE(a.intervals().size() == 2);
    CHECK(a.intervals()[0].low == 2.0);
    CHECK_FALSE(a.intervals()[0].low_closed);
    CHECK(a.intervals()[0].high_closed);
    CHECK(std::isinf(a.intervals()[1].high));

    const BorelSubset merged = parse_set_spec("[1,2)U(1.5,3)");
    REQUIRE(merged.intervals().size() == 1);
    CHECK(merged.intervals()[0].low == 1.0);
    CHECK(merged.intervals()[0].high == 3.0);
    CHECK(merged.intervals()[0].low_closed);
    CHECK_FALSE(merged.intervals()[0].high_closed);

    const BorelSubset e_set = parse_set_spec("(e,inf)");
    CHECK(e_set.intervals()[0].low == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    const BorelSubset ek = parse_set_spec("(e^0.5,e^2]");
    CHECK(ek.intervals()[0].low == doctest::Approx(std::exp(0.5)).epsilon(1e-15));
    CHECK(ek.intervals()[0].high == doctest::Approx(std::exp(2.0)).epsilon(1e-15));

    CHECK_THROWS_AS((void)parse_set_spec("(0.5,2)"), parse_error);
    CHECK_THROWS_AS((void)parse_set_spec("(3,2)"), parse_error);
    CHECK_THROWS_AS((void)parse_set_spec("(2,3"), parse_error);
    CHECK_THROWS_AS((void)parse_set_spec("(2,3)X(4,5)"), parse_error);
    CHECK_THROWS_AS((void)parse_set_spec(""), parse_error);
}

TEST_CASE("parse n grids") {
    const auto g = parse_n_grid("100,1e4,10^6");
    REQUIRE(g.size() == 3);
    CHECK(g[0] == 100);
    CHECK(g[1] == 10000);
    CHECK(g[2] == 1000000);
    CHECK_THROWS_AS((void)parse_n_grid("10^0.5"), parse_error);
    CHECK_THROWS_AS((void)parse_n_grid("2.5"), parse_error);
    CHECK_THROWS_AS((void)parse_n_grid(""), parse_error);
    CHECK_THROWS_AS((void)parse_n_grid("100,,200"), parse_error);
}

TEST_CASE("value formatting") {
    CHECK(format_value(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_value(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(format_value(0.5) == "0.5");
    // 17 significant digits round-trip doubles exactly
    const double v = 0.00995016625083194;
    CHECK(std::stod(format_value(v)) == v);
}

TEST_CASE("rate table emission") {
    CHECK(emit_rate_table({}, OutputFormat::Csv) == "n,prob,r_n,target,gap\n");

    RatePoint pt;
    pt.n = 100;
    pt.prob = 0.00995016625083194;
    pt.r_n = -1.0010865;
    pt.target = -1.0;
    pt.gap = -0.0010865;
    const std::string csv = emit_rate_table({pt}, OutputFormat::Csv);
    CHECK(csv == "n,prob,r_n,target,gap\n100,0.0099501662508319402,"
                 "-1.0010865,-1,-0.0010865\n");

    // JSON round-trips the numbers
    const std::string js = emit_rate_table({pt}, OutputFormat::Json);
    const auto parsed = nlohmann::json::parse(js);
    CHECK(parsed[0]["n"] == 100);
    CHECK(parsed[0]["prob"].get<double>() == pt.prob);
    CHECK(parsed[0]["gap"].get<double>() == pt.gap);

    // null sets emit "-inf" sentinels, never NaN text
    RatePoint null_pt;
    null_pt.n = 100;
    null_pt.prob = 0.0;
    null_pt.r_n = -std::numeric_limits<double>::infinity();
    null_pt.target = null_pt.r_n;
    null_pt.gap = 0.0;
    const std::string null_csv = emit_rate_table({null_pt}, OutputFormat::Csv);
    CHECK(null_csv.find("-inf") != std::string::npos);
    CHECK(null_csv.find("nan") == std::string::npos);
}

TEST_CASE("ruin table emission") {
    RuinRow row;
    row.n = 1000;
    row.premium = 2.5;
    row.rp_exact = 1e-3;
    DecayFit fit;
    fit.slope = -1.0;
    fit.intercept = 0.5;
    fit.target = -1.0;
    fit.residual_max = 0.01;
    const std::string csv = emit_ruin_table({row}, fit, OutputFormat::Csv);
    CHECK(csv == "n,premium,rp_exact,rp_mc,ci_low,ci_high\n1000,2.5,0.001,,,\n");

    const std::string js = emit_ruin_table({row}, fit, OutputFormat::Json);
    const auto parsed = nlohmann::json::parse(js);
    CHECK(parsed["rows"][0]["rp_mc"].is_null());
    CHECK(parsed["summary"]["slope"].get<double>() == -1.0);
    CHECK(parsed["summary"]["residual_max"].get<double>() == 0.01);
}

TEST_CASE("report and sample emission") {
    DiagnosticReport rep;
    rep.check_name = "frechet";
    rep.grid = {0.1, 1.0};
    rep.values = {1e-5, 2e-5};
    rep.pass = true;
    rep.supremum = 2e-5;
    const std::string csv = emit_report(rep, OutputFormat::Csv);
    CHECK(csv == "check,point,value\nfrechet," + format_value(0.1) + ","
                     + format_value(1e-5) + "\nfrechet,1," + format_value(2e-5) + "\n");
    const auto js = nlohmann::json::parse(emit_report(rep, OutputFormat::Json));
    CHECK(js["pass"] == true);
    CHECK(js["points"].size() == 2);

    CHECK(emit_samples({2.0, 3.5}, OutputFormat::Csv) == "value\n2\n3.5\n");
}

TEST_CASE("byte determinism of emission") {
    RatePoint pt;
    pt.n = 1000;
    pt.prob = 1.0 / 3.0;
    pt.r_n = -0.1591;
    pt.target = -0.0;
    pt.gap = -0.1591;
    const auto a = emit_rate_table({pt}, OutputFormat::Json);
    const auto b = emit_rate_table({pt}, OutputFormat::Json);
    CHECK(a == b);
}
