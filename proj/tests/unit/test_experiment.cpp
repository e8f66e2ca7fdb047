#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "latdisc/experiment.hpp"

using namespace latdisc;
using doctest::Approx;

namespace {

SweepConfig disc_config(std::vector<double> radii, std::vector<double> p, std::size_t samples, std::uint64_t seed)
{
    SweepConfig c;
    c.body = std::make_shared<Ellipsoid>(Ellipsoid::unit_ball(2));
    c.radii = std::move(radii);
    c.exponents = std::move(p);
    c.samples = samples;
    c.seed = seed;
    return c;
}

std::string csv(const SweepTable& t)
{
    std::ostringstream s;
    write_csv(s, t);
    return s.str();
}

} // namespace

TEST_CASE("default schedule")
{
    const auto r = default_schedule(6, 9);
    REQUIRE(r.size() == 4);
    CHECK(r[0] == Approx(8.08));
    CHECK(r[2] == Approx(16.16));
    CHECK(r[1] == Approx(1.01 * std::pow(2.0, 3.5)));
}

TEST_CASE("config validation")
{
    auto c = disc_config({}, {2.0}, 1000, 1);
    try {
        c.validate();
        FAIL("expected an error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()) == "empty schedule");
    }
    CHECK_THROWS_AS(run_sweep(c), std::invalid_argument);
    c.radii = {4.0, 4.0};
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.radii = {4.0, 8.0};
    c.samples = 99;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.samples = 100;
    c.shell = 7;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.shell = 8;
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("sweep is byte-reproducible")
{
    auto c = disc_config({4.0, 8.0}, {2.0}, 1000, 7);
    const auto a = csv(run_sweep(c));
    const auto b = csv(run_sweep(c));
    CHECK(a == b);
    c.threads = 2;
    CHECK(csv(run_sweep(c)) == a);
    c.seed = 8;
    CHECK(csv(run_sweep(c)) != a);
    CHECK(a.rfind("body,R,p,strong,weak,sup,samples,stderr\ndisc,4,2,", 0) == 0);
}

TEST_CASE("sweep rows and csv round trip")
{
    auto c = disc_config({3.1, 5.3}, {1.0, 2.0, std::numeric_limits<double>::infinity()}, 300, 3);
    const auto t = run_sweep(c);
    REQUIRE(t.rows.size() == 6);
    CHECK(t.rows[0].R == 3.1);
    CHECK(t.rows[2].report.p == std::numeric_limits<double>::infinity());
    CHECK(t.spectral.size() == 4);
    for (const auto& r : t.rows) {
        CHECK(r.report.weak <= r.report.strong * (1 + 1e-14));
        CHECK(r.report.strong <= r.report.sup * (1 + 1e-14));
    }
    std::istringstream in(csv(t));
    const auto back = read_sweep_csv(in);
    CHECK(csv(back) == csv(t));
    CHECK(t.column(2.0, "weak").size() == 2);
    CHECK_THROWS_AS(t.column(2.0, "median"), std::invalid_argument);
}

TEST_CASE("strong L2 against the Parseval value")
{
    auto c = disc_config({2.0}, {2.0}, 200000, 11);
    c.shell = 64;
    const auto t = run_sweep(c);
    const auto& rep = t.rows.at(0).report;
    const auto& sp = t.spectral.at(0);
    const double e = 3 * rep.strong_stderr();
    CHECK(rep.strong >= sp.lq_truncated - e);
    CHECK(rep.strong <= sp.lq_upper + e);
}

TEST_CASE("refined sup is at least the sample max")
{
    const auto disc = Ellipsoid::unit_ball(2);
    const auto field = discrepancy_field(disc, 9.7, MonteCarlo{500, 2});
    const double s = refined_sup(disc, field);
    CHECK(s >= sup_norm(field.values));
    // it is an attained value of |D|, so it lies below the crude box bound
    CHECK(s <= std::pow(2 * 9.7 * 2 + 3, 2));
}

TEST_CASE("sup column stays below the crude growth bound")
{
    std::vector<double> radii;
    for (int k = 0; k <= 8; ++k) radii.push_back(8 * std::pow(2.0, 0.5 * k));
    auto c = disc_config(radii, {std::numeric_limits<double>::infinity()}, 20000, 5);
    const auto t = run_sweep(c);
    const auto col = t.column(std::numeric_limits<double>::infinity(), "sup");
    const double exponent = 2.0 * 1.0 / 3.0; // d(d-1)/(d+1), d = 2
    const double C = col.front().second / std::pow(col.front().first, exponent);
    for (const auto& [R, v] : col) {
        INFO("R=" << R << " sup=" << v << " bound=" << C * std::pow(R, exponent));
        CHECK(v <= C * std::pow(R, exponent));
    }
}

TEST_CASE("exponent fits")
{
    std::vector<std::pair<double, double>> pts, logged;
    for (int k = 0; k < 10; ++k) {
        const double R = 8 * std::pow(2.0, 0.5 * k);
        pts.emplace_back(R, 3 * std::sqrt(R));
        logged.emplace_back(R, std::sqrt(R) * std::pow(std::log(R), 0.25));
    }
    const auto a = fit_exponent(pts);
    CHECK(std::abs(a.slope - 0.5) < 1e-12);
    CHECK(a.residual_rms < 1e-12);
    CHECK(a.intercept == Approx(std::log(3.0)).epsilon(1e-12));
    CHECK(a.points == 10);
    const auto b = fit_exponent(logged, 0.25);
    CHECK(std::abs(b.slope - 0.5) < 1e-12);
    CHECK(std::abs(fit_exponent(logged).slope - 0.5) > 1e-3);
    const auto w = fit_exponent(pts, 0.0, 20.0);
    CHECK(w.r_min >= 20.0);
    CHECK(w.r_max == Approx(8 * std::pow(2.0, 4.5)));

    CHECK_THROWS_AS(fit_exponent(std::vector<std::pair<double, double>>(pts.begin(), pts.begin() + 3)), std::invalid_argument);
    auto bad = pts;
    bad[4].second = 0.0;
    CHECK_THROWS_AS(fit_exponent(bad), std::invalid_argument);
}

TEST_CASE("dip experiment")
{
    const auto ball = Ellipsoid::unit_ball(5);
    DipOptions o;
    o.samples = 100;
    o.seed = 9;
    o.random_radii = 3;
    const auto t = dip_experiment(ball, 2.0, {1, 2}, o);
    REQUIRE(t.notices.size() == 1);
    CHECK(t.notices[0].find("j=1") == 0);
    REQUIRE(t.rows.size() == 4);
    CHECK(t.rows[0].kind == "exceptional");
    CHECK(t.rows[0].R == 2.0);
    CHECK(t.rows[0].ratio > 0.0);
    for (std::size_t i = 1; i < 4; ++i) {
        CHECK(t.rows[i].kind == "random");
        CHECK(t.rows[i].R >= 2.0);
        CHECK(t.rows[i].R < 10.0);
    }
    const auto again = dip_experiment(ball, 2.0, {1, 2}, o);
    std::ostringstream a, b;
    write_csv(a, t);
    write_csv(b, again);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("# j=1", 0) == 0);

    CHECK_THROWS_AS(dip_experiment(reference_asymmetric_body(), 2.0, {2}, o), std::invalid_argument);
}

TEST_CASE("gnuplot scripts name their data")
{
    for (const char* kind : {"sweep", "chords", "dip", "field"}) {
        const auto s = gnuplot_script("out.csv", kind);
        CHECK(s.find("'out.csv'") != std::string::npos);
    }
}
