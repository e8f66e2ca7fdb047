#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "latdisc/diophantine_search.hpp"
#include "latdisc/numeric.hpp"
#include "oracles.hpp"

using namespace latdisc;
using doctest::Approx;

TEST_CASE("nearest integer distance")
{
    CHECK(nearest_integer_distance(3.7) == Approx(0.3).epsilon(1e-14));
    CHECK(nearest_integer_distance(-0.5) == 0.5);
    CHECK(nearest_integer_distance(2.0) == 0.0);
    CHECK(nearest_integer_distance(-7.25) == 0.25);
}

TEST_CASE("dirichlet examples")
{
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
    const auto a = dirichlet_search({s2}, 5);
    CHECK(a.r == 5);
    CHECK(a.achieved == Approx(std::abs(5 * s2 - 7)).epsilon(1e-12));
    CHECK(a.achieved == Approx(0.0711).epsilon(1e-3));
    CHECK(a.range_hi == 25);
    CHECK(verify_certificate(a));
    CHECK(oracle::brute_dirichlet({s2}, 5) == 5);

    const auto b = dirichlet_search({s2, s3}, 3);
    CHECK(b.r == 3);
    CHECK(b.achieved == Approx(std::max(nearest_integer_distance(3 * s2), nearest_integer_distance(3 * s3))));
    CHECK(b.achieved == Approx(0.2426).epsilon(1e-3));
    CHECK(oracle::brute_dirichlet({s2, s3}, 3) == 3);

    CHECK(dirichlet_search({0.123456}, 1).r == 1);
    CHECK(dirichlet_search({std::numbers::pi, std::numbers::e}, 1).r == 1);
}

TEST_CASE("search matches brute force")
{
    std::mt19937_64 gen(77);
    for (int t = 0; t < 100; ++t) {
        const std::size_t m = 1 + gen() % 3;
        std::vector<double> alphas(m);
        for (auto& a : alphas) a = 10 * uniform01(gen);
        const std::uint64_t j = 1 + gen() % 8;
        const auto c = dirichlet_search(alphas, j);
        CHECK(c.r == oracle::brute_dirichlet(alphas, j));
        CHECK(verify_certificate(c));
    }
}

TEST_CASE("verification rejects tampering")
{
    auto c = dirichlet_search({std::sqrt(2.0)}, 5);
    c.r = 6;
    CHECK_FALSE(verify_certificate(c));
    c.r = 26;
    CHECK_FALSE(verify_certificate(c));
}

TEST_CASE("dirichlet errors")
{
    CHECK_THROWS_AS(dirichlet_search({}, 3), std::invalid_argument);
    CHECK_THROWS_AS(dirichlet_search({0.5}, 0), std::invalid_argument);
    CHECK_THROWS_AS(dirichlet_search({0x1.0p41}, 3), std::domain_error);
    CHECK_THROWS_AS(dirichlet_search(std::vector<double>(40, std::sqrt(2.0)), 4), std::overflow_error);
}

TEST_CASE("alpha sets")
{
    const auto disc = Ellipsoid::unit_ball(2);
    auto near = [](const std::vector<double>& got, const std::vector<double>& want) {
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == Approx(want[i]).epsilon(1e-14));
    };
    near(build_alpha_set(disc, 1.5), {1.0, std::sqrt(2.0)});
    near(build_alpha_set(disc, 2.0), {1.0, std::sqrt(2.0), 2.0});
    near(build_alpha_set(Ellipsoid({1.0, 0.7}), 1.0), {0.7, 1.0});
    CHECK_THROWS_AS(build_alpha_set(disc, 0.5), std::invalid_argument);

    // ball fast path against the generic enumeration on the same disc
    near(build_alpha_set(PlanarSupportBody(1.0, {}), 4.0), build_alpha_set(disc, 4.0));
    // sums of three squares up to 16 miss 7 and 15
    CHECK(build_alpha_set(Ellipsoid::unit_ball(3), 4.0).size() == 14);
}

TEST_CASE("beta")
{
    CHECK(beta_exponent(2.0, 5) == 2.0);
    CHECK(beta_exponent(2.0, 2) == 2.0);
    CHECK_THROWS_AS(beta_exponent(2.5, 5), std::invalid_argument);
}

TEST_CASE("exceptional radius in the plane")
{
    const auto disc = Ellipsoid::unit_ball(2);
    const auto plan = exceptional_radii(disc, 2.0, 2, true);
    CHECK(plan.beta == 2.0);
    CHECK(plan.M == 4);
    // distinct |n| over 0 < |n| <= 4: k in {1,2,4,5,8,9,10,13,16}
    REQUIRE(plan.alphas.size() == 9);
    CHECK(plan.alphas[2] == Approx(2.0));
    CHECK(plan.alphas[6] == Approx(std::sqrt(10.0)));
    CHECK(verify_certificate(plan.certificate));
    CHECK(plan.certificate.achieved < 0.5);
    CHECK(plan.certificate.r == oracle::brute_dirichlet(plan.alphas, 2));
    for (double s : plan.sine_damping) CHECK(s <= plan.sine_bound * (1 + 1e-12));
    CHECK(plan.sine_bound <= 2 * std::numbers::pi / 2);
}

TEST_CASE("exceptional radius of the ball in R^5")
{
    const auto ball = Ellipsoid::unit_ball(5);
    const auto plan = exceptional_radii(ball, 2.0, 2);
    CHECK(plan.M == 4);
    CHECK(plan.alphas.size() == 16);
    CHECK(plan.R == 2.0);
    CHECK(plan.dip_factor == 0.5);
    CHECK(std::isnan(plan.log_form));
    const auto json = to_json(plan);
    CHECK(json["log_form"].is_null());
    CHECK(json["certificate"]["r"] == 2);

    // j = 1 gives R_1 = 1
    CHECK(exceptional_radii(ball, 2.0, 1).R == 1.0);
    // j = 4 needs j^{m+1} with m = 256 alphas
    CHECK_THROWS_AS(exceptional_radii(ball, 2.0, 4), std::overflow_error);
}

TEST_CASE("exceptional radius preconditions")
{
    CHECK_THROWS_AS(exceptional_radii(reference_asymmetric_body(), 2.0, 2, true), std::invalid_argument);
    CHECK_THROWS_AS(exceptional_radii(Ellipsoid::unit_ball(2), 2.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(exceptional_radii(Ellipsoid::unit_ball(5), 2.5, 2), std::invalid_argument);
    CHECK_THROWS_AS(exceptional_radii(Ellipsoid::unit_ball(5), 1.5, 2), std::invalid_argument);
}

TEST_CASE("curvature asymmetry")
{
    CHECK(curvature_asymmetry_scan(Ellipsoid::unit_ball(2)) < 1e-12);
    CHECK(curvature_asymmetry_scan(PlanarSupportBody(1.0, {{2, 0.05, 0.0}})) < 1e-12);
    CHECK(curvature_asymmetry_scan(reference_asymmetric_body()) > 0.1);
}
