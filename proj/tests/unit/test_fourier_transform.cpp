#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "latdisc/fourier_transform.hpp"
#include "oracles.hpp"

using namespace latdisc;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;

// The unit disc as a support body, so chi_hat takes the quadrature path.
PlanarSupportBody disc_by_support() { return PlanarSupportBody(1.0, {}, "disc_q"); }
} // namespace

TEST_CASE("bessel against the integral representation")
{
    for (int n : {0, 1, 2, 5})
        for (double x : {0.1, 1.0, 6.283185307179586, 17.3, 95.0, 400.0})
            CHECK(std::abs(bessel_j(n, x) - oracle::bessel_integral(n, x)) < 1e-12);
    for (double z : {0.5, 3.0, 10.0, 77.7})
        CHECK(bessel_j(1.5, z) == Approx(oracle::bessel_three_halves(z)).epsilon(1e-12));
}

TEST_CASE("zero frequency gives the volume")
{
    const Ellipsoid ell({1.2, 0.5, 0.9}, {0.3, 0.1, -0.2});
    CHECK(chi_hat_exact(ell, std::vector<double>{0, 0, 0}).real() == Approx(ell.volume()).epsilon(1e-14));
    CHECK(chi_hat_exact(ell, std::vector<double>{0, 0, 0}).imag() == 0.0);
    const auto asym = reference_asymmetric_body();
    const auto v = chi_hat_quadrature(asym, std::vector<double>{0, 0});
    CHECK(v.real() == Approx(asym.volume()).epsilon(1e-12));
    CHECK(std::abs(v.imag()) < 1e-12);
}

TEST_CASE("disc transform at (1, 0)")
{
    const auto disc = Ellipsoid::unit_ball(2);
    const std::vector<double> xi{1.0, 0.0};
    const Complex exact = chi_hat_exact(disc, xi);
    const double j1 = oracle::bessel_integral(1, 2 * pi);
    CHECK(exact.real() == Approx(j1).epsilon(1e-12));
    CHECK(exact.imag() == 0.0);
    CHECK(std::abs(exact - oracle::disc_chi_hat_polar(1.0, 0.0)) < 1e-8);
    CHECK(std::abs(chi_hat_quadrature(disc, xi) - exact) < 1e-8);
    CHECK(std::abs(chi_hat(disc_by_support(), xi) - exact) < 1e-8);
}

TEST_CASE("disc transform in oblique directions against the polar oracle")
{
    const auto disc = Ellipsoid::unit_ball(2);
    for (const auto& [a, b] : std::vector<std::pair<double, double>>{{0.3, 0.4}, {-2.1, 1.7}, {3.0, -0.5}})
        CHECK(std::abs(chi_hat_exact(disc, std::vector<double>{a, b}) - oracle::disc_chi_hat_polar(a, b, 80, 512)) < 1e-8);
}

TEST_CASE("ball in R^3 at half-integer radii")
{
    const auto ball = Ellipsoid::unit_ball(3);
    for (int k = 1; k <= 12; ++k) {
        const double r = 0.5 * k;
        const double expected = std::pow(r, -1.5) * oracle::bessel_three_halves(2 * pi * r);
        const Direction u{1.0, 2.0, -2.0};
        const std::vector<double> xi{r * u[0], r * u[1], r * u[2]};
        CHECK(chi_hat_exact(ball, xi).real() == Approx(expected).epsilon(1e-11));
    }
}

TEST_CASE("ellipsoid center becomes a phase")
{
    const Ellipsoid centred({1.0, 0.7});
    const Ellipsoid moved({1.0, 0.7}, {0.25, -0.1});
    const std::vector<double> xi{1.3, -0.4};
    const double phase = -2 * pi * (1.3 * 0.25 + 0.4 * 0.1);
    const Complex expected = chi_hat_exact(centred, xi) * Complex(std::cos(phase), std::sin(phase));
    CHECK(std::abs(chi_hat_exact(moved, xi) - expected) < 1e-14);
    CHECK(std::abs(chi_hat_quadrature(moved, xi) - expected) < 1e-9);
}

TEST_CASE("quadrature is hermitian")
{
    const auto asym = reference_asymmetric_body();
    for (const auto& [a, b] : std::vector<std::pair<double, double>>{{1, 0}, {2.5, 3.1}, {-7, 4}}) {
        const auto p = chi_hat_quadrature(asym, std::vector<double>{a, b});
        const auto m = chi_hat_quadrature(asym, std::vector<double>{-a, -b});
        CHECK(std::abs(p - std::conj(m)) < 1e-12);
    }
}

TEST_CASE("leading term of the disc")
{
    const auto disc = Ellipsoid::unit_ball(2);
    for (double rho : {3.3, 10.0, 47.2}) {
        const Complex v = chi_hat_leading(disc, std::vector<double>{rho, 0.0});
        CHECK(std::abs(v.imag()) < 1e-12);
        // first term of the J_1 large-argument expansion: sqrt(2/(pi z)) cos(z - 3pi/4), z = 2 pi rho
        const double z = 2 * pi * rho;
        const double bessel_leading = std::sqrt(2 / (pi * z)) * std::cos(z - 0.75 * pi) / rho;
        CHECK(v.real() == Approx(bessel_leading).epsilon(1e-10));
        CHECK(v.real() == Approx(std::pow(rho, -1.5) * std::sin(2 * pi * (rho - 0.125)) / pi).epsilon(1e-10));
    }
}

TEST_CASE("leading term of symmetric bodies is real")
{
    const Ellipsoid ell({1.0, 0.7});
    const PlanarSupportBody cos2(1.0, {{2, 0.05, 0.0}});
    for (int i = 0; i < 16; ++i) {
        const auto u = Direction::planar(2 * pi * i / 16 + 0.1);
        const std::vector<double> xi{17.3 * u[0], 17.3 * u[1]};
        CHECK(std::abs(chi_hat_leading(ell, xi).imag()) < 1e-12);
        CHECK(std::abs(chi_hat_leading(cos2, xi).imag()) < 1e-12);
    }
    const auto asym = reference_asymmetric_body();
    CHECK(std::abs(chi_hat_leading(asym, std::vector<double>{17.3, 0.0}).imag()) > 1e-6);
}

TEST_CASE("leading term of the ball in R^5")
{
    const auto ball = Ellipsoid::unit_ball(5);
    const Direction u{1, -1, 2, 0.5, 3};
    for (double rho : {4.2, 9.9, 30.05}) {
        std::vector<double> xi(5);
        for (int i = 0; i < 5; ++i) xi[i] = rho * u[i];
        CHECK(std::abs(chi_hat_leading(ball, xi)) == Approx(std::pow(rho, -3) * std::abs(std::sin(2 * pi * rho)) / pi).epsilon(1e-10));
    }
}

TEST_CASE("leading term approximates the transform")
{
    const auto asym = reference_asymmetric_body();
    for (int i = 0; i < 8; ++i) {
        const auto u = Direction::planar(2 * pi * i / 8 + 0.2);
        for (double rho : {20.0, 60.0}) {
            const std::vector<double> xi{rho * u[0], rho * u[1]};
            // remainder is O(rho^{-5/2}) against a leading term of size rho^{-3/2}
            CHECK(std::abs(chi_hat(asym, xi) - chi_hat_leading(asym, xi)) * std::pow(rho, 2.5) < 1.0);
        }
    }
}

TEST_CASE("decay constant")
{
    const auto disc = Ellipsoid::unit_ball(2);
    const double c = decay_constant(disc, 5, 200, 8);
    CHECK(std::isfinite(c));
    CHECK(c <= 1 / pi + 0.01);
    CHECK(c >= 1 / pi - 0.01);
    CHECK(std::abs(decay_constant(disc, 5, 200, 16) / c - 1) < 0.01);

    const Ellipsoid ell({1.0, 0.7});
    const double e100 = decay_constant(ell, 5, 100, 16), e200 = decay_constant(ell, 5, 200, 16);
    CHECK(std::isfinite(e200));
    CHECK(std::abs(e200 / e100 - 1) < 0.05);
}

TEST_CASE("spectral sequence")
{
    const auto disc = Ellipsoid::unit_ball(2);
    const auto seq = spectral_sequence(disc, 3.3, 8);
    CHECK(seq.body_id == "disc");
    CHECK(seq.tail_exponent == 1.5);
    std::size_t expected = 0;
    for (int a = -8; a <= 8; ++a)
        for (int b = -8; b <= 8; ++b)
            if (a * a + b * b > 0 && a * a + b * b <= 64) ++expected;
    CHECK(seq.size() == expected);

    const auto quad = disc_by_support();
    const auto qseq = spectral_sequence(quad, 3.3, 8);
    REQUIRE(qseq.size() == seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(std::abs(seq.values[i] - qseq.values[i]) / (3.3 * 3.3) < 1e-8);

    for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto n = seq.frequency(i);
        const double r = std::hypot(n[0], n[1]);
        CHECK(std::abs(seq.values[i]) <= seq.decay_constant * std::sqrt(3.3) * std::pow(r, -1.5) * (1 + 1e-12));
    }
}

TEST_CASE("spectral sequence is hermitian")
{
    const auto asym = reference_asymmetric_body();
    const auto seq = spectral_sequence(asym, 2.7, 8);
    const std::size_t n = seq.size();
    // lexicographic order over a symmetric shell: -n sits at the mirrored index
    for (std::size_t i = 0; i < n; ++i) {
        const auto a = seq.frequency(i), b = seq.frequency(n - 1 - i);
        REQUIRE(a[0] == -b[0]);
        REQUIRE(a[1] == -b[1]);
        CHECK(std::abs(seq.values[i] - std::conj(seq.values[n - 1 - i])) < 1e-10);
    }
}

TEST_CASE("tail bound")
{
    const auto disc = Ellipsoid::unit_ball(2);
    auto seq = spectral_sequence(disc, 2.0, 16);
    CHECK(std::isinf(seq.tail_power_sum(4.0 / 3.0)));
    CHECK(std::isfinite(seq.tail_power_sum(2.0)));
    CHECK(seq.tail_power_sum(2.0) > seq.tail_power_sum(3.0));
}

TEST_CASE("transform errors")
{
    const auto disc = Ellipsoid::unit_ball(2);
    CHECK_THROWS_AS(chi_hat_leading(disc, std::vector<double>{0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(chi_hat_exact(disc, std::vector<double>{1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(chi_hat_quadrature(Ellipsoid::unit_ball(3), std::vector<double>{1, 0, 0}), std::invalid_argument);
    QuadratureOptions tight;
    tight.max_panels = 16;
    CHECK_THROWS_AS(chi_hat_quadrature(reference_asymmetric_body(), std::vector<double>{50, 0}, tight), std::runtime_error);
    CHECK_THROWS_AS(spectral_sequence(disc, -1.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(decay_constant(disc, 5, 5, 8), std::invalid_argument);
}
