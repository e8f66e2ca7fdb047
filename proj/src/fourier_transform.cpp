#include "latdisc/fourier_transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

#include "latdisc/numeric.hpp"

namespace latdisc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

Complex unit_phase(double turns) { return std::polar(1.0, -2.0 * kPi * turns); } // e^{-2 pi i turns}

void enumerate_shell(int d, int N, std::vector<int>& out)
{
    std::vector<int> n(static_cast<std::size_t>(d), -N);
    const long long limit = static_cast<long long>(N) * N;
    while (true) {
        long long r2 = 0;
        for (int v : n) r2 += static_cast<long long>(v) * v;
        if (r2 > 0 && r2 <= limit) out.insert(out.end(), n.begin(), n.end());
        int c = d - 1;
        while (c >= 0 && n[static_cast<std::size_t>(c)] == N) n[static_cast<std::size_t>(c--)] = -N;
        if (c < 0) break;
        ++n[static_cast<std::size_t>(c)];
    }
}

} // namespace

double bessel_j(double nu, double x) { return std::cyl_bessel_j(nu, x); }

Complex chi_hat_exact(const Ellipsoid& body, std::span<const double> xi)
{
    const int d = body.dimension();
    if (xi.size() != static_cast<std::size_t>(d)) throw std::invalid_argument("chi_hat_exact: dimension mismatch");
    const auto axes = body.semi_axes();
    double r2 = 0.0, jac = 1.0;
    for (int i = 0; i < d; ++i) {
        const double eta = axes[i] * xi[i];
        r2 += eta * eta;
        jac *= axes[i];
    }
    const double r = std::sqrt(r2);
    const double ball = r == 0.0 ? unit_ball_volume(d) : std::pow(r, -0.5 * d) * bessel_j(0.5 * d, 2.0 * kPi * r);
    return jac * ball * unit_phase(dot(xi, body.center()));
}

Complex chi_hat_quadrature(const ConvexBody& body, std::span<const double> xi, const QuadratureOptions& options)
{
    if (body.dimension() != 2) throw std::invalid_argument("chi_hat_quadrature: planar bodies only");
    if (xi.size() != 2) throw std::invalid_argument("chi_hat_quadrature: dimension mismatch");
    const double xi2 = xi[0] * xi[0] + xi[1] * xi[1];
    if (xi2 == 0.0) return body.volume();

    // \int_\Omega e^{-2\pi i\xi\cdot y} dy = -1/(2\pi i|\xi|^2) \oint e^{-2\pi i\xi\cdot y} \xi\cdot\nu ds,
    // parametrized by the normal angle: y = sigma(t), nu = u(t), ds = dt / K.
    auto integrand = [&](double t) {
        const auto u = Direction::planar(t);
        const Point y = body.sigma(u);
        const double xu = xi[0] * u[0] + xi[1] * u[1];
        return unit_phase(xi[0] * y[0] + xi[1] * y[1]) * (xu / body.curvature(u));
    };
    const Complex scale = -1.0 / (2.0 * kPi * kI * xi2);

    // The phase turns about 2|xi|*diameter times around the loop; start resolved.
    const double needed = 8.0 * kPi * std::sqrt(xi2) * body.diameter() + 64.0;
    std::size_t n = 64;
    Complex sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) sum += integrand(2.0 * kPi * k / n);
    while (n < needed && 2 * n <= options.max_panels) {
        for (std::size_t k = 0; k < n; ++k) sum += integrand(2.0 * kPi * (2 * k + 1) / (2 * n));
        n *= 2;
    }
    Complex previous = scale * sum * (2.0 * kPi / n);
    while (2 * n <= options.max_panels) {
        for (std::size_t k = 0; k < n; ++k) sum += integrand(2.0 * kPi * (2 * k + 1) / (2 * n));
        n *= 2;
        const Complex current = scale * sum * (2.0 * kPi / n);
        if (std::abs(current - previous) < options.tolerance) return current;
        previous = current;
    }
    throw std::runtime_error("chi_hat_quadrature: no convergence within " + std::to_string(options.max_panels)
                             + " panels");
}

Complex chi_hat(const ConvexBody& body, std::span<const double> xi)
{
    if (const auto* e = dynamic_cast<const Ellipsoid*>(&body)) return chi_hat_exact(*e, xi);
    return chi_hat_quadrature(body, xi);
}

Complex chi_hat_leading(const ConvexBody& body, std::span<const double> xi)
{
    const int d = body.dimension();
    if (xi.size() != static_cast<std::size_t>(d)) throw std::invalid_argument("chi_hat_leading: dimension mismatch");
    const double r = norm(xi);
    if (r == 0.0) throw std::invalid_argument("chi_hat_leading: xi must be nonzero");
    const Direction u(xi);
    const Direction v = -u;
    const double shift = (d - 1) / 8.0;
    const Complex plus = std::pow(body.curvature(u), -0.5) * unit_phase(dot(xi, body.sigma(u)) - shift);
    const Complex minus = std::pow(body.curvature(v), -0.5) * unit_phase(dot(xi, body.sigma(v)) + shift);
    return -1.0 / (2.0 * kPi * kI) * std::pow(r, -0.5 * (d + 1)) * (plus - minus);
}

std::vector<Direction> sample_directions(int dimension, int count)
{
    std::vector<Direction> dirs;
    dirs.reserve(static_cast<std::size_t>(count));
    if (dimension == 2) {
        for (int i = 0; i < count; ++i) dirs.push_back(Direction::planar(2.0 * kPi * i / count));
        return dirs;
    }
    std::mt19937_64 gen(0x5eed5eedULL);
    Point g(static_cast<std::size_t>(dimension));
    while (dirs.size() < static_cast<std::size_t>(count)) {
        for (auto& c : g) {
            const double u1 = 1.0 - uniform01(gen), u2 = uniform01(gen);
            c = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
        }
        if (norm(g) > 1e-6) dirs.emplace_back(std::span<const double>(g));
    }
    return dirs;
}

double decay_constant(const ConvexBody& body, double rho_min, double rho_max, int direction_count,
                      const DecayOptions& options)
{
    if (!(rho_min > 0.0) || !(rho_max > rho_min)) throw std::invalid_argument("decay_constant: need 0 < rho_min < rho_max");
    if (direction_count < 1) throw std::invalid_argument("decay_constant: need at least one direction");
    const int d = body.dimension();
    const double power = 0.5 * (d + 1);
    const double wanted = std::ceil((rho_max - rho_min) * options.radii_per_unit * body.diameter());
    const bool closed_form = dynamic_cast<const Ellipsoid*>(&body) != nullptr;
    const auto cap = closed_form ? options.max_radii : std::min(options.max_radii, options.max_radii_quadrature);
    const auto radii = static_cast<std::size_t>(std::clamp(wanted, static_cast<double>(std::min(options.min_radii, cap)),
                                                           static_cast<double>(std::max<std::size_t>(cap, 2))));
    const double step = (rho_max - rho_min) / static_cast<double>(radii - 1);

    double best = 0.0;
    for (const auto& u : sample_directions(d, direction_count)) {
        auto scaled = [&](double rho) {
            rho = std::clamp(rho, rho_min, rho_max);
            Point xi(u.components().begin(), u.components().end());
            for (auto& c : xi) c *= rho;
            return std::pow(rho, power) * std::abs(chi_hat(body, xi));
        };
        std::size_t arg = 0;
        double top = -1.0;
        for (std::size_t i = 0; i < radii; ++i) {
            const double v = scaled(rho_min + step * static_cast<double>(i));
            if (v > top) {
                top = v;
                arg = i;
            }
        }
        const double centre = rho_min + step * static_cast<double>(arg);
        const auto refined = golden_maximize(scaled, std::max(rho_min, centre - step), std::min(rho_max, centre + step), 1e-10);
        best = std::max({best, top, refined.value});
    }
    return best;
}

double SpectralSequence::tail_power_sum(double q) const
{
    const double d = dimension;
    const double excess = 0.5 * (d + 1) * q - d;
    if (excess <= 0.0) return std::numeric_limits<double>::infinity();
    const double c = 0.5 * std::sqrt(d);
    const double s0 = shell - 2.0 * c;
    if (s0 <= 0.0) return std::numeric_limits<double>::infinity();
    const double amplitude = decay_constant * std::pow(R, 0.5 * (d - 1));
    return unit_sphere_area(dimension) * std::pow(1.0 + c / s0, d - 1) * std::pow(amplitude, q) * std::pow(s0, -excess)
           / excess;
}

SpectralSequence spectral_sequence(const ConvexBody& body, double R, int shell, const SequenceOptions& options)
{
    if (!(R > 0.0)) throw std::invalid_argument("spectral_sequence: R must be positive");
    if (shell < 1) throw std::invalid_argument("spectral_sequence: shell radius must be >= 1");
    const int d = body.dimension();

    SpectralSequence seq;
    seq.body_id = body.id();
    seq.dimension = d;
    seq.R = R;
    seq.shell = shell;
    seq.tail_exponent = 0.5 * (d + 1);
    enumerate_shell(d, shell, seq.frequencies);
    const std::size_t count = seq.frequencies.size() / static_cast<std::size_t>(d);
    seq.values.assign(count, Complex{});

    const double scale = std::pow(R, d);
    parallel_for(count, options.threads, [&](std::size_t i) {
        Point xi(static_cast<std::size_t>(d));
        const auto n = seq.frequency(i);
        for (int c = 0; c < d; ++c) xi[static_cast<std::size_t>(c)] = R * n[static_cast<std::size_t>(c)];
        seq.values[i] = scale * chi_hat(body, xi);
    });

    const double lo = std::max(1e-3, R * (shell - std::sqrt(static_cast<double>(d))));
    const double hi = std::max(lo * 1.5, options.decay_window * R * shell);
    seq.decay_constant = decay_constant(body, lo, hi, options.decay_directions, options.decay);
    return seq;
}

void write_csv(std::ostream& out, const SpectralSequence& seq)
{
    out << "# body=" << seq.body_id << " R=" << format_double(seq.R) << " N=" << seq.shell
        << " decay_constant=" << format_double(seq.decay_constant)
        << " tail_l2=" << format_double(seq.tail_power_sum(2.0)) << '\n';
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (int n : seq.frequency(i)) out << n << ',';
        out << format_double(seq.values[i].real()) << ',' << format_double(seq.values[i].imag()) << '\n';
    }
}

} // namespace latdisc
