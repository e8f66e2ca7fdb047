#include "latdisc/chord_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "latdisc/fourier_transform.hpp"
#include "latdisc/numeric.hpp"

namespace latdisc {

namespace {

constexpr double kPi = std::numbers::pi;

void require_planar(const ConvexBody& body, const char* what)
{
    if (body.dimension() != 2) throw std::invalid_argument(std::string(what) + ": planar bodies only");
}

// Root of a monotone g on [lo, hi] with g(lo) and g(hi) of opposite signs.
template <class G>
double bisect(G&& g, double lo, double hi)
{
    const bool rising = g(lo) < g(hi);
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((g(mid) < 0.0) == rising)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

double chord_length(const ConvexBody& body, double depth, const Direction& theta)
{
    require_planar(body, "chord_length");
    if (!(depth >= 0.0)) throw std::invalid_argument("chord_length: depth must be nonnegative");
    const double t = theta.angle();
    const double level = body.support(theta) - depth;
    const double width = body.support(theta) + body.support(-theta);
    if (depth == 0.0 || depth >= width) return 0.0;

    // u(t).sigma(phi) decreases on [t, t+pi] and increases on [t-pi, t].
    auto offset = [&](double phi) {
        const Point y = body.sigma(Direction::planar(phi));
        return theta[0] * y[0] + theta[1] * y[1] - level;
    };
    const double right = bisect(offset, t, t + kPi);
    const double left = bisect(offset, t - kPi, t);
    const Point a = body.sigma(Direction::planar(right));
    const Point b = body.sigma(Direction::planar(left));
    return std::hypot(a[0] - b[0], a[1] - b[1]);
}

double podkorytov_bound(const ConvexBody& body, double rho, const Direction& theta)
{
    require_planar(body, "podkorytov_bound");
    if (!(rho > 0.0)) throw std::invalid_argument("podkorytov_bound: rho must be positive");
    const double depth = 1.0 / (2.0 * rho);
    return body.diameter() / (2.0 * rho) * (chord_length(body, depth, theta) + chord_length(body, depth, -theta));
}

double max_radius_of_curvature(const ConvexBody& body)
{
    require_planar(body, "max_radius_of_curvature");
    if (const auto* e = dynamic_cast<const Ellipsoid*>(&body)) {
        const auto a = e->semi_axes();
        const double big = std::max(a[0], a[1]), small = std::min(a[0], a[1]);
        return big * big / small;
    }
    if (const auto* s = dynamic_cast<const PlanarSupportBody*>(&body))
        return periodic_maximize([s](double t) { return s->radius_of_curvature(t); }).value;
    return periodic_maximize([&](double t) { return 1.0 / body.curvature(Direction::planar(t)); }).value;
}

bool can_roll_in_disc(const ConvexBody& body, double disc_radius)
{
    require_planar(body, "can_roll_in_disc");
    if (!(disc_radius > 0.0)) throw std::invalid_argument("can_roll_in_disc: radius must be positive");
    // equality counts as rolling; 1e-12 absorbs rounding in h + h''
    return max_radius_of_curvature(body) <= disc_radius * (1.0 + 1e-12);
}

std::vector<ChordRow> podkorytov_table(const ConvexBody& body, const std::vector<double>& radii, int direction_count)
{
    require_planar(body, "podkorytov_table");
    std::vector<ChordRow> rows;
    for (double rho : radii) {
        for (int k = 0; k < direction_count; ++k) {
            const double t = 2.0 * kPi * k / direction_count;
            const auto u = Direction::planar(t);
            const Point xi{rho * u[0], rho * u[1]};
            rows.push_back({rho, t, std::abs(chi_hat(body, xi)), podkorytov_bound(body, rho, u)});
        }
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<ChordRow>& rows)
{
    out << "rho,theta,abs_chi_hat,bound\n";
    for (const auto& r : rows)
        out << format_double(r.rho) << ',' << format_double(r.theta) << ',' << format_double(r.chi_hat_abs) << ','
            << format_double(r.bound) << '\n';
}

} // namespace latdisc
