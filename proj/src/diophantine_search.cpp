#include "latdisc/diophantine_search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace latdisc {

namespace {

constexpr double kPrecisionLimit = 0x1.0p40;

// ||r alpha|| with the product's rounding folded into a single fma.
double scaled_distance(std::uint64_t r, double alpha)
{
    const double rd = static_cast<double>(r);
    const double nearest = std::nearbyint(rd * alpha);
    return std::abs(std::fma(rd, alpha, -nearest));
}

double max_distance(std::uint64_t r, const std::vector<double>& alphas)
{
    double worst = 0.0;
    for (double a : alphas) worst = std::max(worst, scaled_distance(r, a));
    return worst;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exponent)
{
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
            throw std::overflow_error("dirichlet_search: range overflow, j^(m+1) with j=" + std::to_string(base)
                                      + " m=" + std::to_string(exponent - 1) + " exceeds 64 bits");
        out *= base;
    }
    return out;
}

void for_each_lattice_point(int d, int radius, double max_norm2, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> n(static_cast<std::size_t>(d), -radius);
    while (true) {
        double r2 = 0.0;
        for (int v : n) r2 += double(v) * v;
        if (r2 > 0.0 && r2 <= max_norm2) f(n);
        int c = d - 1;
        while (c >= 0 && n[static_cast<std::size_t>(c)] == radius) n[static_cast<std::size_t>(c--)] = -radius;
        if (c < 0) break;
        ++n[static_cast<std::size_t>(c)];
    }
}

std::vector<double> merge_close(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v)
        if (out.empty() || std::abs(x - out.back()) > 1e-12) out.push_back(x);
    return out;
}

} // namespace

double nearest_integer_distance(double x) { return std::abs(x - std::nearbyint(x)); }

DirichletCertificate dirichlet_search(const std::vector<double>& alphas, std::uint64_t j)
{
    if (alphas.empty()) throw std::invalid_argument("dirichlet_search: need at least one alpha");
    if (j == 0) throw std::invalid_argument("dirichlet_search: j must be positive");
    for (double a : alphas)
        if (!std::isfinite(a) || std::abs(a) > kPrecisionLimit)
            throw std::domain_error("dirichlet_search: |alpha| > 2^40, nearest-integer distance is meaningless");

    const std::uint64_t hi = checked_power(j, alphas.size() + 1);
    const double target = 1.0 / static_cast<double>(j);
    for (std::uint64_t r = j; r <= hi; ++r) {
        const double achieved = max_distance(r, alphas);
        if (achieved < target) return {j, alphas, r, achieved, hi};
        if (r == std::numeric_limits<std::uint64_t>::max()) break;
    }
    throw std::logic_error("dirichlet_search: no witness in [j, j^(m+1)]; arithmetic is broken");
}

bool verify_certificate(const DirichletCertificate& cert)
{
    if (cert.j == 0 || cert.alphas.empty()) return false;
    std::uint64_t hi = 0;
    try {
        hi = checked_power(cert.j, cert.alphas.size() + 1);
    } catch (const std::overflow_error&) {
        return false;
    }
    if (cert.r < cert.j || cert.r > hi) return false;
    long double worst = 0.0L;
    for (double a : cert.alphas) {
        const long double t = static_cast<long double>(cert.r) * static_cast<long double>(a);
        worst = std::max(worst, std::abs(t - std::nearbyint(t)));
    }
    return worst < 1.0L / static_cast<long double>(cert.j);
}

std::vector<double> build_alpha_set(const ConvexBody& body, double M)
{
    if (!(M >= 1.0)) throw std::invalid_argument("build_alpha_set: M must be >= 1");
    const int d = body.dimension();
    const double max_norm2 = std::floor(M * M + 1e-9);

    if (const auto* e = dynamic_cast<const Ellipsoid*>(&body); e && e->is_centered_ball()) {
        // n.sigma(n) = a|n|: distinct values a*sqrt(k) for k a sum of d squares
        const auto kmax = static_cast<std::size_t>(max_norm2);
        std::vector<char> reach(kmax + 1, 0);
        reach[0] = 1;
        for (int step = 0; step < d; ++step) {
            std::vector<char> next(kmax + 1, 0);
            for (std::size_t k = 0; k <= kmax; ++k) {
                if (!reach[k]) continue;
                for (std::size_t s = 0; k + s * s <= kmax; ++s) next[k + s * s] = 1;
            }
            reach.swap(next);
        }
        std::vector<double> out;
        const double a = e->semi_axes()[0];
        for (std::size_t k = 1; k <= kmax; ++k)
            if (reach[k]) out.push_back(a * std::sqrt(static_cast<double>(k)));
        return merge_close(std::move(out));
    }

    std::vector<double> values;
    const int radius = static_cast<int>(std::floor(M + 1e-12));
    for_each_lattice_point(d, radius, max_norm2, [&](const std::vector<int>& n) {
        Point v(n.begin(), n.end());
        const double a = dot(v, body.sigma(Direction(v)));
        if (std::abs(a) < 1e-9)
            throw std::invalid_argument("build_alpha_set: n.sigma(n) vanishes; body is not centered");
        values.push_back(a);
    });
    return merge_close(std::move(values));
}

double beta_exponent(double p, int d)
{
    const double denom = 2.0 * d - p * d + p;
    if (!(denom > 0.0)) throw std::invalid_argument("beta_exponent: need p < 2d/(d-1)");
    return 2.0 * p / denom;
}

ExceptionalRadiusPlan exceptional_radii(const ConvexBody& body, double p, std::uint64_t j, bool allow_any_dimension)
{
    const int d = body.dimension();
    if (!body.is_point_symmetric()) throw std::invalid_argument("exceptional_radii: body must be point-symmetric");
    if (!allow_any_dimension && d % 4 != 1)
        throw std::invalid_argument("exceptional_radii: the dip needs d = 1 (mod 4); pass the override to explore");
    const double p_max = 2.0 * d / (d - 1.0);
    if (!(p >= 2.0 && p < p_max)) throw std::invalid_argument("exceptional_radii: need 2 <= p < 2d/(d-1)");
    if (j == 0) throw std::invalid_argument("exceptional_radii: j must be positive");

    ExceptionalRadiusPlan plan;
    plan.p = p;
    plan.d = d;
    plan.beta = beta_exponent(p, d);
    const double cutoff = std::pow(static_cast<double>(j), plan.beta);
    plan.M = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::floor(cutoff * (1.0 + 1e-12))));
    plan.alphas = build_alpha_set(body, static_cast<double>(plan.M));
    plan.certificate = dirichlet_search(plan.alphas, j);
    plan.R = static_cast<double>(plan.certificate.r);
    plan.dip_factor = 1.0 / static_cast<double>(j);
    const double L = std::log(plan.R);
    plan.log_form = (L > 1.0) ? std::pow(L / std::log(L), -1.0 / (plan.beta * d)) : std::numeric_limits<double>::quiet_NaN();
    plan.sine_bound = 2.0 * std::numbers::pi * plan.certificate.achieved;
    for (double a : plan.alphas) plan.sine_damping.push_back(std::abs(std::sin(2.0 * std::numbers::pi * plan.R * a)));
    return plan;
}

double curvature_asymmetry_scan(const ConvexBody& body, int radius)
{
    if (radius < 1) throw std::invalid_argument("curvature_asymmetry_scan: radius must be >= 1");
    double worst = 0.0;
    for_each_lattice_point(body.dimension(), radius, double(radius) * radius, [&](const std::vector<int>& n) {
        const Direction u(Point(n.begin(), n.end()));
        worst = std::max(worst, std::abs(std::pow(body.curvature(u), -0.5) - std::pow(body.curvature(-u), -0.5)));
    });
    return worst;
}

namespace {

nlohmann::json number(double v)
{
    if (std::isfinite(v)) return v;
    return nullptr;
}

} // namespace

nlohmann::json to_json(const DirichletCertificate& cert)
{
    return {{"j", cert.j},
            {"r", cert.r},
            {"achieved", cert.achieved},
            {"range", {cert.j, cert.range_hi}},
            {"m", cert.alphas.size()},
            {"alphas", cert.alphas}};
}

nlohmann::json to_json(const ExceptionalRadiusPlan& plan)
{
    return {{"p", plan.p},
            {"d", plan.d},
            {"beta", plan.beta},
            {"M", plan.M},
            {"R", plan.R},
            {"dip_factor", plan.dip_factor},
            {"log_form", number(plan.log_form)},
            {"sine_bound", plan.sine_bound},
            {"sine_damping", plan.sine_damping},
            {"certificate", to_json(plan.certificate)}};
}

} // namespace latdisc
