#include "latdisc/convex_body.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "latdisc/numeric.hpp"

namespace latdisc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kShapeGrid = 4096;

} // namespace

bool ConvexBody::contains(std::span<const double> point, double R, std::span<const double> x) const
{
    if (!(R > 0.0)) throw std::invalid_argument("contains: R must be positive");
    const auto d = static_cast<std::size_t>(dimension());
    if (point.size() != d || x.size() != d) throw std::invalid_argument("contains: dimension mismatch");
    Point y(d);
    for (std::size_t i = 0; i < d; ++i) y[i] = (point[i] + x[i]) / R;
    return contains_point(y);
}

//---------------------------------------------------------------------------//
// Ellipsoid
//---------------------------------------------------------------------------//

Ellipsoid::Ellipsoid(std::vector<double> semi_axes, std::vector<double> center, std::string name)
    : axes_(std::move(semi_axes)), center_(std::move(center)), name_(std::move(name))
{
    if (axes_.size() < 2) throw std::invalid_argument("Ellipsoid: dimension must be >= 2");
    for (double a : axes_)
        if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("Ellipsoid: semi-axes must be positive");
    if (center_.empty()) center_.assign(axes_.size(), 0.0);
    if (center_.size() != axes_.size()) throw std::invalid_argument("Ellipsoid: center dimension mismatch");
}

Ellipsoid Ellipsoid::unit_ball(int d) { return Ellipsoid(std::vector<double>(static_cast<std::size_t>(d), 1.0)); }

bool Ellipsoid::is_centered_ball() const
{
    return std::all_of(axes_.begin(), axes_.end(), [&](double a) { return a == axes_[0]; })
           && std::all_of(center_.begin(), center_.end(), [](double c) { return c == 0.0; });
}

std::string Ellipsoid::id() const
{
    if (!name_.empty()) return name_;
    if (is_centered_ball() && axes_[0] == 1.0) return axes_.size() == 2 ? "disc" : "ball" + std::to_string(axes_.size());
    std::string s = "ellipsoid";
    for (double a : axes_) s += ":" + format_double(a);
    if (std::any_of(center_.begin(), center_.end(), [](double c) { return c != 0.0; })) {
        s += "@";
        for (std::size_t i = 0; i < center_.size(); ++i) s += (i ? ":" : "") + format_double(center_[i]);
    }
    return s;
}

double Ellipsoid::volume() const
{
    double v = unit_ball_volume(dimension());
    for (double a : axes_) v *= a;
    return v;
}

double Ellipsoid::diameter() const { return 2.0 * *std::max_element(axes_.begin(), axes_.end()); }

double Ellipsoid::scaled_norm(const Direction& u) const
{
    double s = 0.0;
    for (std::size_t i = 0; i < axes_.size(); ++i) s += (axes_[i] * u[i]) * (axes_[i] * u[i]);
    return std::sqrt(s);
}

double Ellipsoid::support(const Direction& u) const { return dot(u.components(), center_) + scaled_norm(u); }

Point Ellipsoid::sigma(const Direction& u) const
{
    const double s = scaled_norm(u);
    Point p(axes_.size());
    for (std::size_t i = 0; i < axes_.size(); ++i) p[i] = center_[i] + axes_[i] * axes_[i] * u[i] / s;
    return p;
}

double Ellipsoid::curvature(const Direction& u) const
{
    double prod = 1.0;
    for (double a : axes_) prod *= a * a;
    return std::pow(scaled_norm(u), dimension() + 1) / prod;
}

bool Ellipsoid::contains_point(std::span<const double> y) const
{
    double s = 0.0;
    for (std::size_t i = 0; i < axes_.size(); ++i) {
        const double t = (y[i] - center_[i]) / axes_[i];
        s += t * t;
    }
    return s <= 1.0;
}

std::optional<Interval> Ellipsoid::slice_range(std::span<const double> prefix) const
{
    const std::size_t m = prefix.size();
    double budget = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double t = (prefix[i] - center_[i]) / axes_[i];
        budget -= t * t;
    }
    if (budget < 0.0) return std::nullopt;
    const double half = axes_[m] * std::sqrt(budget);
    return Interval{center_[m] - half, center_[m] + half};
}

//---------------------------------------------------------------------------//
// PlanarSupportBody
//---------------------------------------------------------------------------//

PlanarSupportBody::PlanarSupportBody(double c0, std::vector<Harmonic> harmonics, std::string name)
    : c0_(c0), name_(std::move(name)), steiner_{0.0, 0.0}
{
    std::map<int, std::pair<double, double>> merged;
    for (const auto& hm : harmonics) {
        if (hm.k < 1) throw std::invalid_argument("PlanarSupportBody: harmonic order must be >= 1");
        auto& [a, b] = merged[hm.k];
        a += hm.a;
        b += hm.b;
    }
    for (const auto& [k, ab] : merged) {
        if (k == 1) {
            steiner_ = {ab.first, ab.second};
            continue;
        }
        if (ab.first != 0.0 || ab.second != 0.0) harmonics_.push_back({k, ab.first, ab.second});
    }

    for (int i = 0; i < kShapeGrid; ++i) {
        const double rho = radius_of_curvature(2.0 * kPi * i / kShapeGrid);
        if (!(rho > 0.0))
            throw std::invalid_argument("PlanarSupportBody: radius of curvature h + h'' must be positive");
    }

    if (name_.empty()) {
        name_ = "support:" + format_double(c0_);
        for (const auto& hm : harmonics_)
            name_ += ":" + std::to_string(hm.k) + "/" + format_double(hm.a) + "/" + format_double(hm.b);
    }

    volume_ = kPi * c0_ * c0_;
    for (const auto& hm : harmonics_)
        volume_ += 0.5 * kPi * (1.0 - double(hm.k) * hm.k) * (hm.a * hm.a + hm.b * hm.b);

    diameter_ = periodic_maximize([this](double t) { return h(t) + h(t + kPi); }).value;

    // centroid = (1/(3A)) \oint rho h sigma dtheta (trapezoid, spectrally accurate)
    double cx = 0.0, cy = 0.0;
    for (int i = 0; i < kShapeGrid; ++i) {
        const double t = 2.0 * kPi * i / kShapeGrid;
        const Point s = boundary_point(t);
        const double w = radius_of_curvature(t) * h(t);
        cx += w * s[0];
        cy += w * s[1];
    }
    const double scale = (2.0 * kPi / kShapeGrid) / (3.0 * volume_);
    centroid_ = {cx * scale, cy * scale};

    double worst = 0.0;
    for (int i = 0; i < kShapeGrid; ++i) {
        const double t = 2.0 * kPi * i / kShapeGrid;
        const double uc = std::cos(t) * centroid_[0] + std::sin(t) * centroid_[1];
        worst = std::max(worst, std::abs((h(t) - uc) - (h(t + kPi) + uc)));
    }
    symmetric_ = worst <= 1e-9;
}

double PlanarSupportBody::h(double t) const
{
    double s = c0_;
    for (const auto& hm : harmonics_) s += hm.a * std::cos(hm.k * t) + hm.b * std::sin(hm.k * t);
    return s;
}

double PlanarSupportBody::h_prime(double t) const
{
    double s = 0.0;
    for (const auto& hm : harmonics_) s += hm.k * (-hm.a * std::sin(hm.k * t) + hm.b * std::cos(hm.k * t));
    return s;
}

double PlanarSupportBody::h_second(double t) const
{
    double s = 0.0;
    for (const auto& hm : harmonics_)
        s -= double(hm.k) * hm.k * (hm.a * std::cos(hm.k * t) + hm.b * std::sin(hm.k * t));
    return s;
}

Point PlanarSupportBody::boundary_point(double t) const
{
    const double c = std::cos(t), s = std::sin(t);
    const double hv = h(t), hp = h_prime(t);
    return {hv * c - hp * s, hv * s + hp * c};
}

bool PlanarSupportBody::contains_point(std::span<const double> y) const
{
    // y is inside iff u.y <= h(u) for every direction u.
    auto excess = [&](double t) { return y[0] * std::cos(t) + y[1] * std::sin(t) - h(t); };
    return periodic_maximize(excess, 512, 1e-14).value <= 1e-12;
}

// sigma_x is increasing on the lower arc theta in [-pi, 0] and decreasing on
// the upper arc theta in [0, pi].
double PlanarSupportBody::lower_arc_y(double x) const
{
    double lo = -kPi, hi = 0.0;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (boundary_point(mid)[0] < x)
            lo = mid;
        else
            hi = mid;
    }
    return boundary_point(0.5 * (lo + hi))[1];
}

double PlanarSupportBody::upper_arc_y(double x) const
{
    double lo = 0.0, hi = kPi;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (boundary_point(mid)[0] > x)
            lo = mid;
        else
            hi = mid;
    }
    return boundary_point(0.5 * (lo + hi))[1];
}

std::optional<Interval> PlanarSupportBody::slice_range(std::span<const double> prefix) const
{
    const double xmin = -h(kPi), xmax = h(0.0);
    if (prefix.empty()) return Interval{xmin, xmax};
    const double x = prefix[0];
    if (x < xmin || x > xmax) return std::nullopt;
    return Interval{lower_arc_y(x), upper_arc_y(x)};
}

PlanarSupportBody reference_asymmetric_body() { return PlanarSupportBody(1.0, {{3, 0.05, 0.0}}, "asym3"); }

//---------------------------------------------------------------------------//
// Config parsing
//---------------------------------------------------------------------------//

std::shared_ptr<const ConvexBody> body_from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("body config: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind")) throw std::invalid_argument("body config: missing \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    const std::string name = j.value("name", std::string{});
    try {
        if (kind == "ellipsoid") {
            auto axes = j.at("semi_axes").get<std::vector<double>>();
            auto center = j.value("center", std::vector<double>{});
            return std::make_shared<Ellipsoid>(std::move(axes), std::move(center), name);
        }
        if (kind == "planar_support") {
            std::vector<Harmonic> hs;
            for (const auto& row : j.value("harmonics", nlohmann::json::array())) {
                if (!row.is_array() || row.size() != 3)
                    throw std::invalid_argument("body config: harmonics rows must be [k, a_k, b_k]");
                hs.push_back({row[0].get<int>(), row[1].get<double>(), row[2].get<double>()});
            }
            return std::make_shared<PlanarSupportBody>(j.at("c0").get<double>(), std::move(hs), name);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("body config: ") + e.what());
    }
    throw std::invalid_argument("body config: unknown kind \"" + kind + "\"");
}

std::shared_ptr<const ConvexBody> load_body(const std::string& json_or_path)
{
    const auto first = json_or_path.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && json_or_path[first] == '{') return body_from_json(json_or_path);
    std::ifstream in(json_or_path);
    if (!in) throw std::invalid_argument("body config: cannot open " + json_or_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return body_from_json(ss.str());
}

} // namespace latdisc
