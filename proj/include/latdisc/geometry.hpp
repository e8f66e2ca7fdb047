#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace latdisc {

/// A point (or vector) of R^d.
using Point = std::vector<double>;

inline double dot(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

/// Unit vector of R^d. Construction normalizes; the zero vector is rejected.
class Direction
{
  public:
    explicit Direction(std::span<const double> v) : c_(v.begin(), v.end())
    {
        const double n = norm(c_);
        if (!(n > 0.0) || !std::isfinite(n))
            throw std::invalid_argument("Direction: zero or non-finite vector");
        for (double& x : c_) x /= n;
    }

    Direction(std::initializer_list<double> v) : Direction(std::span<const double>(v.begin(), v.size())) {}

    /// (cos theta, sin theta)
    static Direction planar(double theta)
    {
        Direction d;
        d.c_ = {std::cos(theta), std::sin(theta)};
        return d;
    }

    std::size_t dimension() const { return c_.size(); }
    std::span<const double> components() const { return c_; }
    double operator[](std::size_t i) const { return c_[i]; }

    Direction operator-() const
    {
        Direction d;
        d.c_ = c_;
        for (double& x : d.c_) x = -x;
        return d;
    }

    /// Polar angle; only meaningful in the plane.
    double angle() const { return std::atan2(c_[1], c_[0]); }

  private:
    Direction() = default;
    std::vector<double> c_;
};

/// Volume of the unit ball of R^d.
inline double unit_ball_volume(int d)
{
    return std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

/// Surface area of the unit sphere S^{d-1}.
inline double unit_sphere_area(int d) { return d * unit_ball_volume(d); }

} // namespace latdisc
