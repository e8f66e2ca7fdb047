#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latdisc/geometry.hpp"

namespace latdisc {

struct Interval
{
    double lo;
    double hi;
};

/**
 * Bounded convex domain of R^d with smooth, strictly positively curved
 * boundary.
 *
 * Every query is pure; instances are immutable after construction and may be
 * shared freely across threads. Membership always refers to the closed body.
 */
class ConvexBody
{
  public:
    virtual ~ConvexBody() = default;

    virtual int dimension() const = 0;

    /// Short identifier used in CSV headers and reports.
    virtual std::string id() const = 0;

    virtual double volume() const = 0;
    virtual double diameter() const = 0;

    /// h(u) = sup over the body of u.y
    virtual double support(const Direction& u) const = 0;

    /// Boundary point whose outward unit normal is u.
    virtual Point sigma(const Direction& u) const = 0;

    /// Gaussian curvature of the boundary at sigma(u).
    virtual double curvature(const Direction& u) const = 0;

    /// Membership of y in the closed body.
    virtual bool contains_point(std::span<const double> y) const = 0;

    /**
     * Range of the coordinate y_m (m = prefix.size()) over the section of the
     * body where y_0..y_{m-1} are fixed to `prefix`. Empty when the section is
     * empty. Drives the slicing lattice counter.
     */
    virtual std::optional<Interval> slice_range(std::span<const double> prefix) const = 0;

    virtual bool is_point_symmetric() const = 0;

    /// Whether point lies in the closed set R*body - x, i.e. (point + x)/R is in the body.
    bool contains(std::span<const double> point, double R, std::span<const double> x) const;
};

/// Axis-aligned ellipsoid {sum ((y_i - c_i)/a_i)^2 <= 1}.
class Ellipsoid final : public ConvexBody
{
  public:
    Ellipsoid(std::vector<double> semi_axes, std::vector<double> center = {}, std::string name = {});

    static Ellipsoid unit_ball(int d);

    int dimension() const override { return static_cast<int>(axes_.size()); }
    std::string id() const override;
    double volume() const override;
    double diameter() const override;
    double support(const Direction& u) const override;
    Point sigma(const Direction& u) const override;
    double curvature(const Direction& u) const override;
    bool contains_point(std::span<const double> y) const override;
    std::optional<Interval> slice_range(std::span<const double> prefix) const override;
    bool is_point_symmetric() const override { return true; }

    std::span<const double> semi_axes() const { return axes_; }
    std::span<const double> center() const { return center_; }
    bool is_centered_ball() const;

  private:
    double scaled_norm(const Direction& u) const; // |A u|
    std::vector<double> axes_;
    std::vector<double> center_;
    std::string name_;
};

struct Harmonic
{
    int k;
    double a; // cosine coefficient
    double b; // sine coefficient
};

/**
 * Planar body given by its support function
 *   h(theta) = c0 + sum_k (a_k cos k theta + b_k sin k theta).
 *
 * The first harmonic only translates the body; it is removed at construction
 * so the Steiner point sits at the origin (the removed offset is kept as
 * steiner_point()). Construction rejects data whose radius of curvature
 * h + h'' is not strictly positive on a 4096-point grid.
 */
class PlanarSupportBody final : public ConvexBody
{
  public:
    PlanarSupportBody(double c0, std::vector<Harmonic> harmonics, std::string name = {});

    int dimension() const override { return 2; }
    std::string id() const override { return name_; }
    double volume() const override { return volume_; }
    double diameter() const override { return diameter_; }
    double support(const Direction& u) const override { return h(u.angle()); }
    Point sigma(const Direction& u) const override { return boundary_point(u.angle()); }
    double curvature(const Direction& u) const override { return 1.0 / radius_of_curvature(u.angle()); }
    bool contains_point(std::span<const double> y) const override;
    std::optional<Interval> slice_range(std::span<const double> prefix) const override;
    bool is_point_symmetric() const override { return symmetric_; }

    double h(double theta) const;
    double h_prime(double theta) const;
    double h_second(double theta) const;
    double radius_of_curvature(double theta) const { return h(theta) + h_second(theta); }
    /// sigma(theta) = h u + h' u_perp
    Point boundary_point(double theta) const;
    Point centroid() const { return centroid_; }
    Point steiner_point() const { return steiner_; }
    double c0() const { return c0_; }
    std::span<const Harmonic> harmonics() const { return harmonics_; }

  private:
    double lower_arc_y(double x) const;
    double upper_arc_y(double x) const;

    double c0_;
    std::vector<Harmonic> harmonics_;
    std::string name_;
    Point steiner_;
    double volume_ = 0.0;
    double diameter_ = 0.0;
    Point centroid_;
    bool symmetric_ = false;
};

/// Parses {"kind":"ellipsoid","semi_axes":[...],"center":[...]} or
/// {"kind":"planar_support","c0":...,"harmonics":[[k,a,b],...]}. An optional
/// "name" overrides the generated id.
std::shared_ptr<const ConvexBody> body_from_json(const std::string& text);

/// Accepts inline JSON (first non-blank char '{') or a path to a JSON file.
std::shared_ptr<const ConvexBody> load_body(const std::string& json_or_path);

/// Reference asymmetric body h = 1 + 0.05 cos 3 theta.
PlanarSupportBody reference_asymmetric_body();

} // namespace latdisc
