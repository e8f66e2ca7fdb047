#pragma once

#include <iosfwd>
#include <vector>

#include "latdisc/convex_body.hpp"

namespace latdisc {

/// Length of the chord {y in body : y.theta = h(theta) - depth}; zero past the width.
double chord_length(const ConvexBody& body, double depth, const Direction& theta);

/// diameter/(2 rho) * (lambda(1/(2 rho), theta) + lambda(1/(2 rho), -theta)),
/// an upper bound for |\hat\chi(\rho\theta)|.
double podkorytov_bound(const ConvexBody& body, double rho, const Direction& theta);

/// Largest radius of curvature of a planar body.
double max_radius_of_curvature(const ConvexBody& body);

/// Whether the body rolls freely inside a disc of the given radius, i.e. its
/// largest radius of curvature does not exceed the radius (equality counts).
bool can_roll_in_disc(const ConvexBody& body, double disc_radius);

struct ChordRow
{
    double rho;
    double theta;
    double chi_hat_abs;
    double bound;
};

/// |\hat\chi(\rho\theta)| against the bound over a (rho, theta) table.
std::vector<ChordRow> podkorytov_table(const ConvexBody& body, const std::vector<double>& radii, int direction_count);

/// CSV `rho,theta,abs_chi_hat,bound`.
void write_csv(std::ostream& out, const std::vector<ChordRow>& rows);

} // namespace latdisc
