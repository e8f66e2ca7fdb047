#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "latdisc/convex_body.hpp"

namespace latdisc {

using Complex = std::complex<double>;

/// J_nu(x) for real order nu >= 0 and x >= 0.
double bessel_j(double nu, double x);

/// Fourier transform of the indicator of an ellipsoid,
/// \hat\chi(\xi) = \int_\Omega e^{-2\pi i \xi\cdot y} dy, in closed form via Bessel functions.
Complex chi_hat_exact(const Ellipsoid& body, std::span<const double> xi);

struct QuadratureOptions
{
    double tolerance = 1e-9;
    std::size_t max_panels = std::size_t{1} << 20;
};

/// Planar bodies only. Reduces the area integral to the boundary and applies
/// the trapezoid rule in the normal angle with panel doubling.
Complex chi_hat_quadrature(const ConvexBody& body, std::span<const double> xi, const QuadratureOptions& options = {});

/// Closed form for ellipsoids, boundary quadrature otherwise.
Complex chi_hat(const ConvexBody& body, std::span<const double> xi);

/// Two-point stationary-phase leading term built from sigma(+-xi) and the
/// curvature there. Rejects xi = 0.
Complex chi_hat_leading(const ConvexBody& body, std::span<const double> xi);

struct DecayOptions
{
    /// Radii sampled per unit of rho per unit of diameter (before refinement).
    double radii_per_unit = 4.0;
    std::size_t min_radii = 64;
    std::size_t max_radii = 20000;
    /// Cap for bodies evaluated by quadrature, which cost far more per sample.
    std::size_t max_radii_quadrature = 128;
};

/// max over directions and sampled radii of |xi|^{(d+1)/2} |\hat\chi(\xi)|.
/// Each direction's best sample is refined by golden-section search.
double decay_constant(const ConvexBody& body, double rho_min, double rho_max, int direction_count,
                      const DecayOptions& options = {});

/// Deterministic direction set: equispaced angles in the plane, a fixed
/// pseudo-random spherical sample in higher dimension.
std::vector<Direction> sample_directions(int dimension, int count);

/**
 * Nonzero frequencies of the discrepancy on the shell 0 < |n| <= N:
 * value(n) = R^d \hat\chi(R n). Frequencies are stored in lexicographic order.
 */
struct SpectralSequence
{
    std::string body_id;
    int dimension = 0;
    double R = 0.0;
    int shell = 0;
    std::vector<int> frequencies; // row-major, dimension entries per frequency
    std::vector<Complex> values;
    double tail_exponent = 0.0;   // (d+1)/2
    double decay_constant = 0.0;  // measured C in |\hat\chi(\xi)| <= C |\xi|^{-(d+1)/2}

    std::size_t size() const { return values.size(); }
    std::span<const int> frequency(std::size_t i) const
    {
        return std::span<const int>(frequencies).subspan(i * static_cast<std::size_t>(dimension),
                                                         static_cast<std::size_t>(dimension));
    }

    /**
     * Upper bound for sum_{|n|>N} |value(n)|^q from the decay bound
     * |value(n)| <= C R^{(d-1)/2} |n|^{-(d+1)/2}. Infinite when the series
     * diverges, i.e. q (d+1)/2 <= d.
     */
    double tail_power_sum(double q) const;
};

struct SequenceOptions
{
    unsigned threads = 1;
    /// Decay constant is measured over |xi| in [R*(N - sqrt(d)), decay_window * R * N].
    double decay_window = 2.0;
    int decay_directions = 16;
    DecayOptions decay;
};

SpectralSequence spectral_sequence(const ConvexBody& body, double R, int shell, const SequenceOptions& options = {});

/// Metadata header then rows `n_1,...,n_d,re,im`. The header carries N, R,
/// the decay constant and the l^2 tail bound.
void write_csv(std::ostream& out, const SpectralSequence& seq);

} // namespace latdisc
