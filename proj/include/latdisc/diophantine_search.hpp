#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "latdisc/convex_body.hpp"

namespace latdisc {

/// Distance from x to the nearest integer, in [0, 1/2].
double nearest_integer_distance(double x);

/// Witness r in [j, j^{m+1}] with max_k ||r alpha_k|| < 1/j.
struct DirichletCertificate
{
    std::uint64_t j = 0;
    std::vector<double> alphas;
    std::uint64_t r = 0;
    double achieved = 0.0;
    std::uint64_t range_hi = 0; // j^{m+1}
};

/// Scans r = j, j+1, ..., j^{m+1} and returns the first witness.
/// Throws std::overflow_error when j^{m+1} exceeds 64 bits, std::domain_error
/// when some |alpha_k| > 2^40, std::logic_error if the scan finds nothing.
DirichletCertificate dirichlet_search(const std::vector<double>& alphas, std::uint64_t j);

/// Independent re-check of the range condition and the achieved distance.
bool verify_certificate(const DirichletCertificate& cert);

/// Distinct values of n.sigma(n) over 0 < |n| <= M (merged within 1e-12).
/// Rejects bodies with some |n.sigma(n)| < 1e-9.
std::vector<double> build_alpha_set(const ConvexBody& body, double M);

struct ExceptionalRadiusPlan
{
    double p = 2.0;
    int d = 0;
    double beta = 0.0;      // 2p / (2d - pd + p)
    std::uint64_t M = 1;    // max(1, floor(j^beta))
    std::vector<double> alphas;
    DirichletCertificate certificate;
    double R = 0.0;         // R_j = certificate.r
    double dip_factor = 0.0; // 1/j
    /// (log R / log log R)^{-1/(beta d)}; NaN when log log R <= 0.
    double log_form = 0.0;
    /// |sin(2 pi R alpha)| for every alpha, each bounded by 2 pi * achieved.
    std::vector<double> sine_damping;
    double sine_bound = 0.0;
};

/// beta = 2p/(2d - pd + p); requires p < 2d/(d-1).
double beta_exponent(double p, int d);

/**
 * R_j for a symmetric body: Dirichlet witness for the alphas n.sigma(n) with
 * |n| <= j^beta. The dip is only claimed for d = 1 (mod 4); other dimensions
 * need allow_any_dimension. p must lie in [2, 2d/(d-1)).
 */
ExceptionalRadiusPlan exceptional_radii(const ConvexBody& body, double p, std::uint64_t j,
                                        bool allow_any_dimension = false);

/// max over 0 < |n| <= radius of |K^{-1/2}(sigma(n)) - K^{-1/2}(sigma(-n))|.
double curvature_asymmetry_scan(const ConvexBody& body, int radius = 8);

nlohmann::json to_json(const DirichletCertificate& cert);
nlohmann::json to_json(const ExceptionalRadiusPlan& plan);

} // namespace latdisc
