#pragma once

#include <cmath>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "latdisc/fourier_transform.hpp"
#include "latdisc/lattice_counter.hpp"

namespace latdisc {

/// Probability measure with equal weights 1/S (fields) or counting measure (sequences).
enum class Measure
{
    probability,
    counting,
};

/// (sum w_i |f_i|^p)^{1/p}; p may be +infinity.
double lp_norm(std::span<const double> values, double p, Measure measure);

/// sup_t t * mu{|f| > t}^{1/p}, exact on the empirical measure via order statistics.
double weak_lp_norm(std::span<const double> values, double p, Measure measure);

double sup_norm(std::span<const double> values);

/// Magnitudes |value(n)| of a spectral sequence.
std::vector<double> magnitudes(const SpectralSequence& seq);

struct NormReport
{
    double p = 2.0;
    double strong = 0.0;
    double weak = 0.0;
    double sup = 0.0;
    std::size_t samples = 0;
    /// Monte Carlo standard error of strong^p.
    double stderr_p = 0.0;

    /// Delta-method standard error of `strong` itself.
    double strong_stderr() const;
};

NormReport norm_report(std::span<const double> values, double p);
NormReport norm_report(const DiscrepancyField& field, double p);

/// CSV row `body,R,p,strong,weak,sup,samples,stderr`.
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const std::string& body, double R, const NormReport& report);

struct KeyLemmaReport
{
    double p = 0.0;
    double s = 0.0;
    double lp_power = 0.0;     // ||f||_p^p
    double weak_power = 0.0;   // ||f||_{Weak-p}^p
    double sup = 0.0;          // ||f||_inf
    double bound_one = 0.0;    // 1 + p ||f||_{Weak-p}^p log_+ ||f||_inf
    double ls_power = 0.0;     // ||f||_s^s
    double bound_two = 0.0;    // s/(s-p) ||f||_{Weak-p}^p ||f||_inf^{s-p}

    /// Both inequalities, with a relative slack of `rel_tol` for rounding.
    bool first_holds(double rel_tol = 1e-12) const { return lp_power <= bound_one * (1.0 + rel_tol); }
    bool second_holds(double rel_tol = 1e-12) const { return ls_power <= bound_two * (1.0 + rel_tol) + 1e-300; }
};

/// Evaluates both interpolation inequalities on the empirical probability measure.
KeyLemmaReport check_key_lemma(std::span<const double> values, double p, double s);

/// Real part of the truncated Fourier series sum_{0<|n|<=N} value(n) e^{2 pi i n.x}.
/// Throws std::logic_error if the imaginary residue reaches 1e-6.
double fourier_series_discrepancy(const SpectralSequence& seq, std::span<const double> x);

struct HausdorffYoungReport
{
    double p = 2.0;
    double q = 2.0;
    double lp = 0.0;           // ||D||_p estimate
    double lp_stderr = 0.0;
    double lq_truncated = 0.0; // ||value||_q on the shell
    double lq_upper = 0.0;     // (sum_shell |value|^q + tail)^{1/q}
    double weak_lp = 0.0;
    double weak_lq = 0.0;
    double weak_ratio = 0.0;   // weak_lp / weak_lq, the empirical constant
    double sup_coefficient = 0.0;
};

/// Compares the field's norms with the sequence's dual norms (p >= 2, 1/p + 1/q = 1).
HausdorffYoungReport hausdorff_young_check(const DiscrepancyField& field, const SpectralSequence& seq, double p);

struct ParsevalReport
{
    double grid_l2_squared = 0.0;
    double spectral_l2_squared = 0.0;
    double tail_bound = 0.0;
    double aliasing_bound = 0.0;

    bool consistent() const
    {
        return std::abs(grid_l2_squared - spectral_l2_squared) <= tail_bound + aliasing_bound;
    }
};

/**
 * Grid mean of D^2 against the truncated spectral energy. The aliasing bound
 * is the measure of the tube of radius sqrt(d)*h around the dilated boundary
 * (Steiner formula with the perimeter, planar bodies only) times (max|D|+2)^2.
 */
ParsevalReport parseval_check(const ConvexBody& body, const DiscrepancyField& grid_field, const SpectralSequence& seq);

/// Perimeter of a planar body, \oint 1/K d\theta.
double perimeter(const ConvexBody& body);

} // namespace latdisc
