#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "latdisc/convex_body.hpp"
#include "latdisc/spectral_analysis.hpp"

namespace latdisc {

struct SweepConfig
{
    std::shared_ptr<const ConvexBody> body;
    std::vector<double> radii;            // strictly increasing
    std::vector<double> exponents{2.0};   // +infinity allowed
    std::size_t samples = 1000;           // >= 100
    std::uint64_t seed = 0;
    int shell = 16;                       // >= 8
    bool refine_sup = true;
    unsigned threads = 1;

    void validate() const;
};

/// Default schedule R = 1.01 * 2^{k/2}, k = k_lo..k_hi.
std::vector<double> default_schedule(int k_lo, int k_hi);

struct SweepRow
{
    std::string body;
    double R = 0.0;
    NormReport report;
};

struct SpectralRow
{
    std::string body;
    double R = 0.0;
    double p = 0.0;
    double lq_truncated = 0.0;
    double lq_upper = 0.0;
    double weak_lq = 0.0;
    double sup_coefficient = 0.0;
    double decay_constant = 0.0;
};

struct SweepTable
{
    std::vector<SweepRow> rows;        // schedule order, then exponent order
    std::vector<SpectralRow> spectral;

    /// (R, value) pairs of one norm column for one exponent.
    std::vector<std::pair<double, double>> column(double p, const std::string& name) const;
};

/// Monte Carlo field, spectral sequence and norm reports for each R. Field
/// seeds derive from (seed, schedule index), so the table is reproducible.
SweepTable run_sweep(const SweepConfig& config);

/// NormReport CSV (`body,R,p,strong,weak,sup,samples,stderr`).
void write_csv(std::ostream& out, const SweepTable& table);
void write_spectral_csv(std::ostream& out, const SweepTable& table);
/// Reads the NormReport CSV back.
SweepTable read_sweep_csv(std::istream& in);

/// Monte Carlo maximum of |D| followed by coordinate-wise golden-section
/// search around the best sample. A lower bound for the true supremum.
double refined_sup(const ConvexBody& body, const DiscrepancyField& field, int rounds = 3);

struct ExponentFit
{
    double slope = 0.0;
    double intercept = 0.0;
    double residual_rms = 0.0;
    double r_min = 0.0;
    double r_max = 0.0;
    std::size_t points = 0;
};

/// Least squares of log(value / log^gamma R) against log R over R >= r_min.
ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& points, double gamma = 0.0, double r_min = 0.0);
ExponentFit fit_exponent(const SweepTable& table, double p, const std::string& column, double gamma = 0.0,
                         double r_min = 8.0);

struct DipRow
{
    std::uint64_t j = 0;
    std::string kind; // "exceptional" or "random"
    double R = 0.0;
    double normalized = 0.0; // R^{-(d-1)/2} ||D||_p
    double ratio = 0.0;      // exceptional rows: normalized / median(random)
};

struct DipOptions
{
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    int random_radii = 20;
    bool allow_any_dimension = false;
    unsigned threads = 1;
};

struct DipTable
{
    std::vector<DipRow> rows;
    std::vector<std::string> notices;
};

/// Normalized norm at R_j against random R from the same decade.
DipTable dip_experiment(const ConvexBody& body, double p, const std::vector<std::uint64_t>& j_list,
                        const DipOptions& options = {});

void write_csv(std::ostream& out, const DipTable& table);

/// Companion gnuplot script for a CSV written next to it.
std::string gnuplot_script(const std::string& csv_path, const std::string& kind);

} // namespace latdisc
