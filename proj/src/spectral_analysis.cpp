#include "latdisc/spectral_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "latdisc/numeric.hpp"

namespace latdisc {

namespace {

constexpr double kPi = std::numbers::pi;

void require_input(std::span<const double> values, double p)
{
    if (!(p > 0.0)) throw std::invalid_argument("norm: exponent p must be positive");
    if (values.empty()) throw std::invalid_argument("norm: empty input");
}

double weight(Measure m, std::size_t n) { return m == Measure::probability ? 1.0 / static_cast<double>(n) : 1.0; }

// max_k |f|_(k)^p * k * w over the descending order statistics.
double weak_power(std::span<const double> values, double p, Measure measure)
{
    std::vector<double> a(values.size());
    std::transform(values.begin(), values.end(), a.begin(), [](double v) { return std::abs(v); });
    std::sort(a.begin(), a.end(), std::greater<>());
    const double w = weight(measure, a.size());
    double best = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) best = std::max(best, std::pow(a[k], p) * static_cast<double>(k + 1) * w);
    return best;
}

double power_sum(std::span<const double> values, double p)
{
    double s = 0.0;
    for (double v : values) s += std::pow(std::abs(v), p);
    return s;
}

} // namespace

double sup_norm(std::span<const double> values)
{
    if (values.empty()) throw std::invalid_argument("norm: empty input");
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

double lp_norm(std::span<const double> values, double p, Measure measure)
{
    require_input(values, p);
    if (std::isinf(p)) return sup_norm(values);
    return std::pow(power_sum(values, p) * weight(measure, values.size()), 1.0 / p);
}

double weak_lp_norm(std::span<const double> values, double p, Measure measure)
{
    require_input(values, p);
    if (std::isinf(p)) return sup_norm(values);
    return std::pow(weak_power(values, p, measure), 1.0 / p);
}

std::vector<double> magnitudes(const SpectralSequence& seq)
{
    std::vector<double> m(seq.size());
    std::transform(seq.values.begin(), seq.values.end(), m.begin(), [](const Complex& c) { return std::abs(c); });
    return m;
}

double NormReport::strong_stderr() const
{
    if (std::isinf(p) || strong == 0.0) return 0.0;
    // d(m^{1/p}) = (1/p) m^{1/p - 1} dm with m = strong^p
    return stderr_p * std::pow(strong, 1.0 - p) / p;
}

NormReport norm_report(std::span<const double> values, double p)
{
    require_input(values, p);
    NormReport r;
    r.p = p;
    r.samples = values.size();
    r.sup = sup_norm(values);
    if (std::isinf(p)) {
        r.strong = r.weak = r.sup;
        return r;
    }
    const double n = static_cast<double>(values.size());
    double mean = 0.0, m2 = 0.0;
    for (double v : values) mean += std::pow(std::abs(v), p);
    mean /= n;
    for (double v : values) {
        const double t = std::pow(std::abs(v), p) - mean;
        m2 += t * t;
    }
    r.strong = std::pow(mean, 1.0 / p);
    r.weak = std::pow(weak_power(values, p, Measure::probability), 1.0 / p);
    r.stderr_p = values.size() > 1 ? std::sqrt(m2 / (n - 1.0) / n) : 0.0;
    return r;
}

NormReport norm_report(const DiscrepancyField& field, double p) { return norm_report(field.values, p); }

void write_csv_header(std::ostream& out) { out << "body,R,p,strong,weak,sup,samples,stderr\n"; }

void write_csv_row(std::ostream& out, const std::string& body, double R, const NormReport& r)
{
    out << body << ',' << format_double(R) << ',' << format_double(r.p) << ',' << format_double(r.strong) << ','
        << format_double(r.weak) << ',' << format_double(r.sup) << ',' << r.samples << ',' << format_double(r.stderr_p)
        << '\n';
}

KeyLemmaReport check_key_lemma(std::span<const double> values, double p, double s)
{
    require_input(values, p);
    if (!(s > p) || std::isinf(s)) throw std::invalid_argument("check_key_lemma: need p < s < infinity");
    KeyLemmaReport r;
    r.p = p;
    r.s = s;
    const double w = weight(Measure::probability, values.size());
    r.lp_power = power_sum(values, p) * w;
    r.ls_power = power_sum(values, s) * w;
    r.weak_power = weak_power(values, p, Measure::probability);
    r.sup = sup_norm(values);
    const double log_plus = std::max(std::log(r.sup), 0.0);
    r.bound_one = 1.0 + p * r.weak_power * log_plus;
    r.bound_two = s / (s - p) * r.weak_power * std::pow(r.sup, s - p);
    return r;
}

double fourier_series_discrepancy(const SpectralSequence& seq, std::span<const double> x)
{
    if (seq.size() == 0) throw std::invalid_argument("fourier_series_discrepancy: empty sequence");
    if (x.size() != static_cast<std::size_t>(seq.dimension))
        throw std::invalid_argument("fourier_series_discrepancy: dimension mismatch");
    Complex sum = 0.0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto n = seq.frequency(i);
        double phase = 0.0;
        for (std::size_t c = 0; c < x.size(); ++c) {
            // reduce n_c x_c mod 1 term by term to keep the argument small
            const double t = n[c] * x[c];
            phase += t - std::floor(t);
        }
        sum += seq.values[i] * std::polar(1.0, 2.0 * kPi * phase);
    }
    if (std::abs(sum.imag()) >= 1e-6)
        throw std::logic_error("fourier_series_discrepancy: imaginary residue " + format_double(sum.imag())
                               + " (sequence is not Hermitian)");
    return sum.real();
}

HausdorffYoungReport hausdorff_young_check(const DiscrepancyField& field, const SpectralSequence& seq, double p)
{
    if (!(p >= 2.0)) throw std::invalid_argument("hausdorff_young_check: need p >= 2");
    if (field.body_id != seq.body_id || field.R != seq.R)
        throw std::invalid_argument("hausdorff_young_check: field and sequence differ in body or R");
    HausdorffYoungReport r;
    r.p = p;
    r.q = std::isinf(p) ? 1.0 : p / (p - 1.0);
    const auto report = norm_report(field, p);
    r.lp = report.strong;
    r.lp_stderr = report.strong_stderr();
    r.weak_lp = report.weak;
    const auto mags = magnitudes(seq);
    const double shell_sum = power_sum(mags, r.q);
    r.lq_truncated = std::pow(shell_sum, 1.0 / r.q);
    r.lq_upper = std::pow(shell_sum + seq.tail_power_sum(r.q), 1.0 / r.q);
    r.weak_lq = weak_lp_norm(mags, r.q, Measure::counting);
    r.weak_ratio = r.weak_lq > 0.0 ? r.weak_lp / r.weak_lq : std::numeric_limits<double>::infinity();
    r.sup_coefficient = sup_norm(mags);
    return r;
}

double perimeter(const ConvexBody& body)
{
    if (body.dimension() != 2) throw std::invalid_argument("perimeter: planar bodies only");
    constexpr int n = 4096;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += 1.0 / body.curvature(Direction::planar(2.0 * kPi * i / n));
    return s * 2.0 * kPi / n;
}

ParsevalReport parseval_check(const ConvexBody& body, const DiscrepancyField& grid_field, const SpectralSequence& seq)
{
    const auto* grid = std::get_if<UniformGrid>(&grid_field.mode);
    if (!grid) throw std::invalid_argument("parseval_check: field must be sampled on a uniform grid");
    if (body.dimension() != 2) throw std::invalid_argument("parseval_check: planar bodies only");
    if (grid_field.body_id != seq.body_id || grid_field.R != seq.R)
        throw std::invalid_argument("parseval_check: field and sequence differ in body or R");

    ParsevalReport r;
    r.grid_l2_squared = power_sum(grid_field.values, 2.0) / static_cast<double>(grid_field.size());
    r.spectral_l2_squared = power_sum(magnitudes(seq), 2.0);
    r.tail_bound = seq.tail_power_sum(2.0);
    const double h = 1.0 / grid->per_axis;
    const double radius = std::sqrt(2.0) * h;
    const double tube = 2.0 * radius * grid_field.R * perimeter(body) + kPi * radius * radius;
    const double envelope = sup_norm(grid_field.values) + 2.0;
    r.aliasing_bound = std::min(1.0, tube) * envelope * envelope;
    return r;
}

} // namespace latdisc
