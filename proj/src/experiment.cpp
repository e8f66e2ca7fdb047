#include "latdisc/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "latdisc/diophantine_search.hpp"
#include "latdisc/numeric.hpp"

namespace latdisc {

void SweepConfig::validate() const
{
    if (!body) throw std::invalid_argument("sweep: no body");
    if (radii.empty()) throw std::invalid_argument("empty schedule");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0)) throw std::invalid_argument("sweep: radii must be positive");
        if (i > 0 && !(radii[i] > radii[i - 1])) throw std::invalid_argument("sweep: radii must be strictly increasing");
    }
    if (exponents.empty()) throw std::invalid_argument("sweep: no exponents");
    for (double p : exponents)
        if (!(p > 0.0)) throw std::invalid_argument("sweep: exponents must be positive");
    if (samples < 100) throw std::invalid_argument("sweep: need at least 100 samples");
    if (shell < 8) throw std::invalid_argument("sweep: spectral shell must be >= 8");
}

std::vector<double> default_schedule(int k_lo, int k_hi)
{
    std::vector<double> out;
    for (int k = k_lo; k <= k_hi; ++k) out.push_back(1.01 * std::pow(2.0, 0.5 * k));
    return out;
}

std::vector<std::pair<double, double>> SweepTable::column(double p, const std::string& name) const
{
    std::vector<std::pair<double, double>> out;
    for (const auto& row : rows) {
        if (row.report.p != p) continue;
        double v = 0.0;
        if (name == "strong")
            v = row.report.strong;
        else if (name == "weak")
            v = row.report.weak;
        else if (name == "sup")
            v = row.report.sup;
        else
            throw std::invalid_argument("unknown column \"" + name + "\" (strong, weak, sup)");
        out.emplace_back(row.R, v);
    }
    return out;
}

double refined_sup(const ConvexBody& body, const DiscrepancyField& field, int rounds)
{
    const auto d = static_cast<std::size_t>(field.dimension);
    std::size_t arg = 0;
    for (std::size_t i = 1; i < field.size(); ++i)
        if (std::abs(field.values[i]) > std::abs(field.values[arg])) arg = i;
    double best = std::abs(field.values[arg]);
    Point x(field.point(arg).begin(), field.point(arg).end());

    double width = 0.5 / field.R;
    for (int round = 0; round < rounds; ++round, width *= 0.5) {
        for (std::size_t c = 0; c < d; ++c) {
            Point best_x = x;
            auto value = [&](double t) {
                Point y = x;
                y[c] = t;
                const double v = std::abs(discrepancy(body, field.R, y));
                if (v > best) {
                    best = v;
                    best_x = y;
                }
                return v;
            };
            golden_maximize(value, x[c] - width, x[c] + width, 1e-6, 40);
            x = best_x;
        }
    }
    return best;
}

SweepTable run_sweep(const SweepConfig& config)
{
    config.validate();
    const auto& body = *config.body;
    const std::size_t n = config.radii.size();
    std::vector<std::vector<SweepRow>> rows(n);
    std::vector<std::vector<SpectralRow>> spectral(n);

    // one R per task; each task writes only its own slot
    parallel_for(n, config.threads, [&](std::size_t i) {
        const double R = config.radii[i];
        try {
            auto gen = derived_generator(config.seed, i);
            const auto field = discrepancy_field(body, R, MonteCarlo{config.samples, gen()});
            const double sup = config.refine_sup ? refined_sup(body, field) : sup_norm(field.values);
            for (double p : config.exponents) {
                NormReport report = norm_report(field, p);
                report.sup = std::max(report.sup, sup);
                if (std::isinf(p)) report.strong = report.weak = report.sup;
                rows[i].push_back({body.id(), R, report});
            }
            const auto seq = spectral_sequence(body, R, config.shell);
            for (double p : config.exponents) {
                if (p < 2.0) continue;
                const auto hy = hausdorff_young_check(field, seq, p);
                spectral[i].push_back({body.id(), R, p, hy.lq_truncated, hy.lq_upper, hy.weak_lq, hy.sup_coefficient,
                                       seq.decay_constant});
            }
        } catch (const std::exception& e) {
            throw std::runtime_error("sweep at R=" + format_double(R) + ": " + e.what());
        }
    });

    SweepTable table;
    for (std::size_t i = 0; i < n; ++i) {
        table.rows.insert(table.rows.end(), rows[i].begin(), rows[i].end());
        table.spectral.insert(table.spectral.end(), spectral[i].begin(), spectral[i].end());
    }
    return table;
}

void write_csv(std::ostream& out, const SweepTable& table)
{
    write_csv_header(out);
    for (const auto& row : table.rows) write_csv_row(out, row.body, row.R, row.report);
}

void write_spectral_csv(std::ostream& out, const SweepTable& table)
{
    out << "body,R,p,lq,lq_with_tail,weak_lq,sup_coefficient,decay_constant\n";
    for (const auto& r : table.spectral)
        out << r.body << ',' << format_double(r.R) << ',' << format_double(r.p) << ',' << format_double(r.lq_truncated)
            << ',' << format_double(r.lq_upper) << ',' << format_double(r.weak_lq) << ','
            << format_double(r.sup_coefficient) << ',' << format_double(r.decay_constant) << '\n';
}

SweepTable read_sweep_csv(std::istream& in)
{
    SweepTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#' || line.rfind("body,", 0) == 0) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != 8) throw std::invalid_argument("sweep csv line " + std::to_string(line_no) + ": expected 8 fields");
        auto num = [&](const std::string& s) {
            char* end = nullptr;
            const double v = std::strtod(s.c_str(), &end);
            if (end == s.c_str()) throw std::invalid_argument("sweep csv line " + std::to_string(line_no) + ": bad number");
            return v;
        };
        SweepRow row;
        row.body = cells[0];
        row.R = num(cells[1]);
        row.report.p = num(cells[2]);
        row.report.strong = num(cells[3]);
        row.report.weak = num(cells[4]);
        row.report.sup = num(cells[5]);
        row.report.samples = static_cast<std::size_t>(num(cells[6]));
        row.report.stderr_p = num(cells[7]);
        table.rows.push_back(row);
    }
    return table;
}

ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& points, double gamma, double r_min)
{
    std::vector<double> xs, ys;
    ExponentFit fit;
    fit.r_min = std::numeric_limits<double>::infinity();
    fit.r_max = 0.0;
    for (const auto& [R, v] : points) {
        if (R < r_min) continue;
        if (!(v > 0.0)) throw std::invalid_argument("fit_exponent: norms must be positive");
        if (gamma != 0.0 && !(R > 1.0)) throw std::invalid_argument("fit_exponent: log deflation needs R > 1");
        xs.push_back(std::log(R));
        ys.push_back(std::log(v) - gamma * std::log(std::log(R)));
        fit.r_min = std::min(fit.r_min, R);
        fit.r_max = std::max(fit.r_max, R);
    }
    if (xs.size() < 4) throw std::invalid_argument("fit_exponent: need at least 4 rows in the window");
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_exponent: all R equal");
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
        rss += e * e;
    }
    fit.residual_rms = std::sqrt(rss / n);
    fit.points = xs.size();
    return fit;
}

ExponentFit fit_exponent(const SweepTable& table, double p, const std::string& column, double gamma, double r_min)
{
    return fit_exponent(table.column(p, column), gamma, r_min);
}

namespace {

double normalized_norm(const ConvexBody& body, double R, double p, std::uint64_t seed, const DipOptions& options)
{
    FieldOptions fopts;
    fopts.threads = options.threads;
    const auto field = discrepancy_field(body, R, MonteCarlo{options.samples, seed}, fopts);
    return std::pow(R, -0.5 * (body.dimension() - 1)) * norm_report(field, p).strong;
}

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace

DipTable dip_experiment(const ConvexBody& body, double p, const std::vector<std::uint64_t>& j_list,
                        const DipOptions& options)
{
    if (options.random_radii < 1) throw std::invalid_argument("dip_experiment: need at least one random radius");
    DipTable table;
    for (std::uint64_t j : j_list) {
        const auto plan = exceptional_radii(body, p, j, options.allow_any_dimension);
        if (plan.R < 2.0) {
            table.notices.push_back("j=" + std::to_string(j) + ": R_j=" + format_double(plan.R) + " < 2, skipped");
            continue;
        }
        const double lo = std::pow(10.0, std::floor(std::log10(plan.R)));
        const double a = std::max(2.0, lo), b = 10.0 * lo;

        auto gen = derived_generator(options.seed, 2 * j);
        std::vector<double> randoms;
        std::vector<DipRow> random_rows;
        for (int k = 0; k < options.random_radii; ++k) {
            const double R = a + (b - a) * uniform01(gen);
            const double v = normalized_norm(body, R, p, gen(), options);
            randoms.push_back(v);
            random_rows.push_back({j, "random", R, v, 0.0});
        }
        const double at_rj = normalized_norm(body, plan.R, p, derived_generator(options.seed, 2 * j + 1)(), options);
        table.rows.push_back({j, "exceptional", plan.R, at_rj, at_rj / median(randoms)});
        table.rows.insert(table.rows.end(), random_rows.begin(), random_rows.end());
    }
    return table;
}

void write_csv(std::ostream& out, const DipTable& table)
{
    for (const auto& note : table.notices) out << "# " << note << '\n';
    out << "j,kind,R,normalized_norm,ratio\n";
    for (const auto& r : table.rows)
        out << r.j << ',' << r.kind << ',' << format_double(r.R) << ',' << format_double(r.normalized) << ','
            << (r.kind == "exceptional" ? format_double(r.ratio) : std::string{}) << '\n';
}

std::string gnuplot_script(const std::string& csv_path, const std::string& kind)
{
    std::ostringstream s;
    s << "set datafile separator ','\nset key left top\nset grid\n";
    if (kind == "sweep") {
        s << "set logscale xy\nset xlabel 'R'\nset ylabel 'norm'\n"
          << "plot '" << csv_path << "' every ::1 using 2:4 with linespoints title 'strong', \\\n"
          << "     '" << csv_path << "' every ::1 using 2:5 with linespoints title 'weak', \\\n"
          << "     x**0.5 title 'R^{1/2}'\n";
    } else if (kind == "chords") {
        s << "set logscale xy\nset xlabel 'rho'\n"
          << "plot '" << csv_path << "' every ::1 using 1:3 with points title '|chi hat|', \\\n"
          << "     '" << csv_path << "' every ::1 using 1:4 with points title 'chord bound'\n";
    } else if (kind == "dip") {
        s << "set xlabel 'R'\nset ylabel 'R^{-(d-1)/2} ||D||_p'\n"
          << "plot '" << csv_path << "' every ::1 using 3:4 with points title 'normalized norm'\n";
    } else {
        s << "plot '" << csv_path << "' every ::1 using 1:2 with linespoints notitle\n";
    }
    return s.str();
}

} // namespace latdisc
