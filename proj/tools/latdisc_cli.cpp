// Command-line driver: lattice counts, discrepancy fields, norms, spectral
// sequences, chord bounds, Dirichlet certificates, sweeps and fits.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latdisc/chord_geometry.hpp"
#include "latdisc/convex_body.hpp"
#include "latdisc/diophantine_search.hpp"
#include "latdisc/experiment.hpp"
#include "latdisc/fourier_transform.hpp"
#include "latdisc/lattice_counter.hpp"
#include "latdisc/numeric.hpp"
#include "latdisc/spectral_analysis.hpp"

using namespace latdisc;

namespace {

// check failed: distinct from input errors
struct CheckFailure : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Common
{
    std::string body = R"({"kind":"ellipsoid","semi_axes":[1,1]})";
    double R = 2.0;
    std::vector<std::string> p{"2"};
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    int shell = 16;
    std::string out;
    bool gnuplot = false;
    unsigned threads = 1;
};

double parse_exponent(const std::string& s)
{
    if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent \"" + s + "\"");
    }
    if (used != s.size() || !(v > 0.0)) throw std::invalid_argument("bad exponent \"" + s + "\"");
    return v;
}

std::vector<double> exponents(const Common& c)
{
    std::vector<double> out;
    for (const auto& s : c.p) out.push_back(parse_exponent(s));
    return out;
}

std::vector<double> translation(const std::vector<double>& x, int d)
{
    if (x.empty()) return std::vector<double>(static_cast<std::size_t>(d), 0.0);
    if (static_cast<int>(x.size()) != d) throw std::invalid_argument("--x needs one entry per dimension");
    return x;
}

// CSV sink: --out file or stdout; --gnuplot writes <out>.gp next to it.
template <class Writer>
void emit(const Common& c, const std::string& kind, Writer&& write)
{
    if (c.out.empty()) {
        if (c.gnuplot) throw std::invalid_argument("--gnuplot needs --out");
        write(std::cout);
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open " + c.out);
    write(f);
    if (c.gnuplot) {
        std::ofstream g(c.out + ".gp", std::ios::binary);
        if (!g) throw std::invalid_argument("cannot open " + c.out + ".gp");
        g << gnuplot_script(c.out, kind);
    }
}

void add_common(CLI::App* sub, Common& c, bool with_p, bool with_sampling, bool with_shell)
{
    sub->add_option("--body", c.body, "body as JSON text or path to a JSON file");
    sub->add_option("--R", c.R, "dilation");
    if (with_p) sub->add_option("--p", c.p, "exponent(s), 'inf' allowed");
    if (with_sampling) {
        sub->add_option("--samples", c.samples, "Monte Carlo samples");
        sub->add_option("--seed", c.seed, "seed for all randomness");
        sub->add_option("--threads", c.threads, "worker threads");
    }
    if (with_shell) sub->add_option("--shell", c.shell, "frequency shell N");
    sub->add_option("--out", c.out, "CSV output path (default stdout)");
    sub->add_flag("--gnuplot", c.gnuplot, "also write <out>.gp");
}

int run(int argc, char** argv)
{
    CLI::App app{"Lattice point discrepancy of convex bodies"};
    app.require_subcommand(1);
    Common c;

    std::vector<double> x;
    auto* count = app.add_subcommand("count", "lattice points in R*body - x");
    add_common(count, c, false, false, false);
    count->add_option("--x", x, "translation");

    auto* disc = app.add_subcommand("discrepancy", "D(R*body - x)");
    add_common(disc, c, false, false, false);
    disc->add_option("--x", x, "translation");

    int grid = 0;
    auto* field = app.add_subcommand("field", "sample x -> D(R*body - x) on the torus");
    add_common(field, c, false, true, false);
    field->add_option("--grid", grid, "uniform grid per axis instead of Monte Carlo");

    double key_lemma_s = 0.0;
    auto* norms = app.add_subcommand("norms", "L^p, weak L^p and sup norms of a Monte Carlo field");
    add_common(norms, c, true, true, false);
    norms->add_option("--key-lemma", key_lemma_s, "also check the interpolation inequalities with this s > p");

    std::vector<double> xi;
    auto* fourier = app.add_subcommand("fourier", "spectral sequence R^d chi_hat(R n), or chi_hat at one --xi");
    add_common(fourier, c, false, false, true);
    fourier->add_option("--xi", xi, "single frequency");

    double lo_a = 20, hi_a = 40, lo_b = 100, hi_b = 200, factor = 2.0;
    int directions = 16;
    auto* asym = app.add_subcommand("asymptotic-check", "remainder of the stationary-phase leading term");
    add_common(asym, c, false, false, false);
    asym->add_option("--lo-window", lo_a, "lower window start")->capture_default_str();
    asym->add_option("--lo-window-end", hi_a, "lower window end")->capture_default_str();
    asym->add_option("--hi-window", lo_b, "upper window start")->capture_default_str();
    asym->add_option("--hi-window-end", hi_b, "upper window end")->capture_default_str();
    asym->add_option("--directions", directions, "directions")->capture_default_str();
    asym->add_option("--factor", factor, "allowed growth of the scaled remainder")->capture_default_str();

    double rho_min = 2, rho_max = 200;
    int rho_count = 20;
    auto* chords = app.add_subcommand("chords", "|chi_hat| against the chord bound");
    add_common(chords, c, false, false, false);
    chords->add_option("--rho-min", rho_min)->capture_default_str();
    chords->add_option("--rho-max", rho_max)->capture_default_str();
    chords->add_option("--rho-count", rho_count)->capture_default_str();
    chords->add_option("--directions", directions)->capture_default_str();

    std::vector<double> alphas;
    std::uint64_t j = 0;
    bool any_dimension = false;
    auto* dirichlet = app.add_subcommand("dirichlet", "simultaneous approximation certificate or exceptional radius");
    add_common(dirichlet, c, true, false, false);
    dirichlet->add_option("--alpha", alphas, "reals to approximate; without it the body's alpha set is used");
    dirichlet->add_option("--j", j, "approximation order")->required();
    dirichlet->add_flag("--any-dimension", any_dimension, "allow d != 1 (mod 4)");

    std::vector<double> radii;
    std::vector<int> k_range;
    std::string spectral_out;
    auto* sweep = app.add_subcommand("sweep", "norms over an R schedule");
    add_common(sweep, c, true, true, true);
    sweep->add_option("--radii", radii, "explicit schedule");
    sweep->add_option("--k-range", k_range, "R = 1.01*2^(k/2) for k in [k_lo, k_hi]")->expected(2);
    sweep->add_option("--spectral-out", spectral_out, "companion CSV of spectral norms");

    std::vector<std::uint64_t> j_list;
    int random_radii = 20;
    auto* dip = app.add_subcommand("dip", "normalized norm at exceptional radii against random radii");
    add_common(dip, c, true, true, false);
    dip->add_option("--j", j_list, "orders")->required();
    dip->add_option("--random-radii", random_radii)->capture_default_str();
    dip->add_flag("--any-dimension", any_dimension, "allow d != 1 (mod 4)");

    std::string in;
    std::string column = "strong";
    double gamma = 0.0, r_min = 8.0;
    std::vector<double> expect;
    auto* fit = app.add_subcommand("fit", "least-squares exponent of a sweep column");
    fit->add_option("--in", in, "sweep CSV")->required();
    fit->add_option("--p", c.p, "exponent");
    fit->add_option("--column", column, "strong, weak or sup")->capture_default_str();
    fit->add_option("--gamma", gamma, "divide by log^gamma R first")->capture_default_str();
    fit->add_option("--r-min", r_min, "fit window start")->capture_default_str();
    fit->add_option("--expect", expect, "fail with exit 2 unless slope is in [lo, hi]")->expected(2);
    fit->add_option("--out", c.out, "JSON output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (*fit) {
        std::ifstream f(in);
        if (!f) throw std::invalid_argument("cannot open " + in);
        const auto table = read_sweep_csv(f);
        const double p = parse_exponent(c.p.at(0));
        const auto r = fit_exponent(table, p, column, gamma, r_min);
        const nlohmann::json j_out = {{"p", p},           {"column", column},         {"gamma", gamma},
                                      {"slope", r.slope}, {"intercept", r.intercept}, {"residual_rms", r.residual_rms},
                                      {"r_min", r.r_min}, {"r_max", r.r_max},         {"points", r.points}};
        emit(c, "fit", [&](std::ostream& o) { o << j_out.dump(2) << '\n'; });
        if (!expect.empty() && !(r.slope >= expect[0] && r.slope <= expect[1]))
            throw CheckFailure("slope " + format_double(r.slope) + " outside [" + format_double(expect[0]) + ", "
                               + format_double(expect[1]) + "]");
        return 0;
    }

    const std::shared_ptr<const ConvexBody> body = load_body(c.body);
    const int d = body->dimension();

    if (*count) {
        const auto t = translation(x, d);
        const auto r = count_points_detailed(*body, c.R, t);
        std::cout << r.count << '\n';
        if (r.near_boundary) std::cerr << "note: " << r.near_boundary << " slice endpoints within 1e-9 of an integer\n";
    } else if (*disc) {
        std::cout << format_double(discrepancy(*body, c.R, translation(x, d))) << '\n';
    } else if (*field) {
        const SamplingMode mode = grid > 0 ? SamplingMode{UniformGrid{grid}} : SamplingMode{MonteCarlo{c.samples, c.seed}};
        FieldOptions opts;
        opts.threads = c.threads;
        const auto f = discrepancy_field(*body, c.R, mode, opts);
        emit(c, "field", [&](std::ostream& o) { write_csv(o, f); });
    } else if (*norms) {
        FieldOptions opts;
        opts.threads = c.threads;
        const auto f = discrepancy_field(*body, c.R, MonteCarlo{c.samples, c.seed}, opts);
        const auto ps = exponents(c);
        emit(c, "norms", [&](std::ostream& o) {
            write_csv_header(o);
            for (double p : ps) write_csv_row(o, body->id(), c.R, norm_report(f, p));
        });
        if (key_lemma_s > 0.0) {
            for (double p : ps) {
                const auto k = check_key_lemma(f.values, p, key_lemma_s);
                std::cerr << "key lemma p=" << format_double(p) << " s=" << format_double(key_lemma_s)
                          << ": (1) " << format_double(k.lp_power) << " <= " << format_double(k.bound_one) << ", (2) "
                          << format_double(k.ls_power) << " <= " << format_double(k.bound_two) << '\n';
                if (!k.first_holds() || !k.second_holds()) throw CheckFailure("interpolation inequality violated");
            }
        }
    } else if (*fourier) {
        if (!xi.empty()) {
            if (static_cast<int>(xi.size()) != d) throw std::invalid_argument("--xi needs one entry per dimension");
            const Complex v = chi_hat(*body, xi);
            std::cout << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
        } else {
            const auto seq = spectral_sequence(*body, c.R, c.shell);
            emit(c, "fourier", [&](std::ostream& o) { write_csv(o, seq); });
        }
    } else if (*asym) {
        const auto dirs = sample_directions(d, directions);
        auto scaled_max = [&](double a, double b) {
            double worst = 0.0;
            constexpr int steps = 200;
            for (const auto& u : dirs)
                for (int i = 0; i <= steps; ++i) {
                    const double rho = a + (b - a) * i / steps;
                    Point z(u.components().begin(), u.components().end());
                    for (auto& v : z) v *= rho;
                    const double err = std::abs(chi_hat(*body, z) - chi_hat_leading(*body, z));
                    worst = std::max(worst, err * std::pow(rho, 0.5 * (d + 3)));
                }
            return worst;
        };
        const double low = scaled_max(lo_a, hi_a), high = scaled_max(lo_b, hi_b);
        emit(c, "asymptotic", [&](std::ostream& o) {
            o << "window_lo,window_hi,max_scaled_remainder\n"
              << format_double(lo_a) << ',' << format_double(hi_a) << ',' << format_double(low) << '\n'
              << format_double(lo_b) << ',' << format_double(hi_b) << ',' << format_double(high) << '\n';
        });
        if (!(high <= factor * low)) throw CheckFailure("scaled remainder grew by more than the allowed factor");
    } else if (*chords) {
        if (rho_count < 2 || !(rho_min > 0.0 && rho_max > rho_min)) throw std::invalid_argument("bad rho range");
        std::vector<double> rhos;
        for (int i = 0; i < rho_count; ++i)
            rhos.push_back(rho_min * std::pow(rho_max / rho_min, double(i) / (rho_count - 1)));
        const auto rows = podkorytov_table(*body, rhos, directions);
        emit(c, "chords", [&](std::ostream& o) { write_csv(o, rows); });
        for (const auto& r : rows)
            if (r.chi_hat_abs > r.bound) throw CheckFailure("|chi_hat| exceeds the chord bound at rho=" + format_double(r.rho));
    } else if (*dirichlet) {
        nlohmann::json j_out;
        bool ok = false;
        if (!alphas.empty()) {
            const auto cert = dirichlet_search(alphas, j);
            ok = verify_certificate(cert);
            j_out = to_json(cert);
        } else {
            const auto plan = exceptional_radii(*body, parse_exponent(c.p.at(0)), j, any_dimension);
            ok = verify_certificate(plan.certificate);
            j_out = to_json(plan);
        }
        emit(c, "dirichlet", [&](std::ostream& o) { o << j_out.dump(2) << '\n'; });
        if (!ok) throw CheckFailure("certificate failed independent verification");
    } else if (*sweep) {
        SweepConfig cfg;
        cfg.body = body;
        if (!radii.empty() && !k_range.empty()) throw std::invalid_argument("give --radii or --k-range, not both");
        cfg.radii = k_range.empty() ? radii : default_schedule(k_range[0], k_range[1]);
        cfg.exponents = exponents(c);
        cfg.samples = c.samples;
        cfg.seed = c.seed;
        cfg.shell = c.shell;
        cfg.threads = c.threads;
        const auto table = run_sweep(cfg);
        emit(c, "sweep", [&](std::ostream& o) { write_csv(o, table); });
        if (!spectral_out.empty()) {
            std::ofstream f(spectral_out, std::ios::binary);
            if (!f) throw std::invalid_argument("cannot open " + spectral_out);
            write_spectral_csv(f, table);
        }
    } else if (*dip) {
        DipOptions opts;
        opts.samples = c.samples;
        opts.seed = c.seed;
        opts.random_radii = random_radii;
        opts.allow_any_dimension = any_dimension;
        opts.threads = c.threads;
        const auto table = dip_experiment(*body, parse_exponent(c.p.at(0)), j_list, opts);
        for (const auto& n : table.notices) std::cerr << "note: " << n << '\n';
        emit(c, "dip", [&](std::ostream& o) { write_csv(o, table); });
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const CheckFailure& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
