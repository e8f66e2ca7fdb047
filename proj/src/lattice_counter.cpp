#include "latdisc/lattice_counter.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "latdisc/numeric.hpp"

namespace latdisc {

namespace {

constexpr double kNearInteger = 1e-9;

bool near_integer(double v) { return std::abs(v - std::nearbyint(v)) < kNearInteger; }

struct SliceCounter
{
    const ConvexBody& body;
    double R;
    std::span<const double> x;
    std::size_t d;
    Point prefix;
    CountResult result;

    // Integer k with lo <= k <= hi in lattice units for coordinate m.
    bool lattice_range(const Interval& iv, std::size_t m, long long& k_lo, long long& k_hi)
    {
        const double lo = R * iv.lo - x[m];
        const double hi = R * iv.hi - x[m];
        if (near_integer(lo)) ++result.near_boundary;
        if (near_integer(hi)) ++result.near_boundary;
        k_lo = static_cast<long long>(std::ceil(lo));
        k_hi = static_cast<long long>(std::floor(hi));
        return k_lo <= k_hi;
    }

    void recurse(std::size_t m)
    {
        const auto iv = body.slice_range(std::span<const double>(prefix.data(), m));
        if (!iv) return;
        long long k_lo = 0, k_hi = 0;
        if (!lattice_range(*iv, m, k_lo, k_hi)) return;
        if (m + 1 == d) {
            result.count += static_cast<std::uint64_t>(k_hi - k_lo + 1);
            return;
        }
        for (long long k = k_lo; k <= k_hi; ++k) {
            prefix[m] = (static_cast<double>(k) + x[m]) / R;
            recurse(m + 1);
        }
    }
};

void validate(const ConvexBody& body, double R, std::span<const double> x, const CountOptions& options)
{
    if (!(R > 0.0) || !std::isfinite(R)) throw std::invalid_argument("count_points: R must be positive");
    if (x.size() != static_cast<std::size_t>(body.dimension()))
        throw std::invalid_argument("count_points: translation dimension mismatch");
    if (R * body.diameter() > options.max_scaled_diameter)
        throw std::invalid_argument("count_points: R*diameter exceeds the enumeration cap ("
                                    + format_double(options.max_scaled_diameter) + ")");
}

} // namespace

CountResult count_points_detailed(const ConvexBody& body, double R, std::span<const double> x,
                                  const CountOptions& options)
{
    validate(body, R, x, options);
    const auto d = static_cast<std::size_t>(body.dimension());
    SliceCounter counter{body, R, x, d, Point(d, 0.0), {}};
    counter.recurse(0);
    return counter.result;
}

std::uint64_t count_points(const ConvexBody& body, double R, std::span<const double> x, const CountOptions& options)
{
    return count_points_detailed(body, R, x, options).count;
}

double discrepancy(const ConvexBody& body, double R, std::span<const double> x, const CountOptions& options)
{
    const auto n = count_points(body, R, x, options);
    return static_cast<double>(n) - std::pow(R, body.dimension()) * body.volume();
}

std::string describe(const SamplingMode& mode)
{
    if (const auto* g = std::get_if<UniformGrid>(&mode)) return "grid(" + std::to_string(g->per_axis) + ")";
    const auto& mc = std::get<MonteCarlo>(mode);
    return "mc(" + std::to_string(mc.samples) + ")";
}

DiscrepancyField discrepancy_field(const ConvexBody& body, double R, const SamplingMode& mode,
                                   const FieldOptions& options)
{
    validate(body, R, Point(static_cast<std::size_t>(body.dimension()), 0.0), options.count);
    const auto d = static_cast<std::size_t>(body.dimension());

    DiscrepancyField field;
    field.body_id = body.id();
    field.dimension = body.dimension();
    field.R = R;
    field.mode = mode;

    std::size_t n = 0;
    if (const auto* g = std::get_if<UniformGrid>(&mode)) {
        if (g->per_axis < 1) throw std::invalid_argument("discrepancy_field: grid size must be >= 1");
        double total = std::pow(static_cast<double>(g->per_axis), static_cast<double>(d));
        if (total > static_cast<double>(options.max_samples))
            throw std::invalid_argument("discrepancy_field: grid exceeds the sample cap");
        n = static_cast<std::size_t>(total);
        field.points.resize(n * d);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t rem = i;
            for (std::size_t c = d; c-- > 0;) {
                field.points[i * d + c] = static_cast<double>(rem % g->per_axis) / g->per_axis;
                rem /= g->per_axis;
            }
        }
    } else {
        const auto& mc = std::get<MonteCarlo>(mode);
        if (mc.samples < 1) throw std::invalid_argument("discrepancy_field: need at least one sample");
        if (mc.samples > options.max_samples)
            throw std::invalid_argument("discrepancy_field: sample count exceeds the sample cap");
        n = mc.samples;
        std::mt19937_64 gen(mc.seed);
        field.points.resize(n * d);
        for (double& v : field.points) v = uniform01(gen);
    }

    field.values.assign(n, 0.0);
    std::vector<std::uint64_t> flags(n, 0);
    const double expected = std::pow(R, body.dimension()) * body.volume();
    parallel_for(n, options.threads, [&](std::size_t i) {
        const auto r = count_points_detailed(body, R, field.point(i), options.count);
        field.values[i] = static_cast<double>(r.count) - expected;
        flags[i] = r.near_boundary;
    });

    const double guard = std::pow(2.0 * R * body.diameter() + 3.0, body.dimension());
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(field.values[i]) > guard)
            throw std::logic_error("discrepancy_field: |D| exceeds the box bound; counting is broken");
        field.near_boundary += flags[i];
    }
    return field;
}

void write_csv(std::ostream& out, const DiscrepancyField& field)
{
    out << "# body=" << field.body_id << " R=" << format_double(field.R) << " mode=" << describe(field.mode)
        << " seed=";
    if (const auto* mc = std::get_if<MonteCarlo>(&field.mode))
        out << mc->seed;
    else
        out << "none";
    out << '\n';
    const auto d = static_cast<std::size_t>(field.dimension);
    for (std::size_t i = 0; i < field.size(); ++i) {
        for (std::size_t c = 0; c < d; ++c) out << format_double(field.points[i * d + c]) << ',';
        out << format_double(field.values[i]) << '\n';
    }
}

} // namespace latdisc
