#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "latdisc/convex_body.hpp"

namespace latdisc {

struct CountOptions
{
    /// Enumeration guard: R * diameter must not exceed this.
    double max_scaled_diameter = 1e4;
};

struct CountResult
{
    std::uint64_t count = 0;
    /// Slice endpoints that landed within 1e-9 of an integer.
    std::uint64_t near_boundary = 0;
};

/// Counts Z^d points in the closed set R*body - x by slicing: the first d-1
/// coordinates run over the projected body, the last is resolved as an interval.
CountResult count_points_detailed(const ConvexBody& body, double R, std::span<const double> x,
                                  const CountOptions& options = {});

std::uint64_t count_points(const ConvexBody& body, double R, std::span<const double> x,
                           const CountOptions& options = {});

/// D(R body - x) = count - R^d |body|
double discrepancy(const ConvexBody& body, double R, std::span<const double> x, const CountOptions& options = {});

struct UniformGrid
{
    int per_axis = 2;
};

struct MonteCarlo
{
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
};

using SamplingMode = std::variant<UniformGrid, MonteCarlo>;

std::string describe(const SamplingMode& mode);

struct FieldOptions
{
    CountOptions count;
    /// Upper bound on the number of stored samples.
    std::size_t max_samples = 50'000'000;
    unsigned threads = 1;
};

/// Samples of x -> D(R body - x) over the unit torus [0,1)^d.
struct DiscrepancyField
{
    std::string body_id;
    int dimension = 0;
    double R = 0.0;
    SamplingMode mode;
    std::vector<double> points; // row-major, dimension entries per sample
    std::vector<double> values;
    std::uint64_t near_boundary = 0;

    std::size_t size() const { return values.size(); }
    std::span<const double> point(std::size_t i) const
    {
        return std::span<const double>(points).subspan(i * static_cast<std::size_t>(dimension),
                                                       static_cast<std::size_t>(dimension));
    }
};

/// Uniform grid samples x = i/G; Monte Carlo samples use a 64-bit Mersenne
/// twister seeded from `seed`, so fields are bit-reproducible.
DiscrepancyField discrepancy_field(const ConvexBody& body, double R, const SamplingMode& mode,
                                   const FieldOptions& options = {});

/// Header `# body=<id> R=<val> mode=<...> seed=<...>` then rows `x_1,...,x_d,D`.
void write_csv(std::ostream& out, const DiscrepancyField& field);

} // namespace latdisc
