#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <system_error>
#include <thread>
#include <vector>

namespace latdisc {

/// Shortest round-trip decimal representation. Used for every CSV/JSON
/// number so output bytes depend only on the value.
inline std::string format_double(double v)
{
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, end);
}

/// Uniform double in [0,1) from the top 53 bits of a 64-bit draw. Bit-exact
/// across standard libraries, unlike std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& gen)
{
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Generator for stream `stream` derived from a single user seed.
inline std::mt19937_64 derived_generator(std::uint64_t seed, std::uint64_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

struct GoldenResult
{
    double x;
    double value;
};

/// Maximizes f on [a,b] by golden-section search.
template <class F>
GoldenResult golden_maximize(F&& f, double a, double b, double tol = 1e-12, int max_iter = 200)
{
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? GoldenResult{c, fc} : GoldenResult{d, fd};
}

/// Maximizes a smooth 2pi-periodic function: dense grid, then golden-section
/// refinement around the best grid node.
template <class F>
GoldenResult periodic_maximize(F&& f, int grid = 4096, double tol = 1e-12)
{
    const double step = 2.0 * 3.14159265358979323846 / grid;
    int best = 0;
    double best_value = f(0.0);
    for (int i = 1; i < grid; ++i) {
        const double v = f(i * step);
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }
    auto refined = golden_maximize(f, (best - 1) * step, (best + 1) * step, tol);
    if (refined.value >= best_value) return refined;
    return {best * step, best_value};
}

/// Runs body(i) for i in [0,n). Work is split into contiguous chunks; each
/// index writes only its own output slot, so results are order-independent.
inline void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body)
{
    if (threads <= 1 || n < 2 * static_cast<std::size_t>(threads)) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        const std::size_t chunk = (n + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([lo, hi, &body, &err = errors[t]] {
                try {
                    for (std::size_t i = lo; i < hi; ++i) body(i);
                } catch (...) {
                    err = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

inline unsigned default_threads()
{
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

} // namespace latdisc
