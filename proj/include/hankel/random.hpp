#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace hankel {

///
/// Seeded stream with platform-independent output: only raw mt19937_64
/// words are consumed, never the implementation-defined std distributions.
///
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : m_engine(seed), m_seed(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(m_engine() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        const auto width = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(m_engine() % width);
    }

    /// Standard normal (Box-Muller).
    double normal()
    {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Standard complex Gaussian.
    std::complex<double> complex_normal()
    {
        const double re = normal();
        return {re, normal()};
    }

    std::complex<double> unit_phase() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

    std::uint64_t seed() const { return m_seed; }

    /// Independent child stream, e.g. one per grid point of a sweep.
    RandomStream split(std::uint64_t salt) const
    {
        std::uint64_t z = m_seed ^ (salt * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return RandomStream(z ^ (z >> 31));
    }

private:
    std::mt19937_64 m_engine;
    std::uint64_t m_seed;
};

}  // namespace hankel
