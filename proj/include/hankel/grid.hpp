#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Core>
#include <unsupported/Eigen/FFT>

#include "hankel/errors.hpp"
#include "hankel/trig_poly.hpp"

namespace hankel {

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_power_of_two(std::size_t n)
{
    std::size_t g = 1;
    while (g < n) g <<= 1;
    return g;
}

/// Equispaced points t_j = 2*pi*j/G on the torus, or t_j = 2*pi*(j+1/2)/G when staggered.
struct Grid {
    std::size_t size;
    bool staggered = false;

    explicit Grid(std::size_t g, bool stagger = false) : size(g), staggered(stagger)
    {
        if (!is_power_of_two(g)) throw DomainError("grid size must be a positive power of two");
    }

    template <typename Real = double>
    Real point(std::size_t j) const
    {
        const Real offset = staggered ? Real(0.5) : Real(0);
        return Real(2) * std::numbers::pi_v<Real> * (static_cast<Real>(j) + offset) / static_cast<Real>(size);
    }

    /// Smallest grid that resolves f without aliasing, scaled by `oversample`.
    template <typename Real>
    static Grid covering(const TrigPolyT<Real>& f, std::size_t oversample = 2, bool stagger = false)
    {
        const auto need = static_cast<std::size_t>(std::max<Freq>(f.span(), 1)) * oversample;
        return Grid(std::max<std::size_t>(next_power_of_two(need), 8), stagger);
    }
};

enum class EvalMethod { direct, fft };

namespace detail {

template <typename Real>
Freq wrap_index(Freq n, std::size_t g)
{
    const auto G = static_cast<Freq>(g);
    Freq r = n % G;
    return r < 0 ? r + G : r;
}

}  // namespace detail

///
/// Samples f(t_j) on the grid. Requires G >= 2*(max_freq - min_freq) + 1 so
/// that the samples determine f uniquely; both evaluation methods agree up
/// to rounding.
///
template <typename Real>
Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>
eval_grid(const TrigPolyT<Real>& f, const Grid& grid, EvalMethod method = EvalMethod::fft)
{
    using Scalar = std::complex<Real>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    const auto G = grid.size;
    if (!f.is_zero() && static_cast<Freq>(G) < 2 * (f.max_freq() - f.min_freq()) + 1)
        throw DegreeOverflow("grid of size " + std::to_string(G) + " is too small for a polynomial spanning [" +
                             std::to_string(f.min_freq()) + ", " + std::to_string(f.max_freq()) + "]");

    Vector out = Vector::Zero(static_cast<Eigen::Index>(G));
    if (f.is_zero()) return out;

    if (method == EvalMethod::direct) {
        for (std::size_t j = 0; j < G; ++j) out(static_cast<Eigen::Index>(j)) = f(grid.point<Real>(j));
        return out;
    }

    const Real shift = grid.staggered ? std::numbers::pi_v<Real> / static_cast<Real>(G) : Real(0);
    Vector bins = Vector::Zero(static_cast<Eigen::Index>(G));
    f.for_each_term([&](Freq n, Scalar c) {
        const Scalar phase = grid.staggered ? std::polar(Real(1), static_cast<Real>(n) * shift) : Scalar(1);
        bins(static_cast<Eigen::Index>(detail::wrap_index<Real>(n, G))) += c * phase;
    });
    Eigen::FFT<Real> fft;
    fft.SetFlag(Eigen::FFT<Real>::Unscaled);
    fft.inv(out, bins);
    return out;
}

///
/// Inverse of eval_grid: recovers the coefficients on [min_freq, max_freq]
/// from G samples.
///
template <typename Real>
TrigPolyT<Real> coefficients_from_grid(const Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>& values,
                                       const Grid& grid, Freq min_freq, Freq max_freq, PolyLimits limits = {})
{
    using Scalar = std::complex<Real>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    const auto G = grid.size;
    if (static_cast<std::size_t>(values.size()) != G) throw DomainError("sample count does not match grid size");
    if (max_freq < min_freq) return TrigPolyT<Real>(limits);
    if (static_cast<Freq>(G) < max_freq - min_freq + 1)
        throw DegreeOverflow("grid too small to recover the requested frequency range");

    Eigen::FFT<Real> fft;
    Vector spectrum;
    fft.fwd(spectrum, values);
    const Real shift = grid.staggered ? std::numbers::pi_v<Real> / static_cast<Real>(G) : Real(0);
    Vector c(static_cast<Eigen::Index>(max_freq - min_freq + 1));
    for (Freq n = min_freq; n <= max_freq; ++n) {
        Scalar v = spectrum(static_cast<Eigen::Index>(detail::wrap_index<Real>(n, G))) / static_cast<Real>(G);
        if (grid.staggered) v *= std::polar(Real(1), -static_cast<Real>(n) * shift);
        c(static_cast<Eigen::Index>(n - min_freq)) = v;
    }
    return TrigPolyT<Real>(min_freq, std::move(c), limits);
}

}  // namespace hankel
