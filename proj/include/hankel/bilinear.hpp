#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hankel/errors.hpp"
#include "hankel/fourier.hpp"
#include "hankel/grid.hpp"
#include "hankel/hankel.hpp"
#include "hankel/trig_poly.hpp"

namespace hankel {

///
/// Integer parameters of the periodic bilinear Hilbert transforms.
/// All transforms here carry the 1/(2 pi) normalisation, so the cot kernel
/// acts as the multiplier -i sign(n).
///
struct BHTParams {
    Freq k = 1;
    Freq l = 1;
    Freq mu = 0;

    Freq L() const { return k + l; }

    /// k != -l and l != 0; the mu bound is only checked when `with_mu`.
    void validate(bool with_mu = true) const
    {
        if (l == 0) throw DomainError("bilinear Hilbert transform needs l != 0");
        if (k == -l) throw DomainError("bilinear Hilbert transform needs k != -l");
        if (with_mu && std::abs(mu) > std::abs(l))
            throw DomainError("mu = " + std::to_string(mu) + " lies outside [-|l|, |l|]");
    }
};

namespace detail {

inline int sign(Freq v) { return (v > 0) - (v < 0); }

/// Collects (frequency, amplitude) contributions into a polynomial.
template <typename Real>
class SpectrumAccumulator {
public:
    using Scalar = std::complex<Real>;

    SpectrumAccumulator(Freq lo, Freq hi, PolyLimits limits)
        : m_lo(lo), m_c(Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(hi - lo + 1)), m_limits(limits)
    {
    }

    void add(Freq n, Scalar v) { m_c(n - m_lo) += v; }

    TrigPolyT<Real> finish() { return TrigPolyT<Real>(m_lo, std::move(m_c), m_limits); }

private:
    Freq m_lo;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> m_c;
    PolyLimits m_limits;
};

inline std::pair<Freq, Freq> scaled_range(Freq lo, Freq hi, Freq s)
{
    return {std::min(s * lo, s * hi), std::max(s * lo, s * hi)};
}

}  // namespace detail

///
/// H_{k,l}(b, f)(x) = (1/2pi) p.v. int b(kx + lt) f(t) cot((x - t)/2) dt.
///
/// Each pair b_p e^{ipu}, a_q e^{iqt} contributes -i sign(pl + q) b_p a_q at
/// frequency (k + l) p + q.
///
template <typename Real>
TrigPolyT<Real> bht_fourier(const TrigPolyT<Real>& b, const TrigPolyT<Real>& f, Freq k, Freq l)
{
    using Scalar = std::complex<Real>;
    BHTParams{k, l, 0}.validate(false);
    if (b.is_zero() || f.is_zero()) return TrigPolyT<Real>(f.limits());
    const Freq L = k + l;
    const auto [plo, phi] = detail::scaled_range(b.min_freq(), b.max_freq(), L);
    detail::SpectrumAccumulator<Real> acc(plo + f.min_freq(), phi + f.max_freq(), f.limits());
    const Scalar minus_i(0, -1);
    b.for_each_term([&](Freq p, Scalar bp) {
        f.for_each_term([&](Freq q, Scalar aq) {
            const int s = detail::sign(p * l + q);
            if (s != 0) acc.add(L * p + q, minus_i * static_cast<Real>(s) * bp * aq);
        });
    });
    return acc.finish();
}

///
/// H_{k,l,mu}(b, f)(x) = (1/2pi) p.v. int (b(kx + lt) e^{i mu (x-t)} - b((k+l)x)) f((k+l)t) cot((x-t)/2) dt.
///
/// Each pair b_p, a_q contributes -i [sign(pl + qL - mu) - sign(qL)] b_p a_q at
/// frequency (p + q) L, so the output spectrum lies in L Z.
///
template <typename Real>
TrigPolyT<Real> bht_mu_fourier(const TrigPolyT<Real>& b, const TrigPolyT<Real>& f, const BHTParams& params)
{
    using Scalar = std::complex<Real>;
    params.validate();
    if (b.is_zero() || f.is_zero()) return TrigPolyT<Real>(f.limits());
    const Freq L = params.L();
    const auto [lo, hi] = detail::scaled_range(b.min_freq() + f.min_freq(), b.max_freq() + f.max_freq(), L);
    detail::SpectrumAccumulator<Real> acc(lo, hi, f.limits());
    const Scalar minus_i(0, -1);
    b.for_each_term([&](Freq p, Scalar bp) {
        f.for_each_term([&](Freq q, Scalar aq) {
            const int bracket = detail::sign(p * params.l + q * L - params.mu) - detail::sign(q * L);
            if (bracket != 0) acc.add((p + q) * L, minus_i * static_cast<Real>(bracket) * bp * aq);
        });
    });
    return acc.finish();
}

enum class QuadratureVariant { plain_kl, mu_form };

///
/// Midpoint-rule p.v. integral on the staggered nodes t_m = 2pi(m + 1/2)/G,
/// evaluated at x_j = 2pi j/G; the singular node t = x is never sampled.
/// Inputs are sampled by direct evaluation, never through their spectra.
/// Cost O(G^2).
///
template <typename Real>
Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>
pv_quadrature(const TrigPolyT<Real>& b, const TrigPolyT<Real>& f, const BHTParams& params, std::size_t G,
              QuadratureVariant variant)
{
    using Scalar = std::complex<Real>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    params.validate(variant == QuadratureVariant::mu_form);
    if (!is_power_of_two(G)) throw DomainError("quadrature size must be a power of two");

    const auto g = static_cast<Freq>(G);
    const Freq g2 = 2 * g;
    const Real pi = std::numbers::pi_v<Real>;
    auto wrap2 = [g2](Freq v) { return ((v % g2) + g2) % g2; };

    // Samples on the doubled grid 2 pi s / (2G) cover both x_j and t_m.
    Vector bfine(g2), ffine(g2);
    for (Freq s = 0; s < g2; ++s) {
        const Real t = pi * static_cast<Real>(s) / static_cast<Real>(g);
        bfine(s) = b(t);
        ffine(s) = f(t);
    }
    // (x_j - t_m)/2 = pi (2d - 1) / (2G) with d = (j - m) mod G.
    Eigen::Matrix<Real, Eigen::Dynamic, 1> cot_table(g);
    Vector phase_table(g);
    for (Freq d = 0; d < g; ++d) {
        const Real half_angle = pi * static_cast<Real>(2 * d - 1) / static_cast<Real>(g2);
        cot_table(d) = std::cos(half_angle) / std::sin(half_angle);
        phase_table(d) = std::polar(Real(1), static_cast<Real>(params.mu) * Real(2) * half_angle);
    }
    // cot_rev(s) = cot_table((-s) mod G) over s in [0, 2G), so the weights of row j
    // form the contiguous segment starting at G - j.
    Eigen::Matrix<Real, Eigen::Dynamic, 1> cot_rev(g2);
    for (Freq s = 0; s < g2; ++s) cot_rev(s) = cot_table(((-s) % g + g) % g);

    const Freq k = params.k, l = params.l, L = params.L();
    using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
    Vector out(g);
    RealVector re(g), im(g);
    for (Freq j = 0; j < g; ++j) {
        // b(k x_j + l t_m) sits at doubled-grid index 2kj + l(2m + 1).
        Freq bidx = wrap2(2 * k * j + l);
        const Freq bstep = wrap2(2 * l);
        if (variant == QuadratureVariant::plain_kl) {
            for (Freq m = 0; m < g; ++m) {
                const Scalar v = bfine(bidx) * ffine(2 * m + 1);
                re(m) = v.real();
                im(m) = v.imag();
                bidx += bstep;
                if (bidx >= g2) bidx -= g2;
            }
        } else {
            const Scalar bdiag = bfine(wrap2(2 * L * j));
            Freq fidx = wrap2(L);
            const Freq fstep = wrap2(2 * L);
            for (Freq m = 0; m < g; ++m) {
                const Freq d = j >= m ? j - m : j - m + g;
                const Scalar v = (bfine(bidx) * phase_table(d) - bdiag) * ffine(fidx);
                re(m) = v.real();
                im(m) = v.imag();
                bidx += bstep;
                if (bidx >= g2) bidx -= g2;
                fidx += fstep;
                if (fidx >= g2) fidx -= g2;
            }
        }
        const auto w = cot_rev.segment(g - j, g);
        out(j) = Scalar(re.dot(w), im.dot(w)) / static_cast<Real>(g);
    }
    return out;
}

/// Relative sup distance between pv_quadrature and the Fourier-multiplier path on x_j = 2 pi j / G.
template <typename Real>
Real pv_quadrature_error(const TrigPolyT<Real>& b, const TrigPolyT<Real>& f, const BHTParams& params, std::size_t G,
                         QuadratureVariant variant)
{
    const auto quad = pv_quadrature(b, f, params, G, variant);
    const auto exact = variant == QuadratureVariant::plain_kl ? bht_fourier(b, f, params.k, params.l)
                                                              : bht_mu_fourier(b, f, params);
    const auto ref = eval_grid(exact, Grid(G), EvalMethod::direct);
    const Real scale = ref.size() ? ref.cwiseAbs().maxCoeff() : Real(0);
    const Real err = (quad - ref).cwiseAbs().maxCoeff();
    return scale > Real(0) ? err / scale : err;
}

///
/// Checks that the analytic part of
///   (1/2pi) p.v. int b(kx + lt) e^{i gamma_l (x - t)} f̌((k+l)t) cot((x-t)/2) dt,
/// multiplied by i, equals sign(l) (2 Pi°_{beta,gamma} - I)(H_b f)(e^{i(k+l)x}) with
/// beta = k/l, gamma = gamma_l/l and Pi° the half-weight truncation.
/// Requires k + l > 0. Returns the largest coefficient residual.
///
template <typename Real>
Real link_identity_check(const HankelSymbolT<Real>& b, const TrigPolyT<Real>& f, Freq k, Freq l, Freq gamma_l)
{
    using Scalar = std::complex<Real>;
    BHTParams{k, l, 0}.validate(false);
    const Freq L = k + l;
    if (L <= 0) throw DomainError("link identity is stated for k + l > 0");
    if (!f.is_analytic()) throw DomainError("link identity needs an analytic input");

    // Fourier side: e^{i gamma_l x} H_{k,l}(b, e^{-i gamma_l t} f̌((k+l)t)).
    const auto inner = modulate(dilate(flip(f), L), -gamma_l);
    const auto bilinear = modulate(bht_fourier(b.poly(), inner, k, l), gamma_l);
    const auto lhs = analytic_part(bilinear) * Scalar(0, 1);

    // Truncation side.
    const auto spec = TruncationSpecT<Real>::linear(static_cast<Real>(k) / static_cast<Real>(l),
                                                    static_cast<Real>(gamma_l) / static_cast<Real>(l),
                                                    Boundary::half);
    const auto kept = truncated_apply(b, spec, f);
    const auto full = hankel_apply(b, f);
    const auto rhs = dilate(kept * Scalar(2) - full, L) * Scalar(static_cast<Real>(l > 0 ? 1 : -1));
    return max_coeff_diff(lhs, rhs);
}

///
/// Residual of the translation law
///   H_{k,l,mu}(b(. + L y), f(. + L y)) = H_{k,l,mu}(b, f)(. + y),   L = k + l.
/// Both arguments are shifted by L y in their own variables: f enters the
/// transform through f((k+l)t), so this is a shift by y of t -> f((k+l)t).
///
template <typename Real>
Real translation_covariance_check(const TrigPolyT<Real>& b, const TrigPolyT<Real>& f, const BHTParams& params,
                                  Real y)
{
    const Real Ly = static_cast<Real>(params.L()) * y;
    const auto lhs = bht_mu_fourier(translate(b, Ly), translate(f, Ly), params);
    const auto rhs = translate(bht_mu_fourier(b, f, params), y);
    return max_coeff_diff(lhs, rhs);
}

/// Midpoint cells covering the support [lo, hi] of f on the real line.
struct RealLineGrid {
    double lo = -1;
    double hi = 1;
    std::size_t cells = 1024;

    double step() const { return (hi - lo) / static_cast<double>(cells); }
};

///
/// H_beta(b, f)(x) = int [b(x + beta(s - x)) - b(x)] f(s) ds / (x - s)
/// by the midpoint rule over the support of f. A node that coincides with x
/// is skipped; the bracket vanishes there for Lipschitz b.
///
template <typename Real = double>
std::vector<std::complex<Real>> real_line_bht(const std::function<std::complex<Real>(Real)>& b,
                                              const std::function<std::complex<Real>(Real)>& f, Real beta,
                                              const RealLineGrid& grid, std::span<const Real> xs)
{
    if (!(grid.hi > grid.lo) || grid.cells == 0) throw DomainError("real-line quadrature needs a nonempty support");
    if (xs.empty()) throw DomainError("real-line quadrature needs at least one evaluation point");
    const Real h = static_cast<Real>(grid.step());
    std::vector<std::complex<Real>> fs(grid.cells);
    std::vector<Real> nodes(grid.cells);
    for (std::size_t m = 0; m < grid.cells; ++m) {
        nodes[m] = static_cast<Real>(grid.lo) + (static_cast<Real>(m) + Real(0.5)) * h;
        fs[m] = f(nodes[m]);
    }
    std::vector<std::complex<Real>> out;
    out.reserve(xs.size());
    for (const Real x : xs) {
        const std::complex<Real> bx = b(x);
        std::complex<Real> acc(0);
        for (std::size_t m = 0; m < grid.cells; ++m) {
            const Real gap = x - nodes[m];
            if (std::abs(gap) <= Real(1e-9) * h) continue;
            acc += (b(x + beta * (nodes[m] - x)) - bx) * fs[m] / gap;
        }
        out.push_back(acc * h);
    }
    return out;
}

}  // namespace hankel
