#pragma once

// Reference implementations used only by the tests. Each one takes a route
// that does not share code with the library path it checks.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "hankel/random.hpp"
#include "hankel/trig_poly.hpp"

namespace oracle {

using hankel::cplx;
using hankel::Freq;
using hankel::TrigPoly;

inline cplx eval(const TrigPoly& f, double t)
{
    cplx acc(0);
    for (Freq n = f.min_freq(); n <= f.max_freq() && !f.is_zero(); ++n)
        acc += f.coeff(n) * std::exp(cplx(0, static_cast<double>(n) * t));
    return acc;
}

inline TrigPoly random_poly(hankel::RandomStream& rng, Freq lo, Freq hi)
{
    std::vector<std::pair<Freq, cplx>> terms;
    for (Freq n = lo; n <= hi; ++n) terms.emplace_back(n, rng.complex_normal());
    return TrigPoly::from_terms(terms);
}

inline TrigPoly random_analytic(hankel::RandomStream& rng, Freq degree) { return random_poly(rng, 0, degree); }

/// Coefficients of a polynomial as a std::vector over [0, size).
inline std::vector<cplx> dense(const TrigPoly& f, Freq size)
{
    std::vector<cplx> v(static_cast<std::size_t>(size));
    for (Freq n = 0; n < size; ++n) v[static_cast<std::size_t>(n)] = f.coeff(n);
    return v;
}

/// (H_b f)_m = sum_n b_{m+n} a_n with the mask m >= beta n + gamma evaluated in
/// exact rational form beta = bn/bd, gamma = gn/gd (bd, gd > 0); the boundary
/// weight is `on_line`.
inline std::vector<cplx> masked_hankel(const TrigPoly& b, const TrigPoly& f, Freq bn, Freq bd, Freq gn, Freq gd,
                                       double on_line, bool masked = true)
{
    const Freq K = b.is_zero() ? -1 : b.max_freq();
    std::vector<cplx> out(static_cast<std::size_t>(std::max<Freq>(K + 1, 0)));
    for (Freq m = 0; m <= K; ++m)
        for (Freq n = 0; m + n <= K && !f.is_zero() && n <= f.max_freq(); ++n) {
            double w = 1;
            if (masked) {
                // m >= (bn/bd) n + gn/gd  <=>  m bd gd >= bn n gd + gn bd
                const Freq lhs = m * bd * gd, rhs = bn * n * gd + gn * bd;
                w = lhs > rhs ? 1 : (lhs == rhs ? on_line : 0);
            }
            out[static_cast<std::size_t>(m)] += w * b.coeff(m + n) * f.coeff(n);
        }
    return out;
}

inline double max_diff(const std::vector<cplx>& a, const TrigPoly& f)
{
    double e = 0;
    for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - f.coeff(static_cast<Freq>(i))));
    if (!f.is_zero())
        for (Freq n = f.min_freq(); n <= f.max_freq(); ++n)
            if (n < 0 || n >= static_cast<Freq>(a.size())) e = std::max(e, std::abs(f.coeff(n)));
    return e;
}

///
/// Conjugate function of t -> b(kx + lt) f(t) evaluated at t = x, from the DFT
/// of its samples on an equispaced grid large enough to resolve it.
///
inline cplx bht_at(const TrigPoly& b, const TrigPoly& f, Freq k, Freq l, double x)
{
    const Freq span = std::abs(l) * std::max(std::abs(b.min_freq()), std::abs(b.max_freq())) +
                      std::max(std::abs(f.min_freq()), std::abs(f.max_freq()));
    const Freq G = 2 * span + 3;
    std::vector<cplx> g(static_cast<std::size_t>(G));
    for (Freq s = 0; s < G; ++s) {
        const double t = 2 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(G);
        g[static_cast<std::size_t>(s)] = eval(b, static_cast<double>(k) * x + static_cast<double>(l) * t) * eval(f, t);
    }
    cplx acc(0);
    for (Freq n = -span; n <= span; ++n) {
        if (n == 0) continue;
        cplx c(0);
        for (Freq s = 0; s < G; ++s) {
            const double t = 2 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(G);
            c += g[static_cast<std::size_t>(s)] * std::exp(cplx(0, -static_cast<double>(n) * t));
        }
        c /= static_cast<double>(G);
        acc += cplx(0, n > 0 ? -1.0 : 1.0) * c * std::exp(cplx(0, static_cast<double>(n) * x));
    }
    return acc;
}

inline double largest_singular_value(const Eigen::MatrixXcd& A)
{
    if (A.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
    return svd.singularValues()(0);
}

/// (1/2pi) int_0^{2pi} |D_1| with D_1 = 1 + 2 cos t, integrated piecewise in closed form.
inline double lebesgue_one() { return 1.0 / 3.0 + 2.0 * std::sqrt(3.0) / std::numbers::pi; }

/// Least-squares slope and R^2 of y against x.
struct Fit {
    double slope;
    double r2;
};

inline Fit linear_fit(const std::vector<double>& x, const std::vector<double>& y)
{
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    const double slope = sxy / sxx;
    return {slope, syy > 0 ? slope * slope * sxx / syy : 1.0};
}

}  // namespace oracle
