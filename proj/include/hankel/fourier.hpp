#pragma once

#include <cmath>
#include <complex>

#include "hankel/grid.hpp"
#include "hankel/trig_poly.hpp"

namespace hankel {

/// Coefficient convolution; the spectrum of the result is the sumset of the spectra.
template <typename Real>
TrigPolyT<Real> multiply(const TrigPolyT<Real>& f, const TrigPolyT<Real>& g)
{
    using Poly = TrigPolyT<Real>;
    using Vector = typename Poly::Vector;
    if (f.is_zero() || g.is_zero()) return Poly(f.limits());
    const Freq lo = f.min_freq() + g.min_freq();
    const Freq hi = f.max_freq() + g.max_freq();
    Poly::check_degree(lo, hi, f.limits());

    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    const Eigen::Index n = a.size(), m = b.size();
    Vector c = Vector::Zero(n + m - 1);
    if (n * m <= (Eigen::Index{1} << 18)) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (a(i) == typename Poly::Scalar(0)) continue;
            c.segment(i, m) += a(i) * b;
        }
        return Poly(lo, std::move(c), f.limits());
    }

    const auto G = static_cast<Eigen::Index>(next_power_of_two(static_cast<std::size_t>(n + m - 1)));
    Vector pa = Vector::Zero(G), pb = Vector::Zero(G), fa, fb, out;
    pa.head(n) = a;
    pb.head(m) = b;
    Eigen::FFT<Real> fft;
    fft.fwd(fa, pa);
    fft.fwd(fb, pb);
    Vector prod = fa.cwiseProduct(fb);
    fft.inv(out, prod);
    c = out.head(n + m - 1);
    return Poly(lo, std::move(c), f.limits());
}

/// Riesz projection: keeps frequencies n >= 0.
template <typename Real>
TrigPolyT<Real> analytic_part(const TrigPolyT<Real>& f)
{
    return f.map_coeffs([](Freq n, auto c) { return n >= 0 ? c : decltype(c)(0); });
}

/// f̌(t) = f(-t): the coefficient at n moves to -n.
template <typename Real>
TrigPolyT<Real> flip(const TrigPolyT<Real>& f)
{
    using Poly = TrigPolyT<Real>;
    if (f.is_zero()) return f;
    typename Poly::Vector v = f.coeffs().reverse();
    return Poly(-f.max_freq(), std::move(v), f.limits());
}

/// Periodic conjugate function: multiplier -i sign(n), sign(0) = 0.
template <typename Real>
TrigPolyT<Real> conjugate_op(const TrigPolyT<Real>& f)
{
    using Scalar = std::complex<Real>;
    return f.map_coeffs([](Freq n, Scalar c) {
        if (n == 0) return Scalar(0);
        return n > 0 ? Scalar(c.imag(), -c.real()) : Scalar(-c.imag(), c.real());
    });
}

/// S_N: keeps |n| <= N.
template <typename Real>
TrigPolyT<Real> partial_sum(const TrigPolyT<Real>& f, Freq N)
{
    if (N < 0) throw DomainError("partial_sum order must be nonnegative");
    return f.map_coeffs([N](Freq n, auto c) { return std::abs(n) <= N ? c : decltype(c)(0); });
}

/// S_N^+: keeps n <= N.
template <typename Real>
TrigPolyT<Real> analytic_partial_sum(const TrigPolyT<Real>& f, Freq N)
{
    return f.map_coeffs([N](Freq n, auto c) { return n <= N ? c : decltype(c)(0); });
}

/// P_N: keeps n >= N.
template <typename Real>
TrigPolyT<Real> tail_projection(const TrigPolyT<Real>& f, Freq N)
{
    return f.map_coeffs([N](Freq n, auto c) { return n >= N ? c : decltype(c)(0); });
}

/// D_N = sum_{|n|<=N} e^{int}.
template <typename Real = double>
TrigPolyT<Real> dirichlet_kernel(Freq N, PolyLimits limits = {})
{
    using Poly = TrigPolyT<Real>;
    if (N < 0) throw DomainError("Dirichlet kernel order must be nonnegative");
    Poly::check_degree(-N, N, limits);
    return Poly(-N, Poly::Vector::Ones(2 * N + 1), limits);
}

/// f(t) -> f(t + y), i.e. c_n -> c_n e^{iny}.
template <typename Real>
TrigPolyT<Real> translate(const TrigPolyT<Real>& f, Real y)
{
    return f.map_coeffs([y](Freq n, auto c) { return c * std::polar(Real(1), static_cast<Real>(n) * y); });
}

/// f(t) -> f(s t) for a nonzero integer s: the coefficient at n moves to s n.
template <typename Real>
TrigPolyT<Real> dilate(const TrigPolyT<Real>& f, Freq s)
{
    using Poly = TrigPolyT<Real>;
    if (s == 0) throw DomainError("dilation factor must be nonzero");
    if (f.is_zero() || s == 1) return f;
    if (s < 0) return dilate(flip(f), -s);
    Poly::check_degree(s * f.min_freq(), s * f.max_freq(), f.limits());
    typename Poly::Vector v = Poly::Vector::Zero((f.span() - 1) * s + 1);
    for (Eigen::Index k = 0; k < f.coeffs().size(); ++k) v(k * s) = f.coeffs()(k);
    return Poly(s * f.min_freq(), std::move(v), f.limits());
}

/// Multiplication by e^{iMt}: the spectrum shifts by M.
template <typename Real>
TrigPolyT<Real> modulate(const TrigPolyT<Real>& f, Freq M)
{
    using Poly = TrigPolyT<Real>;
    if (f.is_zero()) return f;
    return Poly(f.min_freq() + M, f.coeffs(), f.limits());
}

}  // namespace hankel
