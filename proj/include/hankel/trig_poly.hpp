#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hankel/errors.hpp"

namespace hankel {

using Freq = std::int64_t;

/// Canonicalisation parameters carried by every polynomial value.
struct PolyLimits {
    double prune_tol = 1e-14;       // |c_n| <= prune_tol is stored as an exact zero
    Freq max_degree = Freq{1} << 16;  // bound on max(|min_freq|, |max_freq|)
};

///
/// Finite Laurent series  f(t) = sum_n c_n e^{int}  on the torus.
///
/// Coefficients are stored densely over [min_freq, max_freq]; everything
/// outside is zero. The value is always canonical: entries with magnitude
/// below the pruning tolerance are exact zeros and the stored range is
/// trimmed to the first and last nonzero coefficient. The zero polynomial
/// has an empty range.
///
template <typename Real>
class TrigPolyT {
public:
    using RealScalar = Real;
    using Scalar = std::complex<Real>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    TrigPolyT() = default;

    explicit TrigPolyT(PolyLimits limits) : m_limits(limits) {}

    TrigPolyT(Freq min_freq, Vector coeffs, PolyLimits limits = {})
        : m_min(min_freq), m_coeffs(std::move(coeffs)), m_limits(limits)
    {
        canonicalize();
    }

    static TrigPolyT constant(Scalar c, PolyLimits limits = {})
    {
        return monomial(0, c, limits);
    }

    static TrigPolyT monomial(Freq n, Scalar c = Scalar(1), PolyLimits limits = {})
    {
        Vector v(1);
        v(0) = c;
        return TrigPolyT(n, std::move(v), limits);
    }

    /// Analytic polynomial sum_{k>=0} coeffs[k] z^k.
    static TrigPolyT analytic(std::span<const Scalar> coeffs, PolyLimits limits = {})
    {
        Vector v(static_cast<Eigen::Index>(coeffs.size()));
        for (std::size_t k = 0; k < coeffs.size(); ++k) v(static_cast<Eigen::Index>(k)) = coeffs[k];
        return TrigPolyT(0, std::move(v), limits);
    }

    static TrigPolyT analytic(std::initializer_list<Scalar> coeffs, PolyLimits limits = {})
    {
        return analytic(std::span<const Scalar>(coeffs.begin(), coeffs.size()), limits);
    }

    /// Build from (frequency, amplitude) terms; repeated frequencies are summed.
    static TrigPolyT from_terms(std::span<const std::pair<Freq, Scalar>> terms, PolyLimits limits = {})
    {
        if (terms.empty()) return TrigPolyT(limits);
        Freq lo = terms.front().first, hi = terms.front().first;
        for (const auto& [n, c] : terms) {
            lo = std::min(lo, n);
            hi = std::max(hi, n);
        }
        check_degree(lo, hi, limits);
        Vector v = Vector::Zero(static_cast<Eigen::Index>(hi - lo + 1));
        for (const auto& [n, c] : terms) v(static_cast<Eigen::Index>(n - lo)) += c;
        return TrigPolyT(lo, std::move(v), limits);
    }

    bool is_zero() const { return m_coeffs.size() == 0; }
    Freq min_freq() const { return is_zero() ? 0 : m_min; }
    Freq max_freq() const { return is_zero() ? 0 : m_min + static_cast<Freq>(m_coeffs.size()) - 1; }
    /// max(|min_freq|, |max_freq|)
    Freq degree() const { return std::max(std::abs(min_freq()), std::abs(max_freq())); }
    /// Number of stored coefficients (max_freq - min_freq + 1, or 0).
    Freq span() const { return static_cast<Freq>(m_coeffs.size()); }
    bool is_analytic() const { return is_zero() || m_min >= 0; }

    const Vector& coeffs() const { return m_coeffs; }
    const PolyLimits& limits() const { return m_limits; }

    Scalar coeff(Freq n) const
    {
        if (is_zero() || n < m_min || n > max_freq()) return Scalar(0);
        return m_coeffs(static_cast<Eigen::Index>(n - m_min));
    }

    /// Direct evaluation at a point of the torus.
    Scalar operator()(Real t) const
    {
        if (is_zero()) return Scalar(0);
        const Scalar z = std::polar(Real(1), t);
        Scalar acc(0);
        for (Eigen::Index k = m_coeffs.size() - 1; k >= 0; --k) acc = acc * z + m_coeffs(k);
        return acc * std::polar(Real(1), static_cast<Real>(m_min) * t);
    }

    /// Visit every nonzero coefficient as (n, c_n).
    template <typename F>
    void for_each_term(F&& f) const
    {
        for (Eigen::Index k = 0; k < m_coeffs.size(); ++k)
            if (m_coeffs(k) != Scalar(0)) f(m_min + static_cast<Freq>(k), m_coeffs(k));
    }

    /// Same frequency range, coefficients transformed by fn(n, c_n).
    template <typename F>
    TrigPolyT map_coeffs(F&& fn) const
    {
        Vector v(m_coeffs.size());
        for (Eigen::Index k = 0; k < m_coeffs.size(); ++k)
            v(k) = fn(m_min + static_cast<Freq>(k), m_coeffs(k));
        return TrigPolyT(m_min, std::move(v), m_limits);
    }

    TrigPolyT& operator+=(const TrigPolyT& o) { return *this = add(*this, o, Scalar(1)); }
    TrigPolyT& operator-=(const TrigPolyT& o) { return *this = add(*this, o, Scalar(-1)); }
    TrigPolyT& operator*=(Scalar s)
    {
        m_coeffs *= s;
        canonicalize();
        return *this;
    }

    friend TrigPolyT operator+(TrigPolyT a, const TrigPolyT& b) { return a += b; }
    friend TrigPolyT operator-(TrigPolyT a, const TrigPolyT& b) { return a -= b; }
    friend TrigPolyT operator-(TrigPolyT a) { return a *= Scalar(-1); }
    friend TrigPolyT operator*(TrigPolyT a, Scalar s) { return a *= s; }
    friend TrigPolyT operator*(Scalar s, TrigPolyT a) { return a *= s; }

    static void check_degree(Freq lo, Freq hi, const PolyLimits& limits)
    {
        if (std::max(std::abs(lo), std::abs(hi)) > limits.max_degree)
            throw DegreeOverflow("trigonometric polynomial degree " +
                                 std::to_string(std::max(std::abs(lo), std::abs(hi))) +
                                 " exceeds the configured maximum " + std::to_string(limits.max_degree));
    }

private:
    static TrigPolyT add(const TrigPolyT& a, const TrigPolyT& b, Scalar sb)
    {
        if (b.is_zero()) return a;
        if (a.is_zero()) return TrigPolyT(b.m_min, b.m_coeffs * sb, a.m_limits);
        const Freq lo = std::min(a.m_min, b.m_min);
        const Freq hi = std::max(a.max_freq(), b.max_freq());
        Vector v = Vector::Zero(static_cast<Eigen::Index>(hi - lo + 1));
        v.segment(static_cast<Eigen::Index>(a.m_min - lo), a.m_coeffs.size()) += a.m_coeffs;
        v.segment(static_cast<Eigen::Index>(b.m_min - lo), b.m_coeffs.size()) += sb * b.m_coeffs;
        return TrigPolyT(lo, std::move(v), a.m_limits);
    }

    void canonicalize()
    {
        const Real tol = static_cast<Real>(m_limits.prune_tol);
        Eigen::Index first = -1, last = -1;
        for (Eigen::Index k = 0; k < m_coeffs.size(); ++k) {
            if (std::abs(m_coeffs(k)) <= tol) {
                m_coeffs(k) = Scalar(0);
            } else {
                if (first < 0) first = k;
                last = k;
            }
        }
        if (first < 0) {
            m_coeffs.resize(0);
            m_min = 0;
            return;
        }
        if (first > 0 || last < m_coeffs.size() - 1) {
            Vector trimmed = m_coeffs.segment(first, last - first + 1);
            m_coeffs = std::move(trimmed);
        }
        m_min += static_cast<Freq>(first);
        check_degree(m_min, max_freq(), m_limits);
    }

    Freq m_min = 0;
    Vector m_coeffs;
    PolyLimits m_limits;
};

using TrigPoly = TrigPolyT<double>;
using cplx = std::complex<double>;

/// Largest coefficientwise difference  max_n |a_n - b_n|.
template <typename Real>
Real max_coeff_diff(const TrigPolyT<Real>& a, const TrigPolyT<Real>& b)
{
    if (a.is_zero() && b.is_zero()) return Real(0);
    const Freq lo = a.is_zero() ? b.min_freq() : (b.is_zero() ? a.min_freq() : std::min(a.min_freq(), b.min_freq()));
    const Freq hi = a.is_zero() ? b.max_freq() : (b.is_zero() ? a.max_freq() : std::max(a.max_freq(), b.max_freq()));
    Real worst(0);
    for (Freq n = lo; n <= hi; ++n) worst = std::max(worst, std::abs(a.coeff(n) - b.coeff(n)));
    return worst;
}

/// Largest coefficient magnitude.
template <typename Real>
Real max_abs_coeff(const TrigPolyT<Real>& a)
{
    return a.is_zero() ? Real(0) : a.coeffs().cwiseAbs().maxCoeff();
}

}  // namespace hankel
