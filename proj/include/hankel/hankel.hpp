#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "hankel/errors.hpp"
#include "hankel/fourier.hpp"
#include "hankel/trig_poly.hpp"

namespace hankel {

/// Analytic symbol b(z) = sum_{k=0}^K b_k z^k of a Hankel matrix (b_{m+n}).
template <typename Real>
class HankelSymbolT {
public:
    using Poly = TrigPolyT<Real>;
    using Scalar = typename Poly::Scalar;

    HankelSymbolT() = default;

    explicit HankelSymbolT(Poly p) : m_poly(std::move(p))
    {
        if (!m_poly.is_analytic()) throw DomainError("a Hankel symbol must be analytic");
    }

    static HankelSymbolT from_coefficients(std::initializer_list<Scalar> c) { return HankelSymbolT(Poly::analytic(c)); }
    static HankelSymbolT from_coefficients(std::span<const Scalar> c) { return HankelSymbolT(Poly::analytic(c)); }

    Scalar operator[](Freq k) const { return m_poly.coeff(k); }
    /// Largest index with a nonzero coefficient (0 for the zero symbol).
    Freq degree() const { return m_poly.max_freq(); }
    bool is_zero() const { return m_poly.is_zero(); }
    const Poly& poly() const { return m_poly; }

private:
    Poly m_poly;
};

using HankelSymbol = HankelSymbolT<double>;

/// How entries lying exactly on the truncation hyperplane are weighted.
enum class Boundary {
    include,  // weight 1: the entry is kept (i0 >= beta.i + gamma)
    half      // weight 1/2: matches sign(0) = 0 in 2*Pi - I
};

///
/// Truncation Pi_{beta,gamma}: the entry indexed (i0, i1, ..., in) is kept when
/// beta_1 i_1 + ... + beta_n i_n + gamma <= i0. The linear case is n = 1 with
/// (i0, i1) = (m, n).
///
template <typename Real>
struct TruncationSpecT {
    std::vector<Real> beta{Real(1)};
    Real gamma = 0;
    Boundary boundary = Boundary::include;

    static TruncationSpecT linear(Real beta, Real gamma, Boundary boundary = Boundary::include)
    {
        return {{beta}, gamma, boundary};
    }

    std::size_t arity() const { return beta.size(); }

    /// Mask weight in {0, 1/2, 1} for row index i0 against the slope term beta.i.
    ///
    /// Equality is detected with a relative tolerance of 1e-9 so that rational
    /// slopes k/l and offsets g/l, which are inexact in floating point, still
    /// land on the hyperplane.
    Real weight(Freq i0, Real beta_dot_i) const
    {
        const Real rhs = beta_dot_i + gamma;
        const Real diff = static_cast<Real>(i0) - rhs;
        const Real tol = Real(1e-9) * std::max(Real(1), std::abs(beta_dot_i) + std::abs(gamma));
        if (std::abs(diff) <= tol) return boundary == Boundary::include ? Real(1) : Real(0.5);
        return diff > 0 ? Real(1) : Real(0);
    }

    void validate() const
    {
        if (beta.empty()) throw DomainError("truncation needs at least one slope");
    }
};

using TruncationSpec = TruncationSpecT<double>;

namespace detail {

template <typename Real>
void require_analytic(const TrigPolyT<Real>& f, const char* what)
{
    if (!f.is_analytic()) throw DomainError(std::string(what) + " must be an analytic polynomial");
}

}  // namespace detail

/// H_b f:  c_m = sum_n a_n b_{m+n}, computed by direct summation.
template <typename Real>
TrigPolyT<Real> hankel_apply(const HankelSymbolT<Real>& b, const TrigPolyT<Real>& f)
{
    using Poly = TrigPolyT<Real>;
    detail::require_analytic(f, "Hankel operator input");
    if (b.is_zero() || f.is_zero()) return Poly(f.limits());
    const Freq K = b.degree();
    typename Poly::Vector c = Poly::Vector::Zero(K + 1);
    for (Freq m = 0; m <= K; ++m) {
        typename Poly::Scalar acc(0);
        for (Freq n = 0; n <= std::min(f.max_freq(), K - m); ++n) acc += f.coeff(n) * b[m + n];
        c(m) = acc;
    }
    return Poly(0, std::move(c), f.limits());
}

/// H_b f as the Cauchy projection of b * f̌.
template <typename Real>
TrigPolyT<Real> hankel_apply_projection(const HankelSymbolT<Real>& b, const TrigPolyT<Real>& f)
{
    detail::require_analytic(f, "Hankel operator input");
    return analytic_part(multiply(b.poly(), flip(f)));
}

/// H_b^{(n)}(f_1, ..., f_n) = H_b(f_1 ... f_n).
template <typename Real>
TrigPolyT<Real> multilinear_apply(const HankelSymbolT<Real>& b, std::span<const TrigPolyT<Real>> fs)
{
    if (fs.empty()) throw DomainError("multilinear Hankel operator needs at least one argument");
    TrigPolyT<Real> prod = fs.front();
    detail::require_analytic(prod, "multilinear Hankel operator input");
    for (std::size_t i = 1; i < fs.size(); ++i) {
        detail::require_analytic(fs[i], "multilinear Hankel operator input");
        prod = multiply(prod, fs[i]);
    }
    return hankel_apply(b, prod);
}

/// Pi_{beta,gamma}(H_b) f by O(M N) masked summation.
template <typename Real>
TrigPolyT<Real> truncated_apply(const HankelSymbolT<Real>& b, const TruncationSpecT<Real>& spec,
                                const TrigPolyT<Real>& f)
{
    using Poly = TrigPolyT<Real>;
    spec.validate();
    if (spec.arity() != 1) throw DomainError("linear truncation needs exactly one slope");
    detail::require_analytic(f, "Hankel operator input");
    if (b.is_zero() || f.is_zero()) return Poly(f.limits());
    const Freq K = b.degree();
    const Real beta = spec.beta[0];
    typename Poly::Vector c = Poly::Vector::Zero(K + 1);
    for (Freq m = 0; m <= K; ++m) {
        typename Poly::Scalar acc(0);
        for (Freq n = 0; n <= std::min(f.max_freq(), K - m); ++n) {
            const Real w = spec.weight(m, beta * static_cast<Real>(n));
            if (w != Real(0)) acc += w * f.coeff(n) * b[m + n];
        }
        c(m) = acc;
    }
    return Poly(0, std::move(c), f.limits());
}

///
/// Pi_{beta,gamma}(H_b^{(n)})(f_1, ..., f_n) by direct summation over all
/// index tuples. Refuses when the number of visited entries exceeds 1e8.
///
template <typename Real>
TrigPolyT<Real> multilinear_truncated_apply(const HankelSymbolT<Real>& b, const TruncationSpecT<Real>& spec,
                                            std::span<const TrigPolyT<Real>> fs)
{
    using Poly = TrigPolyT<Real>;
    using Scalar = typename Poly::Scalar;
    spec.validate();
    if (fs.empty()) throw DomainError("multilinear Hankel operator needs at least one argument");
    if (spec.arity() != fs.size()) throw DomainError("slope vector length must match the number of arguments");
    for (const auto& f : fs) detail::require_analytic(f, "multilinear Hankel operator input");

    const PolyLimits limits = fs.front().limits();
    for (const auto& f : fs)
        if (f.is_zero()) return Poly(limits);
    if (b.is_zero()) return Poly(limits);

    const Freq K = b.degree();
    double cost = static_cast<double>(K + 1);
    for (const auto& f : fs) cost *= static_cast<double>(f.max_freq() + 1);
    if (cost > 1e8) throw CostGuard("multilinear truncated sum would visit more than 1e8 entries");

    typename Poly::Vector c = Poly::Vector::Zero(K + 1);
    const std::size_t n = fs.size();
    std::vector<Freq> idx(n, 0);

    // Odometer over (i_1, ..., i_n) with the running index sum bounded by K.
    auto visit = [&](auto&& self, std::size_t level, Freq sum, Real slope, Scalar prod) -> void {
        if (level == n) {
            for (Freq m = 0; m + sum <= K; ++m) {
                const Real w = spec.weight(m, slope);
                if (w != Real(0)) c(m) += w * prod * b[m + sum];
            }
            return;
        }
        const auto& f = fs[level];
        for (Freq i = 0; i <= f.max_freq() && sum + i <= K; ++i) {
            const Scalar a = f.coeff(i);
            if (a == Scalar(0)) continue;
            self(self, level + 1, sum + i, slope + spec.beta[level] * static_cast<Real>(i), prod * a);
        }
    };
    visit(visit, 0, 0, Real(0), Scalar(1));
    return Poly(0, std::move(c), limits);
}

/// Truncation along columns (beta = infinity): only entries with n >= N are kept.
template <typename Real>
TrigPolyT<Real> column_truncation_apply(const HankelSymbolT<Real>& b, Freq N, const TrigPolyT<Real>& f)
{
    using Poly = TrigPolyT<Real>;
    detail::require_analytic(f, "Hankel operator input");
    if (b.is_zero() || f.is_zero()) return Poly(f.limits());
    const Freq K = b.degree();
    typename Poly::Vector c = Poly::Vector::Zero(K + 1);
    for (Freq m = 0; m <= K; ++m)
        for (Freq n = std::max<Freq>(N, 0); n <= std::min(f.max_freq(), K - m); ++n) c(m) += f.coeff(n) * b[m + n];
    return Poly(0, std::move(c), f.limits());
}

/// max |Pi_{0,N+1}(H_b f) - (I - S_N) H_b f| over coefficients.
template <typename Real>
Real beta_zero_identity_check(const HankelSymbolT<Real>& b, Freq N, const TrigPolyT<Real>& f)
{
    if (N < 0) throw DomainError("identity order must be nonnegative");
    const auto lhs = truncated_apply(b, TruncationSpecT<Real>::linear(Real(0), static_cast<Real>(N + 1)), f);
    const auto full = hankel_apply(b, f);
    return max_coeff_diff(lhs, full - partial_sum(full, N));
}

/// max |(H_b - Pi_{-1,N} H_b) f - H_{S_{N-1} b} f| over coefficients.
template <typename Real>
Real beta_minus_one_identity_check(const HankelSymbolT<Real>& b, Freq N, const TrigPolyT<Real>& f)
{
    if (N < 1) throw DomainError("the beta = -1 identity needs N >= 1");
    const auto kept = truncated_apply(b, TruncationSpecT<Real>::linear(Real(-1), static_cast<Real>(N)), f);
    const auto lhs = hankel_apply(b, f) - kept;
    const HankelSymbolT<Real> head(partial_sum(b.poly(), N - 1));
    return max_coeff_diff(lhs, hankel_apply(head, f));
}

template <typename Real>
using MatrixSectionT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
using MatrixSection = MatrixSectionT<double>;

inline constexpr Eigen::Index kMaxSection = 4096;

/// Dense M x N section with entries mask(m, n) b_{m+n}.
template <typename Real>
MatrixSectionT<Real> matrix_section(const HankelSymbolT<Real>& b, const std::optional<TruncationSpecT<Real>>& spec,
                                    Eigen::Index M, Eigen::Index N)
{
    if (M < 0 || N < 0 || M > kMaxSection || N > kMaxSection)
        throw CostGuard("matrix sections are limited to 4096 x 4096");
    if (spec) {
        spec->validate();
        if (spec->arity() != 1) throw DomainError("matrix sections need a linear truncation");
    }
    MatrixSectionT<Real> A(M, N);
    for (Eigen::Index n = 0; n < N; ++n) {
        const Real slope = spec ? spec->beta[0] * static_cast<Real>(n) : Real(0);
        for (Eigen::Index m = 0; m < M; ++m) {
            const Real w = spec ? spec->weight(m, slope) : Real(1);
            A(m, n) = w == Real(0) ? std::complex<Real>(0) : w * b[m + n];
        }
    }
    return A;
}

}  // namespace hankel
