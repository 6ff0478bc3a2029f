#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>

#include <Eigen/Core>

#include "hankel/random.hpp"
#include "hankel/trig_poly.hpp"

namespace hankel {

enum class NormMethod { power_iteration, ratio_search, quadrature };

struct NormEstimate {
    double value = 0;
    NormMethod method = NormMethod::power_iteration;
    int iterations = 0;
    double residual = 0;     // ||A^H A v - lambda v|| / lambda for power iteration
    bool converged = true;
    bool degenerate = false;  // ratio search saw only zero outputs
    Eigen::VectorXcd witness_vector;
    std::optional<TrigPoly> witness_poly;
};

struct PowerIterationOptions {
    double tol = 1e-12;  // relative change of the Rayleigh quotient
    int max_iter = 20000;
    std::uint64_t seed = 0;
    const Eigen::VectorXcd* warm_start = nullptr;  // used when its size matches
};

///
/// Largest singular value by power iteration on A^H A.
///
/// The returned value is ||A v|| for the stored unit witness v, so
/// re-evaluating the witness reproduces it exactly.
///
template <typename Derived>
NormEstimate section_norm_2_2(const Eigen::MatrixBase<Derived>& A, const PowerIterationOptions& opts = {})
{
    using Vector = Eigen::VectorXcd;
    NormEstimate out;
    out.method = NormMethod::power_iteration;
    const Eigen::Index n = A.cols();
    if (n == 0 || A.rows() == 0 || A.cwiseAbs().maxCoeff() == 0.0) {
        out.witness_vector = Vector::Zero(n);
        return out;
    }

    Vector v(n);
    if (opts.warm_start && opts.warm_start->size() == n && opts.warm_start->norm() > 0) {
        v = *opts.warm_start;
    } else {
        RandomStream rng(opts.seed);
        for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.complex_normal();
    }
    v.normalize();

    double lambda = 0, prev = -1;
    out.converged = false;
    Vector w, u;
    for (int it = 1; it <= opts.max_iter; ++it) {
        w.noalias() = A * v;
        lambda = w.squaredNorm();
        u.noalias() = A.adjoint() * w;
        out.iterations = it;
        if (lambda > 0) out.residual = (u - lambda * v).norm() / lambda;
        if (prev >= 0 && std::abs(lambda - prev) <= opts.tol * lambda) {
            out.converged = true;
            break;
        }
        prev = lambda;
        const double un = u.norm();
        if (un == 0) break;
        v = u / un;
    }
    out.value = (A * v).norm();
    out.witness_vector = std::move(v);
    return out;
}

/// Operator on analytic polynomials, queried as a black box.
using AnalyticOperator = std::function<TrigPoly(const TrigPoly&)>;

struct RatioSearchOptions {
    double q = 2;
    double p = 2;
    Freq degree = 8;     // inputs live in span{1, z, ..., z^degree}
    int samples = 64;    // random starting points across the spectral profiles
    int refine_passes = 60;
    std::uint64_t seed = 0;
};

///
/// Lower estimate of sup ||op f||_{H^p} / ||f||_{H^q} over analytic polynomials
/// of bounded degree: random starts drawn from flat, lacunary, single-frequency
/// and product profiles, then coordinate ascent on the best start.
///
NormEstimate ratio_search_qp(const AnalyticOperator& op, const RatioSearchOptions& opts);

/// ||op f||_{H^p} / ||f||_{H^q} with the default norm accuracy.
double hardy_ratio(const AnalyticOperator& op, const TrigPoly& f, double q, double p);

/// (1/2pi) int |D_N| by Gauss-Legendre quadrature between consecutive zeros of D_N.
double lebesgue_constant(Freq N);

///
/// Test function for ||S_N^+|| on Lambda_alpha with N = 4 * 2^n, n >= 1, M = N/4:
///   f(t) = e^{4iMt} sum_{k=1}^{M} sin(kt)/k.
/// ||f||_inf is bounded independently of M, the spectrum lies in [3M, 5M],
/// and S_N^+ f = e^{4iMt} sum_{k=1}^{M} e^{-ikt}/(-2ik) has sup norm H_M / 2.
///
TrigPoly sn_extremal_function(Freq N);

/// lipschitz_norm(S_N^+ f, alpha) / lipschitz_norm(f, alpha) for f = sn_extremal_function(N).
double sn_extremal_lower_bound(Freq N, double alpha);

}  // namespace hankel
