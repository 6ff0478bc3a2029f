#include "hankel/opnorm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hankel/fourier.hpp"
#include "hankel/spaces.hpp"

namespace hankel {

namespace {

const NormOptions kSearchAccuracy{1e-6, std::size_t{1} << 14};

double quick_ratio(const AnalyticOperator& op, const TrigPoly& f, double q, double p)
{
    const double den = lp_norm(f, q, kSearchAccuracy).value;
    if (den == 0) return 0;
    return lp_norm(op(f), p, kSearchAccuracy).value / den;
}

TrigPoly draw_profile(int sample, Freq degree, RandomStream& rng)
{
    std::vector<std::pair<Freq, cplx>> terms;
    switch (sample % 4) {
    case 0:  // flat
        for (Freq n = 0; n <= degree; ++n) terms.emplace_back(n, rng.complex_normal());
        break;
    case 1:  // lacunary
        terms.emplace_back(0, rng.complex_normal());
        for (Freq n = 1; n <= degree; n *= 2) terms.emplace_back(n, rng.complex_normal());
        break;
    case 2:  // single frequency, cycling through 0..degree
        terms.emplace_back((sample / 4) % (degree + 1), cplx(1));
        break;
    default: {  // product of random binomials 1 + c z^k
        TrigPoly prod = TrigPoly::constant(1);
        Freq used = 0;
        while (used < degree) {
            const Freq k = rng.integer(1, degree - used);
            prod = multiply(prod, TrigPoly::constant(1) + TrigPoly::monomial(k, rng.complex_normal()));
            used += k;
        }
        return prod;
    }
    }
    return TrigPoly::from_terms(terms);
}

void legendre_nodes_weights(int n, std::vector<double>& x, std::vector<double>& w)
{
    x.assign(static_cast<std::size_t>(n), 0);
    w.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = z;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (z * p1 - p0) / (z * z - 1);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        x[static_cast<std::size_t>(i)] = z;
        w[static_cast<std::size_t>(i)] = 2.0 / ((1 - z * z) * dp * dp);
    }
}

}  // namespace

double hardy_ratio(const AnalyticOperator& op, const TrigPoly& f, double q, double p)
{
    const double den = hardy_norm(f, q).value;
    if (den == 0) return 0;
    return lp_norm(op(f), p).value / den;
}

NormEstimate ratio_search_qp(const AnalyticOperator& op, const RatioSearchOptions& opts)
{
    if (!(opts.q > 0 && opts.p > 0)) throw DomainError("ratio search exponents must be positive");
    if (opts.degree < 0 || opts.samples < 1) throw DomainError("ratio search needs a nonnegative degree and samples");
    NormEstimate out;
    out.method = NormMethod::ratio_search;

    RandomStream rng(opts.seed);
    TrigPoly best;
    double best_ratio = -1;
    for (int s = 0; s < opts.samples; ++s) {
        const TrigPoly f = draw_profile(s, opts.degree, rng);
        const double r = quick_ratio(op, f, opts.q, opts.p);
        if (r > best_ratio) {
            best_ratio = r;
            best = f;
        }
    }
    if (best_ratio <= 0) {
        out.degenerate = true;
        out.witness_poly = best;
        return out;
    }

    // Coordinate ascent on the coefficients of the best start.
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(opts.degree + 1);
    for (Freq n = 0; n <= opts.degree; ++n) a(n) = best.coeff(n);
    double step = 0.5 * a.cwiseAbs().maxCoeff();
    const double floor_step = 1e-4 * step;
    const cplx dirs[] = {cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)};
    int pass = 0;
    for (; pass < opts.refine_passes && step > floor_step; ++pass) {
        bool improved = false;
        for (Eigen::Index n = 0; n < a.size(); ++n) {
            for (const cplx d : dirs) {
                Eigen::VectorXcd trial = a;
                trial(n) += step * d;
                const TrigPoly f(0, trial);
                const double r = quick_ratio(op, f, opts.q, opts.p);
                if (r > best_ratio * (1 + 1e-12)) {
                    best_ratio = r;
                    a = trial;
                    improved = true;
                }
            }
        }
        if (!improved) step /= 2;
    }
    const TrigPoly witness(0, a);
    out.iterations = pass;
    out.value = hardy_ratio(op, witness, opts.q, opts.p);
    out.witness_poly = witness;
    return out;
}

double lebesgue_constant(Freq N)
{
    if (N < 0) throw DomainError("Lebesgue constant order must be nonnegative");
    if (N == 0) return 1.0;
    static thread_local std::vector<double> x, w;
    if (x.empty()) legendre_nodes_weights(24, x, w);

    const double half = static_cast<double>(N) + 0.5;
    auto dirichlet = [half](double t) { return std::abs(std::sin(half * t) / std::sin(t / 2)); };
    // |D_N| on [0, pi] changes sign at t_k = 2 pi k / (2N + 1); each piece is smooth.
    double total = 0;
    double a = 0;
    for (Freq k = 1; k <= N + 1; ++k) {
        const double b = k <= N ? 2.0 * std::numbers::pi * static_cast<double>(k) / (2.0 * half) : std::numbers::pi;
        const double mid = (a + b) / 2, rad = (b - a) / 2;
        double piece = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double t = mid + rad * x[i];
            piece += w[i] * dirichlet(t);
        }
        total += piece * rad;
        a = b;
    }
    return total / std::numbers::pi;
}

TrigPoly sn_extremal_function(Freq N)
{
    if (N < 8 || (N & (N - 1)) != 0) throw DomainError("the extremal construction needs N = 4 * 2^n with n >= 1");
    const Freq M = N / 4;
    std::vector<std::pair<Freq, cplx>> terms;
    for (Freq k = 1; k <= M; ++k) {
        const cplx c = cplx(0, -0.5 / static_cast<double>(k));  // sin(kt)/k = (e^{ikt} - e^{-ikt}) / (2ik)
        terms.emplace_back(4 * M + k, c);
        terms.emplace_back(4 * M - k, -c);
    }
    return TrigPoly::from_terms(terms);
}

double sn_extremal_lower_bound(Freq N, double alpha)
{
    const TrigPoly f = sn_extremal_function(N);
    return lipschitz_norm(analytic_partial_sum(f, N), alpha).value / lipschitz_norm(f, alpha).value;
}

}  // namespace hankel
