#include "hankel/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hankel/fourier.hpp"
#include "hankel/grid.hpp"
#include "hankel/littlewood_paley.hpp"
#include "hankel/random.hpp"

namespace hankel {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Maximise |f|^2 on [a, b] by golden-section search.
double golden_max_abs(const TrigPoly& f, double a, double b)
{
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - r * (b - a), x2 = a + r * (b - a);
    double f1 = std::norm(f(x1)), f2 = std::norm(f(x2));
    for (int it = 0; it < 60 && b - a > 1e-15; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + r * (b - a);
            f2 = std::norm(f(x2));
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - r * (b - a);
            f1 = std::norm(f(x1));
        }
    }
    return std::sqrt(std::max(f1, f2));
}

}  // namespace

double sup_norm(const TrigPoly& f)
{
    if (f.is_zero()) return 0.0;
    if (f.span() == 1) return std::abs(f.coeffs()(0));
    // |f| is invariant under modulation, so work with the spectrum moved to [0, span).
    const TrigPoly g = modulate(f, -f.min_freq());
    const Grid grid(std::max<std::size_t>(next_power_of_two(32 * static_cast<std::size_t>(g.span())), 64));
    const Eigen::VectorXcd v = eval_grid(g, grid);
    const Eigen::VectorXd mag = v.cwiseAbs();
    const auto G = static_cast<Eigen::Index>(grid.size);

    std::vector<std::pair<double, Eigen::Index>> peaks;
    for (Eigen::Index j = 0; j < G; ++j) {
        const double l = mag((j + G - 1) % G), r = mag((j + 1) % G);
        if (mag(j) >= l && mag(j) >= r) peaks.emplace_back(mag(j), j);
    }
    std::sort(peaks.begin(), peaks.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    if (peaks.size() > 32) peaks.resize(32);

    const double h = kTwoPi / static_cast<double>(G);
    double best = mag.maxCoeff();
    for (const auto& [val, j] : peaks) {
        const double t = grid.point(static_cast<std::size_t>(j));
        best = std::max(best, golden_max_abs(g, t - h, t + h));
    }
    return best;
}

HardyNorm lp_norm(const TrigPoly& f, double p, const NormOptions& opts)
{
    if (!(p > 0)) throw DomainError("L^p exponent must be positive");
    HardyNorm out;
    out.p = p;
    if (std::isinf(p)) {
        out.value = sup_norm(f);
        out.grid_size = f.is_zero() ? 0 : next_power_of_two(32 * static_cast<std::size_t>(f.span()));
        return out;
    }
    if (f.is_zero()) return out;

    const TrigPoly g = modulate(f, -f.min_freq());
    std::size_t G = std::max<std::size_t>(next_power_of_two(8 * static_cast<std::size_t>(g.span())), 16);
    auto mean_power = [&](std::size_t size) {
        const Eigen::VectorXcd v = eval_grid(g, Grid(size));
        double acc = 0;
        for (Eigen::Index j = 0; j < v.size(); ++j) acc += std::pow(std::abs(v(j)), p);
        return std::pow(acc / static_cast<double>(size), 1.0 / p);
    };

    double prev = mean_power(G);
    out.converged = false;
    while (2 * G <= opts.max_grid) {
        G *= 2;
        const double cur = mean_power(G);
        const double change = std::abs(cur - prev) / std::max(std::abs(cur), std::numeric_limits<double>::min());
        prev = cur;
        if (change < opts.rel_tol) {
            out.converged = true;
            break;
        }
    }
    out.value = prev;
    out.grid_size = G;
    return out;
}

HardyNorm hardy_norm(const TrigPoly& f, double p, const NormOptions& opts)
{
    if (!f.is_analytic()) throw DomainError("Hardy norms are defined for analytic polynomials only");
    return lp_norm(f, p, opts);
}

LipschitzNorm dyadic_block_norm(const TrigPoly& b, double alpha)
{
    if (!(alpha >= 0)) throw DomainError("block norm exponent must be nonnegative");
    LipschitzNorm out;
    out.alpha = alpha;
    out.method = LipschitzMethod::lp_block;
    const auto blocks = lp_decompose(b);
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        const double w = std::exp2(static_cast<double>(j) * alpha) * sup_norm(blocks[j]);
        out.certificates.push_back({static_cast<int>(j), w});
        out.value = std::max(out.value, w);
    }
    return out;
}

LipschitzNorm lipschitz_norm(const TrigPoly& b, double alpha)
{
    if (!(alpha > 0)) throw DomainError("Lipschitz exponent must be positive");
    return dyadic_block_norm(b, alpha);
}

LipschitzNorm lipschitz_norm_diff(const TrigPoly& b, double alpha)
{
    if (!(alpha > 0 && alpha < 1))
        throw DomainError("difference-quotient Lipschitz norm supports 0 < alpha < 1 only; use the block norm");
    LipschitzNorm out;
    out.alpha = alpha;
    out.method = LipschitzMethod::difference_quotient;
    if (b.is_zero()) return out;

    const Grid grid(std::max<std::size_t>(next_power_of_two(16 * static_cast<std::size_t>(b.degree() + 1)), 256));
    const Eigen::VectorXcd v = eval_grid(b, grid);
    const auto G = static_cast<Eigen::Index>(grid.size);

    std::vector<Eigen::Index> gaps;
    for (Eigen::Index m = 1; m <= std::min<Eigen::Index>(8, G / 2); ++m) gaps.push_back(m);
    for (double m = 10; m <= static_cast<double>(G / 2); m *= 1.25) gaps.push_back(static_cast<Eigen::Index>(m));
    gaps.push_back(G / 2);
    std::sort(gaps.begin(), gaps.end());
    gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());

    double quotient = 0;
    for (const Eigen::Index m : gaps) {
        const double h = kTwoPi * static_cast<double>(m) / static_cast<double>(G);
        double worst = 0;
        for (Eigen::Index j = 0; j < G; ++j) worst = std::max(worst, std::abs(v((j + m) % G) - v(j)));
        quotient = std::max(quotient, worst / std::pow(h, alpha));
    }
    out.value = sup_norm(b) + quotient;
    return out;
}

TrigPoly random_symbol(double alpha, int max_block, std::uint64_t seed)
{
    if (!(alpha >= 0)) throw DomainError("symbol exponent must be nonnegative");
    if (max_block < 0) throw DomainError("max_block must be nonnegative");
    RandomStream rng(seed);
    TrigPoly b = TrigPoly::constant(rng.unit_phase());
    for (int j = 1; j <= max_block; ++j) {
        const Freq peak = Freq{1} << j;
        const Freq lo = std::max<Freq>(1, peak - peak / 4);
        const Freq hi = peak + peak / 2;
        Eigen::VectorXcd c(hi - lo + 1);
        for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = rng.complex_normal();
        TrigPoly piece(lo, std::move(c));
        piece *= cplx(std::exp2(-alpha * j) / sup_norm(piece));
        b += piece;
    }
    return b * cplx(1.0 / dyadic_block_norm(b, alpha).value);
}

std::optional<Freq> reduction_index(double beta, double gamma)
{
    auto integer_part = [](double x) { return static_cast<Freq>(std::floor(x)); };
    if (gamma == 0) return Freq{0};
    if (beta == 0) return gamma > 0 ? integer_part(gamma) : Freq{0};
    if (gamma < 0 && beta > 0) return integer_part(-gamma / beta);
    if (gamma > 0 && beta > 0) return integer_part(gamma);
    if (gamma > 0 && beta < 0) return std::min(integer_part(gamma), integer_part(-gamma / beta));
    return std::nullopt;
}

namespace {

int top_dropped_block(Freq N)
{
    int n0 = 0;
    while ((Freq{1} << (n0 + 1)) <= N) ++n0;
    return n0 - 3;  // blocks j < N0 - 2 are dropped
}

}  // namespace

Freq reduce_symbol_exact_from(Freq N)
{
    if (N <= 16) return 0;
    return Freq{1} << (top_dropped_block(N) + 1);
}

TrigPoly reduce_symbol(const TrigPoly& b, Freq N)
{
    if (!b.is_analytic()) throw DomainError("reduce_symbol requires an analytic symbol");
    if (N <= 16) return b;
    const int last = top_dropped_block(N);
    return b.map_coeffs([last](Freq n, cplx c) {
        double dropped = 0;
        for (int j = 0; j <= last; ++j) dropped += lp_window(j, n);
        return c * (1.0 - dropped);
    });
}

double modulated_norm_ratio(const TrigPoly& b, double alpha, Freq N, Freq M)
{
    if (b.is_zero()) throw DomainError("modulated norm ratio is undefined for the zero symbol");
    const double base = lipschitz_norm(b, alpha).value;
    const TrigPoly shifted = modulate(reduce_symbol(b, N), M);
    const double scale = std::pow(static_cast<double>(std::abs(M)) / static_cast<double>(N + 1) + 1.0, alpha);
    return lipschitz_norm(shifted, alpha).value / (scale * base);
}

}  // namespace hankel
