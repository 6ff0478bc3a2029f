#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hankel/trig_poly.hpp"

namespace hankel {

struct NormOptions {
    double rel_tol = 1e-8;                // stop doubling once the relative change drops below this
    std::size_t max_grid = std::size_t{1} << 20;
};

/// Boundary L^p quasi-norm of a polynomial, with the grid it was computed on.
struct HardyNorm {
    double p = 2;
    double value = 0;
    std::size_t grid_size = 0;
    bool converged = true;
};

enum class LipschitzMethod { lp_block, difference_quotient };

struct BlockCertificate {
    int block;
    double weighted_sup;  // 2^{j alpha} ||b_j||_inf
};

struct LipschitzNorm {
    double alpha = 0;
    double value = 0;
    LipschitzMethod method = LipschitzMethod::lp_block;
    std::vector<BlockCertificate> certificates;
};

/// sup_t |f(t)|: oversampled grid maximum followed by local golden-section refinement.
double sup_norm(const TrigPoly& f);

/// ((1/2pi) int |f|^p)^{1/p} for any polynomial, p > 0 (p = infinity gives sup_norm).
HardyNorm lp_norm(const TrigPoly& f, double p, const NormOptions& opts = {});

/// H^p(D) quasi-norm of an analytic polynomial, computed on the boundary.
HardyNorm hardy_norm(const TrigPoly& f, double p, const NormOptions& opts = {});

/// sup_j 2^{j alpha} ||b_j||_inf over the Littlewood-Paley blocks; alpha >= 0.
LipschitzNorm dyadic_block_norm(const TrigPoly& b, double alpha);

/// Canonical Lambda_alpha norm (alpha > 0) of an analytic polynomial.
LipschitzNorm lipschitz_norm(const TrigPoly& b, double alpha);

///
/// Classical Hoelder norm ||b||_inf + sup |b(x)-b(y)| / |x-y|^alpha, 0 < alpha < 1,
/// estimated over grid pairs with geometrically spaced gaps. Only meant as a
/// cross-check of lipschitz_norm.
///
LipschitzNorm lipschitz_norm_diff(const TrigPoly& b, double alpha);

///
/// Random analytic symbol whose block j (1 <= j <= max_block) is a random
/// polynomial centred on 2^j with sup norm 2^{-j alpha}, and whose block 0 is
/// a unimodular constant. The result is rescaled so that
/// dyadic_block_norm(b, alpha) == 1. alpha = 0 gives blocks of equal size.
///
TrigPoly random_symbol(double alpha, int max_block, std::uint64_t seed);

///
/// The index n^{beta,gamma} such that the truncation of H_b only sees P_n(b):
///   gamma < 0, beta > 0 : [-gamma/beta]
///   gamma > 0, beta > 0 : [gamma]
///   gamma > 0, beta < 0 : min([gamma], [-gamma/beta])
///   gamma > 0, beta = 0 : [gamma]
///   gamma < 0, beta = 0 : 0
///   gamma = 0           : 0
///   gamma < 0, beta < 0 : nullopt (the truncation leaves H_b unchanged)
/// [x] is the integer part of the nonnegative quantity x.
///
std::optional<Freq> reduction_index(double beta, double gamma);

///
/// b~ = sum_{j >= N0-2} b_j with 2^{N0} <= N < 2^{N0+1}, or b itself when N <= 16.
/// With the windows of lp_window, b~ and b agree on every frequency
/// n >= reduce_symbol_exact_from(N) (which is <= N).
///
TrigPoly reduce_symbol(const TrigPoly& b, Freq N);
Freq reduce_symbol_exact_from(Freq N);

/// ||reduce_symbol(b,N) z^M|| / ((|M|/(N+1) + 1)^alpha ||b||) in Lambda_alpha.
double modulated_norm_ratio(const TrigPoly& b, double alpha, Freq N, Freq M);

}  // namespace hankel
