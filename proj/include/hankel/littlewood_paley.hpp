#pragma once

#include <vector>

#include "hankel/errors.hpp"
#include "hankel/trig_poly.hpp"

namespace hankel {

///
/// Dyadic window w_j(n) of the Littlewood-Paley partition on n >= 0.
///
///   w_0 = indicator of n = 0
///   w_1 = 1 on [1, 2], linear down to 0 at n = 4
///   w_j = linear up from 0 at 2^{j-1} to 1 at 2^j, linear down to 0 at 2^{j+1}   (j >= 2)
///
/// Consecutive ramps are complementary, so sum_j w_j(n) = 1 for every n >= 0,
/// and supp w_j lies inside [2^{j-1}, 2^{j+2}). All values are dyadic rationals.
///
inline double lp_window(int j, Freq n)
{
    if (n < 0) return 0.0;
    if (j == 0) return n == 0 ? 1.0 : 0.0;
    const double x = static_cast<double>(n);
    const double peak = std::ldexp(1.0, j);
    if (j == 1) {
        if (n >= 1 && n <= 2) return 1.0;
        if (n > 2 && n < 4) return (4.0 - x) / 2.0;
        return 0.0;
    }
    const double lo = peak / 2, hi = peak * 2;
    if (x <= lo || x >= hi) return 0.0;
    return x <= peak ? (x - lo) / lo : (hi - x) / peak;
}

/// Highest block index that can be nonzero for a polynomial with top frequency n.
inline int lp_max_block(Freq max_freq)
{
    if (max_freq <= 0) return 0;
    int j = 1;
    while ((Freq{1} << (j - 1)) < max_freq) ++j;
    return j;
}

template <typename Real>
TrigPolyT<Real> lp_block(const TrigPolyT<Real>& f, int j)
{
    if (!f.is_analytic()) throw DomainError("Littlewood-Paley blocks require an analytic polynomial");
    if (j < 0) throw DomainError("block index must be nonnegative");
    return f.map_coeffs([j](Freq n, auto c) { return c * static_cast<Real>(lp_window(j, n)); });
}

/// Blocks b_0, ..., b_J with sum_j b_j = f coefficientwise.
template <typename Real>
std::vector<TrigPolyT<Real>> lp_decompose(const TrigPolyT<Real>& f)
{
    if (!f.is_analytic()) throw DomainError("Littlewood-Paley blocks require an analytic polynomial");
    std::vector<TrigPolyT<Real>> blocks;
    const int top = lp_max_block(f.max_freq());
    blocks.reserve(static_cast<std::size_t>(top) + 1);
    for (int j = 0; j <= top; ++j) blocks.push_back(lp_block(f, j));
    return blocks;
}

}  // namespace hankel
