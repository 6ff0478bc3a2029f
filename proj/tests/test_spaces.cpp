#include "doctest.h"

#include <numbers>

#include "hankel/fourier.hpp"
#include "hankel/littlewood_paley.hpp"
#include "hankel/spaces.hpp"
#include "oracles.hpp"

using namespace hankel;
using doctest::Approx;

TEST_CASE("sup_norm")
{
    CHECK(sup_norm(TrigPoly()) == 0.0);
    CHECK(sup_norm(TrigPoly::monomial(17, cplx(0, -3))) == Approx(3.0).epsilon(1e-15));
    CHECK(sup_norm(TrigPoly::analytic({1.0, 1.0})) == Approx(2.0).epsilon(1e-12));
    // |1 + z + z^2| peaks at t = 0; the oversampled grid hits it exactly, so shift it off-grid.
    const auto f = translate(TrigPoly::analytic({1.0, 1.0, 1.0}), 0.123456);
    CHECK(sup_norm(f) == Approx(3.0).epsilon(1e-12));

    RandomStream rng(2);
    const auto g = oracle::random_poly(rng, -20, 30);
    double brute = 0;
    for (int s = 0; s < 200000; ++s) brute = std::max(brute, std::abs(oracle::eval(g, 2 * std::numbers::pi * s / 200000)));
    CHECK(sup_norm(g) >= brute - 1e-9);
    CHECK(sup_norm(g) <= brute * (1 + 1e-6));
}

TEST_CASE("hardy_norm")
{
    for (double p : {0.5, 2.0 / 3.0, 1.0, 2.0, 3.0}) {
        CHECK(hardy_norm(TrigPoly::monomial(7), p).value == Approx(1.0).epsilon(1e-12));
        CHECK(hardy_norm(TrigPoly::constant(cplx(3, 4)), p).value == Approx(5.0).epsilon(1e-12));
    }
    CHECK(hardy_norm(TrigPoly::analytic({1.0, 1.0}), 2).value == Approx(std::sqrt(2.0)).epsilon(1e-12));
    // (1/2pi) int |1 + e^{it}| dt = 4/pi
    const auto h1 = hardy_norm(TrigPoly::analytic({1.0, 1.0}), 1);
    CHECK(h1.converged);
    CHECK(h1.value == Approx(4.0 / std::numbers::pi).epsilon(1e-8));
    CHECK(hardy_norm(TrigPoly::analytic({1.0, 1.0}), std::numeric_limits<double>::infinity()).value ==
          Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(hardy_norm(TrigPoly::monomial(-1), 2), DomainError);
    CHECK_THROWS_AS(hardy_norm(TrigPoly::monomial(1), 0), DomainError);
    CHECK(lp_norm(TrigPoly::monomial(-4, 2.0), 1).value == Approx(2.0).epsilon(1e-12));

    SUBCASE("Parseval and homogeneity on random inputs")
    {
        RandomStream rng(9);
        for (int trial = 0; trial < 20; ++trial) {
            const auto f = oracle::random_analytic(rng, rng.integer(0, 64));
            double energy = 0;
            f.for_each_term([&](Freq, cplx c) { energy += std::norm(c); });
            CHECK(std::abs(hardy_norm(f, 2).value - std::sqrt(energy)) <= 1e-10 * std::sqrt(energy));
            const cplx lambda(-1.5, 0.25);
            for (double p : {0.5, 1.0, 2.0})
                CHECK(hardy_norm(f * lambda, p).value == Approx(std::abs(lambda) * hardy_norm(f, p).value).epsilon(1e-12));
        }
    }
    SUBCASE("triangle inequality for p >= 1")
    {
        RandomStream rng(10);
        for (int trial = 0; trial < 20; ++trial) {
            const auto f = oracle::random_analytic(rng, 20), g = oracle::random_analytic(rng, 20);
            for (double p : {1.0, 1.5, 4.0})
                CHECK(hardy_norm(f + g, p).value <= hardy_norm(f, p).value + hardy_norm(g, p).value + 1e-12);
        }
    }
    SUBCASE("non-convergence is flagged")
    {
        NormOptions tight{1e-30, 1 << 10};
        const auto r = hardy_norm(TrigPoly::analytic({1.0, 1.0}), 1, tight);
        CHECK_FALSE(r.converged);
        CHECK(r.grid_size == 1 << 10);
    }
}

TEST_CASE("lipschitz_norm")
{
    const auto c = lipschitz_norm(TrigPoly::constant(cplx(0, -2)), 0.5);
    CHECK(c.value == Approx(2.0).epsilon(1e-15));
    CHECK(c.method == LipschitzMethod::lp_block);
    REQUIRE(c.certificates.size() == 1);
    CHECK(c.certificates[0].block == 0);

    SUBCASE("monomials scale like N^alpha")
    {
        for (double alpha : {0.25, 0.5, 1.0, 2.0})
            for (Freq N = 1; N <= 3000; N = N * 3 / 2 + 1) {
                const double r = lipschitz_norm(TrigPoly::monomial(N), alpha).value / std::pow(double(N), alpha);
                CHECK(r >= 0.5 - 1e-12);
                CHECK(r <= std::exp2(alpha) + 1e-12);
            }
        // Exact window weights: z^3 splits evenly between blocks 1 and 2.
        const auto z3 = lipschitz_norm(TrigPoly::monomial(3), 1.0);
        CHECK(z3.value == Approx(0.5 * 4).epsilon(1e-14));
    }
    SUBCASE("value is the max certificate; homogeneity")
    {
        const auto b = random_symbol(0.5, 6, 3);
        const auto n = lipschitz_norm(b, 0.5);
        double m = 0;
        for (const auto& cert : n.certificates) m = std::max(m, cert.weighted_sup);
        CHECK(n.value == m);
        CHECK(lipschitz_norm(b * cplx(0, 3), 0.5).value == Approx(3 * n.value).epsilon(1e-12));
    }
    CHECK_THROWS_AS(lipschitz_norm(TrigPoly::constant(1), 0), DomainError);
    CHECK_THROWS_AS(lipschitz_norm(TrigPoly::monomial(-2), 0.5), DomainError);
}

TEST_CASE("lipschitz_norm_diff")
{
    CHECK(lipschitz_norm_diff(TrigPoly::constant(cplx(3, 4)), 0.5).value == Approx(5.0).epsilon(1e-12));
    CHECK_THROWS_AS(lipschitz_norm_diff(TrigPoly::constant(1), 1.0), DomainError);
    CHECK_THROWS_AS(lipschitz_norm_diff(TrigPoly::constant(1), 0.0), DomainError);
    // e^{it}: sup 1, |e^{ih} - 1| / h^alpha peaks at h = pi for alpha = 1/2 among grid gaps, value 2/pi^{1/2}.
    const auto z = lipschitz_norm_diff(TrigPoly::monomial(1), 0.5);
    double best = 0;
    for (int s = 1; s <= 20000; ++s) {
        const double h = std::numbers::pi * s / 20000;
        best = std::max(best, 2 * std::sin(h / 2) / std::sqrt(h));
    }
    CHECK(z.value <= 1 + best + 1e-12);
    CHECK(z.value >= 1 + best * 0.999);
}

TEST_CASE("random_symbol")
{
    const auto a = random_symbol(0.5, 6, 42), b = random_symbol(0.5, 6, 42);
    CHECK(a.span() == b.span());
    CHECK(a.coeffs() == b.coeffs());
    CHECK(a.is_analytic());
    CHECK(a.max_freq() <= 96);
    const double n = lipschitz_norm(a, 0.5).value;
    CHECK(n >= 0.25);
    CHECK(n <= 4.0);
    CHECK(n == Approx(1.0).epsilon(1e-12));
    const auto c = random_symbol(1.0, 0, 5);
    CHECK(c.span() == 1);
    CHECK(c.min_freq() == 0);
    CHECK(std::abs(std::abs(c.coeff(0)) - 1) < 1e-15);
    CHECK(random_symbol(0.5, 6, 43).coeffs() != a.coeffs());
}

TEST_CASE("reduction_index")
{
    CHECK(reduction_index(2, -6) == 3);
    CHECK(reduction_index(1, 5.7) == 5);
    CHECK(reduction_index(-2, 7) == 3);
    CHECK(reduction_index(-0.5, 7) == 7);
    CHECK(reduction_index(0, 4.5) == 4);
    CHECK(reduction_index(0, -4.5) == 0);
    CHECK(reduction_index(3, 0) == 0);
    CHECK_FALSE(reduction_index(-1, -3).has_value());
}

TEST_CASE("reduce_symbol")
{
    const auto b = random_symbol(0.5, 10, 7);
    CHECK(max_coeff_diff(reduce_symbol(b, 10), b) == 0.0);
    CHECK(max_coeff_diff(reduce_symbol(b, 16), b) == 0.0);
    CHECK(reduce_symbol_exact_from(16) == 0);

    // 2^6 <= N < 2^7 drops blocks j < 4, whose supports end below 2^4.
    const Freq N = 100;
    CHECK(reduce_symbol_exact_from(N) == 16);
    const auto high = tail_projection(b, 256);
    CHECK(max_coeff_diff(reduce_symbol(high, N), high) == 0.0);

    for (Freq n : {17, 31, 32, 100, 511, 512, 1000, 1023}) {
        const auto r = reduce_symbol(b, n);
        const Freq from = reduce_symbol_exact_from(n);
        CHECK(from <= n);
        CHECK(max_coeff_diff(tail_projection(r, from), tail_projection(b, from)) == 0.0);
        CHECK(max_coeff_diff(tail_projection(r, n), tail_projection(b, n)) == 0.0);
    }
    // The dropped part is nonzero for this symbol once N >= 2^7.
    CHECK(max_coeff_diff(reduce_symbol(b, 1000), b) > 0.0);
}

TEST_CASE("modulated_norm_ratio")
{
    const auto b = random_symbol(0.5, 8, 1);
    CHECK(modulated_norm_ratio(b, 0.5, 8, 0) == Approx(1.0).epsilon(1e-14));
    CHECK(modulated_norm_ratio(b, 0.5, 16, 0) == Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(modulated_norm_ratio(TrigPoly(), 0.5, 8, 0), DomainError);
    const double r = modulated_norm_ratio(b, 0.5, 64, 256);
    CHECK(r > 0);
    CHECK(r < 10);
}
