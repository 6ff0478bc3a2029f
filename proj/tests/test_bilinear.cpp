#include "doctest.h"

#include <numbers>

#include "hankel/bilinear.hpp"
#include "oracles.hpp"

using namespace hankel;

namespace {

const cplx I(0, 1);

const BHTParams kPairs[] = {{1, 1, 0}, {1, 2, 0}, {2, 1, 0}, {-1, 2, 0}, {3, -1, 0}, {-2, 3, 0}};

}  // namespace

TEST_CASE("bht_fourier examples")
{
    const auto out = bht_fourier(TrigPoly::monomial(1), TrigPoly::monomial(1), 1, 1);
    CHECK(max_coeff_diff(out, TrigPoly::monomial(3, -I)) == 0.0);
    const auto out2 = bht_fourier(TrigPoly::monomial(1), TrigPoly::constant(1), 2, 1);
    CHECK(max_coeff_diff(out2, TrigPoly::monomial(3, -I)) == 0.0);
    CHECK_THROWS_AS(bht_fourier(TrigPoly::constant(1), TrigPoly::constant(1), 1, 0), DomainError);
    CHECK_THROWS_AS(bht_fourier(TrigPoly::constant(1), TrigPoly::constant(1), 2, -2), DomainError);

    SUBCASE("against the sampled conjugate-function oracle")
    {
        RandomStream rng(1);
        for (const auto& p : kPairs) {
            const auto b = oracle::random_poly(rng, -4, 6);
            const auto f = oracle::random_poly(rng, -3, 7);
            const auto out3 = bht_fourier(b, f, p.k, p.l);
            for (double x : {0.0, 0.7, 2.1, 4.4})
                CHECK(std::abs(out3(x) - oracle::bht_at(b, f, p.k, p.l, x)) < 1e-10);
        }
    }
}

TEST_CASE("bht_mu_fourier examples")
{
    for (Freq mu = -1; mu <= 1; ++mu) CHECK(bht_mu_fourier(TrigPoly::constant(2), TrigPoly::analytic({1.0, 3.0}), BHTParams{1, 1, 0}).is_zero());
    const auto out = bht_mu_fourier(TrigPoly::monomial(-3), TrigPoly::monomial(1), BHTParams{1, 1, 0});
    CHECK(max_coeff_diff(out, TrigPoly::monomial(-4, 2.0 * I)) == 0.0);
    CHECK_THROWS_AS(bht_mu_fourier(TrigPoly::constant(1), TrigPoly::constant(1), BHTParams{1, 2, 3}), DomainError);

    SUBCASE("the mu form is the bracket of two plain transforms")
    {
        // H_{k,l,mu}(b, f) = e^{i mu x} H_{k,l}(b, e^{-i mu t} f(Lt)) - b(Lx) Q[f(L.)](x)
        RandomStream rng(2);
        for (const auto& base : kPairs)
            for (Freq mu = -std::abs(base.l); mu <= std::abs(base.l); ++mu) {
                const BHTParams p{base.k, base.l, mu};
                const auto b = oracle::random_poly(rng, -5, 5);
                const auto f = oracle::random_analytic(rng, 6);
                const auto fL = dilate(f, p.L());
                const auto first = modulate(bht_fourier(b, modulate(fL, -mu), p.k, p.l), mu);
                const auto second = multiply(dilate(b, p.L()), conjugate_op(fL));
                CHECK(max_coeff_diff(bht_mu_fourier(b, f, p), first - second) <= 1e-12);
            }
    }
}

TEST_CASE("pv_quadrature")
{
    RandomStream rng(3);
    const std::size_t G = 1 << 11;

    SUBCASE("constant symbol reduces to the conjugate function")
    {
        const auto f = oracle::random_analytic(rng, 8);
        const auto q = pv_quadrature(TrigPoly::constant(cplx(2, 1)), f, BHTParams{1, 1, 0}, G, QuadratureVariant::plain_kl);
        const auto ref = eval_grid(conjugate_op(f) * cplx(2, 1), Grid(G), EvalMethod::direct);
        CHECK((q - ref).cwiseAbs().maxCoeff() / ref.cwiseAbs().maxCoeff() <= 1e-6);
    }
    SUBCASE("mu form cancels exactly for a constant symbol and mu = 0")
    {
        const auto f = oracle::random_analytic(rng, 8);
        const auto q = pv_quadrature(TrigPoly::constant(3), f, BHTParams{2, 1, 0}, G, QuadratureVariant::mu_form);
        CHECK(q.cwiseAbs().maxCoeff() <= 1e-10);
    }
    SUBCASE("random inputs, both variants")
    {
        for (int trial = 0; trial < 50; ++trial) {
            const auto& base = kPairs[trial % 6];
            const BHTParams p{base.k, base.l, rng.integer(-std::abs(base.l), std::abs(base.l))};
            const auto b = oracle::random_poly(rng, -rng.integer(0, 6), rng.integer(0, 6));
            const auto f = oracle::random_analytic(rng, rng.integer(0, 6));
            const auto variant = trial % 2 ? QuadratureVariant::mu_form : QuadratureVariant::plain_kl;
            CHECK(pv_quadrature_error(b, f, p, G, variant) <= 1e-6);
        }
    }
    SUBCASE("examples through the quadrature path")
    {
        const auto q = pv_quadrature(TrigPoly::monomial(-3), TrigPoly::monomial(1), BHTParams{1, 1, 0}, G,
                                     QuadratureVariant::mu_form);
        const Grid grid(G);
        for (std::size_t j = 0; j < G; j += 97)
            CHECK(std::abs(q(j) - 2.0 * I * std::exp(cplx(0, -4 * grid.point(j)))) <= 1e-6);
    }
    CHECK_THROWS_AS(pv_quadrature(TrigPoly::constant(1), TrigPoly::constant(1), BHTParams{1, 1, 0}, 100,
                                  QuadratureVariant::plain_kl),
                    DomainError);
}

TEST_CASE("link identity")
{
    RandomStream rng(4);
    const std::pair<Freq, Freq> kl[] = {{1, 1}, {1, 2}, {2, 1}, {-1, 2}, {3, -1}, {-2, 3}, {5, -2}};
    for (const auto& [k, l] : kl)
        for (Freq gl = -6; gl <= 6; ++gl) {
            const HankelSymbol b(oracle::random_analytic(rng, rng.integer(0, 20)));
            const auto f = oracle::random_analytic(rng, rng.integer(0, 20));
            CHECK(link_identity_check(b, f, k, l, gl) <= 1e-10);
        }
    const auto f = TrigPoly::analytic({1.0, 2.0});
    CHECK(link_identity_check(HankelSymbol(), f, 1, 1, 0) == 0.0);
    CHECK(link_identity_check(HankelSymbol::from_coefficients({1.0, 1.0}), TrigPoly(), 1, 1, 0) == 0.0);
    CHECK_THROWS_AS(link_identity_check(HankelSymbol(), f, -3, 1, 0), DomainError);
}

TEST_CASE("translation covariance")
{
    RandomStream rng(5);
    const auto b = oracle::random_poly(rng, -6, 9);
    const auto f = oracle::random_analytic(rng, 7);
    const BHTParams p{2, 1, 1};
    CHECK(translation_covariance_check(b, f, p, 0.0) == 0.0);
    CHECK(translation_covariance_check(b, f, p, 2 * std::numbers::pi) <= 1e-12);
    for (int trial = 0; trial < 20; ++trial) {
        const auto& base = kPairs[trial % 6];
        const BHTParams q{base.k, base.l, rng.integer(-std::abs(base.l), std::abs(base.l))};
        const auto bb = oracle::random_poly(rng, -8, 8);
        const auto ff = oracle::random_analytic(rng, 8);
        CHECK(translation_covariance_check(bb, ff, q, rng.uniform(0, 2 * std::numbers::pi)) <= 1e-10);
    }
}

TEST_CASE("real_line_bht")
{
    auto bump = [](double s) { return std::complex<double>(std::abs(s) < 1 ? std::pow(1 - s * s, 3) : 0.0); };
    const std::vector<double> xs{-0.3, 0.05, 0.77, 2.5};
    RealLineGrid grid{-1, 1, 4000};

    SUBCASE("beta = 0 gives zero")
    {
        auto b = [](double u) { return std::complex<double>(std::sin(3 * u), u); };
        for (const auto v : real_line_bht<double>(b, bump, 0.0, grid, xs)) CHECK(std::abs(v) == 0.0);
    }
    SUBCASE("linear symbol: the bracket is beta (s - x), integral is -beta int f")
    {
        auto b = [](double u) { return std::complex<double>(u); };
        // int (1 - s^2)^3 ds over [-1, 1] = 32/35
        for (const auto v : real_line_bht<double>(b, bump, 0.7, grid, xs)) CHECK(std::abs(v + 0.7 * 32.0 / 35.0) < 1e-6);
    }
    SUBCASE("beta = 1 converges under refinement")
    {
        auto b = [](double u) { return std::complex<double>(std::cos(u), std::sin(2 * u)); };
        const auto coarse = real_line_bht<double>(b, bump, 1.0, RealLineGrid{-1, 1, 2000}, xs);
        const auto fine = real_line_bht<double>(b, bump, 1.0, RealLineGrid{-1, 1, 4000}, xs);
        for (std::size_t i = 0; i < xs.size(); ++i) CHECK(std::abs(coarse[i] - fine[i]) <= 1e-4 * std::abs(fine[i]));
    }
    CHECK_THROWS_AS(real_line_bht<double>(bump, bump, 1.0, RealLineGrid{1, -1, 10}, xs), DomainError);
    CHECK_THROWS_AS(real_line_bht<double>(bump, bump, 1.0, grid, std::span<const double>{}), DomainError);
}
