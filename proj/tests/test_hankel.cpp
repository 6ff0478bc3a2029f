#include "doctest.h"

#include "hankel/hankel.hpp"
#include "oracles.hpp"

using namespace hankel;

namespace {

HankelSymbol random_hankel(RandomStream& rng, Freq degree) { return HankelSymbol(oracle::random_analytic(rng, degree)); }

}  // namespace

TEST_CASE("symbols must be analytic")
{
    CHECK_THROWS_AS(HankelSymbol(TrigPoly::monomial(-1)), DomainError);
    const auto b = HankelSymbol::from_coefficients({1.0, 2.0, 3.0});
    CHECK(b.degree() == 2);
    CHECK(b[1] == cplx(2));
    CHECK(b[5] == cplx(0));
}

TEST_CASE("hankel_apply")
{
    const auto b = HankelSymbol::from_coefficients({1.0, 1.0});
    const auto f = TrigPoly::analytic({1.0, 1.0});
    CHECK(max_coeff_diff(hankel_apply(b, f), TrigPoly::analytic({2.0, 1.0})) == 0.0);
    CHECK(hankel_apply(b, TrigPoly()).is_zero());
    CHECK_THROWS_AS(hankel_apply(b, TrigPoly::monomial(-1)), DomainError);

    SUBCASE("direct sum, projection path and dense oracle agree")
    {
        RandomStream rng(1);
        for (int trial = 0; trial < 100; ++trial) {
            const auto bs = random_hankel(rng, rng.integer(0, 40));
            const auto g = oracle::random_analytic(rng, rng.integer(0, 40));
            const auto direct = hankel_apply(bs, g);
            CHECK(max_coeff_diff(direct, hankel_apply_projection(bs, g)) <= 1e-12);
            CHECK(oracle::max_diff(oracle::masked_hankel(bs.poly(), g, 0, 1, 0, 1, 1, false), direct) <= 1e-12);
        }
    }
}

TEST_CASE("multilinear_apply")
{
    RandomStream rng(2);
    const auto b = random_hankel(rng, 12);
    const auto f = oracle::random_analytic(rng, 5);
    const std::vector<TrigPoly> one{f};
    CHECK(max_coeff_diff(multilinear_apply<double>(b, one), hankel_apply(b, f)) == 0.0);
    const std::vector<TrigPoly> with_zero{f, TrigPoly()};
    CHECK(multilinear_apply<double>(b, with_zero).is_zero());

    const auto b3 = HankelSymbol::from_coefficients({1.0, 1.0, 1.0});
    const auto z1 = TrigPoly::analytic({1.0, 1.0});
    const std::vector<TrigPoly> pair{z1, z1};
    const auto expect = hankel_apply(b3, TrigPoly::analytic({1.0, 2.0, 1.0}));
    CHECK(max_coeff_diff(multilinear_apply<double>(b3, pair), expect) == 0.0);
    CHECK(max_coeff_diff(expect, TrigPoly::analytic({4.0, 3.0, 1.0})) == 0.0);
    CHECK_THROWS_AS(multilinear_apply<double>(b3, std::span<const TrigPoly>{}), DomainError);
}

TEST_CASE("truncated_apply")
{
    const auto b = HankelSymbol::from_coefficients({1.0, 1.0});
    const auto f = TrigPoly::analytic({1.0, 1.0});
    CHECK(max_coeff_diff(truncated_apply(b, TruncationSpec::linear(1, 0), f), TrigPoly::analytic({1.0, 1.0})) == 0.0);

    RandomStream rng(3);
    const auto bs = random_hankel(rng, 20);
    const auto g = oracle::random_analytic(rng, 15);
    CHECK(max_coeff_diff(truncated_apply(bs, TruncationSpec::linear(-100, -1000), g), hankel_apply(bs, g)) == 0.0);
    CHECK(truncated_apply(bs, TruncationSpec::linear(0.5, 40), g).is_zero());

    SUBCASE("masked-sum oracle over rational slopes, both boundary conventions")
    {
        for (int trial = 0; trial < 200; ++trial) {
            const Freq bn = rng.integer(-6, 6), bd = rng.integer(1, 4), gn = rng.integer(-40, 40), gd = rng.integer(1, 5);
            const auto bb = random_hankel(rng, rng.integer(0, 30));
            const auto ff = oracle::random_analytic(rng, rng.integer(0, 30));
            for (auto boundary : {Boundary::include, Boundary::half}) {
                const auto spec = TruncationSpec::linear(double(bn) / double(bd), double(gn) / double(gd), boundary);
                const double on_line = boundary == Boundary::include ? 1.0 : 0.5;
                CHECK(oracle::max_diff(oracle::masked_hankel(bb.poly(), ff, bn, bd, gn, gd, on_line),
                                       truncated_apply(bb, spec, ff)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("mask weight tolerance")
{
    const auto spec = TruncationSpec::linear(1.0 / 3.0, 2.0 / 3.0, Boundary::half);
    // m = n/3 + 2/3 at n = 1, m = 1: inexact in floating point, still on the line.
    CHECK(spec.weight(1, spec.beta[0] * 1.0) == 0.5);
    CHECK(spec.weight(2, spec.beta[0] * 1.0) == 1.0);
    CHECK(spec.weight(0, spec.beta[0] * 1.0) == 0.0);
}

TEST_CASE("multilinear_truncated_apply")
{
    RandomStream rng(4);
    const auto b = random_hankel(rng, 30);
    const auto f = oracle::random_analytic(rng, 12);
    const std::vector<TrigPoly> one{f};
    const auto spec1 = TruncationSpec::linear(1.5, -2);
    CHECK(max_coeff_diff(multilinear_truncated_apply<double>(b, spec1, one), truncated_apply(b, spec1, f)) <= 1e-13);

    SUBCASE("equal slopes reduce to the linear truncation of the product")
    {
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
            const double nu = std::vector<double>{-3, -2, -0.5, 0.5, 1, 2, 3}[static_cast<std::size_t>(rng.integer(0, 6))];
            const double gamma = static_cast<double>(rng.integer(-10, 10));
            std::vector<TrigPoly> fs;
            TrigPoly prod = TrigPoly::constant(1);
            for (std::size_t i = 0; i < n; ++i) {
                fs.push_back(oracle::random_analytic(rng, rng.integer(0, 10)));
                prod = multiply(prod, fs.back());
            }
            TruncationSpec spec{std::vector<double>(n, nu), gamma, Boundary::include};
            const auto lhs = multilinear_truncated_apply<double>(b, spec, fs);
            const auto rhs = truncated_apply(b, TruncationSpec::linear(nu, gamma), prod);
            CHECK(max_coeff_diff(lhs, rhs) <= 1e-10);
        }
    }
    SUBCASE("empty mask and guards")
    {
        const std::vector<TrigPoly> two{f, f};
        TruncationSpec far{{1.0, 1.0}, 1000, Boundary::include};
        CHECK(multilinear_truncated_apply<double>(b, far, two).is_zero());
        TruncationSpec wrong{{1.0}, 0, Boundary::include};
        CHECK_THROWS_AS(multilinear_truncated_apply<double>(b, wrong, two), DomainError);
        const auto big = HankelSymbol(oracle::random_analytic(rng, 1000));
        const auto g = oracle::random_analytic(rng, 500);
        const std::vector<TrigPoly> three{g, g, g};
        TruncationSpec s3{{1.0, 1.0, 1.0}, 0, Boundary::include};
        CHECK_THROWS_AS(multilinear_truncated_apply<double>(big, s3, three), CostGuard);
    }
}

TEST_CASE("column_truncation_apply")
{
    RandomStream rng(5);
    const auto b = random_hankel(rng, 25);
    const auto f = oracle::random_analytic(rng, 10);
    CHECK(max_coeff_diff(column_truncation_apply(b, 0, f), hankel_apply(b, f)) == 0.0);
    CHECK(column_truncation_apply(b, 11, f).is_zero());
    for (Freq N = 0; N <= 11; ++N)
        CHECK(max_coeff_diff(column_truncation_apply(b, N, f), hankel_apply(b, tail_projection(f, N))) <= 1e-13);
}

TEST_CASE("beta = 0 and beta = -1 identities")
{
    RandomStream rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        const auto b = random_hankel(rng, rng.integer(0, 32));
        const auto f = oracle::random_analytic(rng, rng.integer(0, 32));
        CHECK(beta_zero_identity_check(b, rng.integer(0, 34), f) <= 1e-12);
        CHECK(beta_minus_one_identity_check(b, rng.integer(1, 34), f) <= 1e-12);
    }
    const auto b = random_hankel(rng, 8);
    const auto f = oracle::random_analytic(rng, 8);
    CHECK(beta_zero_identity_check(b, 100, f) == 0.0);
    CHECK(truncated_apply(b, TruncationSpec::linear(0, 101), f).is_zero());

    // N = 0: the constant term of H_b f is removed.
    const auto full = hankel_apply(b, f);
    const auto kept = truncated_apply(b, TruncationSpec::linear(0, 1), f);
    CHECK(kept.coeff(0) == cplx(0));
    CHECK(max_coeff_diff(kept, full - TrigPoly::constant(full.coeff(0))) <= 1e-14);

    // N = 1: H_b - Pi_{-1,1} H_b is the Hankel operator of b_0 alone.
    const auto diff = full - truncated_apply(b, TruncationSpec::linear(-1, 1), f);
    CHECK(max_coeff_diff(diff, TrigPoly::constant(b[0] * f.coeff(0))) <= 1e-14);

    CHECK(beta_minus_one_identity_check(HankelSymbol(), 3, f) == 0.0);
    CHECK_THROWS_AS(beta_minus_one_identity_check(b, 0, f), DomainError);
    CHECK_THROWS_AS(beta_zero_identity_check(b, -1, f), DomainError);
}

TEST_CASE("matrix_section")
{
    const auto b = HankelSymbol::from_coefficients({1.0, 1.0, 0.0});
    const MatrixSection A = matrix_section<double>(b, std::nullopt, 2, 2);
    CHECK(A(0, 0) == cplx(1));
    CHECK(A(0, 1) == cplx(1));
    CHECK(A(1, 0) == cplx(1));
    CHECK(A(1, 1) == cplx(0));
    const MatrixSection Z = matrix_section<double>(b, TruncationSpec::linear(1, 10), 3, 3);
    CHECK(Z.cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(matrix_section<double>(b, std::nullopt, 4097, 2), CostGuard);

    SUBCASE("section times coefficients equals the operator")
    {
        RandomStream rng(7);
        const auto bs = random_hankel(rng, 30);
        const auto f = oracle::random_analytic(rng, 20);
        const auto spec = TruncationSpec::linear(-0.5, 3, Boundary::half);
        const MatrixSection S = matrix_section<double>(bs, spec, 31, 21);
        Eigen::VectorXcd a(21);
        for (Eigen::Index n = 0; n < 21; ++n) a(n) = f.coeff(n);
        const Eigen::VectorXcd c = S * a;
        const auto ref = truncated_apply(bs, spec, f);
        for (Eigen::Index m = 0; m < 31; ++m) CHECK(std::abs(c(m) - ref.coeff(m)) <= 1e-12);
    }
}
