#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "hankel/io.hpp"
#include "oracles.hpp"

using namespace hankel;

TEST_CASE("polynomial JSON round trip")
{
    RandomStream rng(1);
    const auto f = oracle::random_poly(rng, -7, 12);
    const auto back = trig_poly_from_json(json::parse(to_json(f).dump()));
    CHECK(max_coeff_diff(back, f) == 0.0);

    const auto j = to_json(TrigPoly::monomial(-2, cplx(1.5, -0.5)));
    CHECK(j.dump() == "[[-2,1.5,-0.5]]");
    CHECK(to_json(TrigPoly()).dump() == "[]");
    CHECK_THROWS_AS(trig_poly_from_json(json::parse("{\"a\":1}")), DomainError);
    CHECK_THROWS_AS(trig_poly_from_json(json::parse("[[1,2]]")), DomainError);
    CHECK_THROWS_AS(trig_poly_from_json(json::parse("[[1.5,2,0]]")), DomainError);

    const auto path = std::filesystem::temp_directory_path() / "hankel_io_test_poly.json";
    save_trig_poly(path, f);
    CHECK(max_coeff_diff(load_trig_poly(path), f) == 0.0);
    std::filesystem::remove(path);
}

TEST_CASE("norm estimate JSON carries the witness")
{
    NormEstimate e;
    e.value = 1.25;
    e.iterations = 7;
    e.witness_vector = Eigen::VectorXcd::Ones(2);
    auto j = to_json(e);
    CHECK(j["method"] == "power_iteration");
    CHECK(j["witness"].size() == 2);
    e.witness_poly = TrigPoly::monomial(3);
    j = to_json(e);
    CHECK(j["witness"].dump() == "[[3,1.0,0.0]]");
}

TEST_CASE("section CSV is row-major long format")
{
    MatrixSection A(2, 2);
    A << cplx(1, 0), cplx(2, 0), cplx(3, 0), cplx(0, -1);
    std::ostringstream os;
    write_section_csv(os, A);
    CHECK(os.str() == "m,n,re,im\n0,0,1,0\n0,1,2,0\n1,0,3,0\n1,1,0,-1\n");
}

TEST_CASE("doubles round-trip through text")
{
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) CHECK(std::stod(format_double(v)) == v);
}
