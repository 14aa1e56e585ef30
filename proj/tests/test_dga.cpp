#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdga/dga.hpp"
#include "cdga/scenarios.hpp"

#include <random>
#include <string>

using namespace cdga;

TEST_CASE("heisenberg differential on generators and products")
{
    Dga heis = heisenberg_model();
    const Algebra& alg = heis.algebra();
    Element a = alg.gen_element(0), b = alg.gen_element(1), c = alg.gen_element(2);

    CHECK(heis.d(a).is_zero());
    CHECK(heis.d(b).is_zero());
    CHECK(heis.d(c) == -(a * b));
    CHECK(heis.d(a * c).is_zero());   // a * a * b = 0
    CHECK(heis.d(b * c).is_zero());
    CHECK(heis.d(a * b).is_zero());
    CHECK(heis.d(a * b * c).is_zero());
    CHECK(heis.d(alg.unit()).is_zero());
    CHECK(heis.d(alg.zero()).is_zero());
}

TEST_CASE("d matrix of the heisenberg model in degree 1")
{
    Dga heis = heisenberg_model();
    const RatMatrix& m = heis.d_matrix(1);
    REQUIRE(m.rows() == 3);  // ab, ac, bc
    REQUIRE(m.cols() == 3);  // a, b, c
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            CHECK(m.at(r, c) == ((r == 0 && c == 2) ? rat(-1) : rat(0)));
}

TEST_CASE("construction rejects d^2 != 0 and names the generator")
{
    Algebra alg({{"p", 2}, {"q", 3}});
    Element p = alg.gen_element(0), q = alg.gen_element(1);
    try {
        Dga bad(alg, {q, p * p});  // d(d p) = d q = p^2 != 0
        FAIL("expected a d^2 failure");
    } catch (const Error& e) {
        std::string msg = e.what();
        CHECK(msg.find("d^2") != std::string::npos);
        CHECK(msg.find("'p'") != std::string::npos);
        CHECK(msg.find("p^2") != std::string::npos);
    }
}

TEST_CASE("construction rejects degree mismatches")
{
    Algebra alg({{"p", 2}});
    Element p = alg.gen_element(0);
    CHECK_THROWS_AS(Dga(alg, {p}), Error);               // d p must live in degree 3
    CHECK_THROWS_AS(Dga(alg, {}), Error);                // missing differential
    CHECK_THROWS_AS(Dga(alg, {alg.zero(), alg.zero()}), Error);

    Algebra other({{"p", 2}});
    CHECK_THROWS_AS(Dga(alg, {other.zero()}), Error);    // foreign algebra
}

TEST_CASE("derivation on powers")
{
    // contractible pair: du = v, dv = 0
    Algebra alg({{"u", 2}, {"v", 3}});
    Element u = alg.gen_element(0), v = alg.gen_element(1);
    Dga dga(alg, {v, alg.zero()});

    CHECK(dga.d(u * u * u) == rat(3) * (u * u * v));
    CHECK(dga.d(u * u) == rat(2) * (u * v));
    CHECK(dga.d(u * v) == v * v);  // = 0, v odd
    CHECK((v * v).is_zero());
    CHECK(dga.d(u * u * v) == alg.zero());
}

TEST_CASE("leibniz rule on random homogeneous elements")
{
    Dga x7 = paper_x(7).dga;
    const Algebra& alg = x7.algebra();
    std::mt19937 rng(31337);
    auto random_homogeneous = [&](int k) {
        Element e = alg.zero();
        for (const auto& m : alg.basis(k))
            if (rng() % 3 == 0)
                e = e + alg.element(m, rat(static_cast<long>(rng() % 9) - 4));
        return e;
    };
    for (int trial = 0; trial < 100; ++trial) {
        int p = 1 + static_cast<int>(rng() % 3);
        int q = 1 + static_cast<int>(rng() % 3);
        Element u = random_homogeneous(p), v = random_homogeneous(q);
        Element lhs = x7.d(u * v);
        Element sign_term = (p % 2 == 0 ? rat(1) : rat(-1)) * (u * x7.d(v));
        CHECK(lhs == x7.d(u) * v + sign_term);
        CHECK(x7.d(x7.d(u)).is_zero());
    }
}

TEST_CASE("gen_differential bounds")
{
    Dga heis = heisenberg_model();
    CHECK_THROWS_AS(heis.gen_differential(3), Error);
    CHECK_THROWS_AS(heis.gen_differential(-1), Error);
    CHECK(heis.gen_differential(0).is_zero());
}

TEST_CASE("d rejects elements of another algebra")
{
    Dga heis = heisenberg_model();
    Dga torus = torus_model(3);
    CHECK_THROWS_AS(heis.d(torus.algebra().gen_element(0)), Error);
}

TEST_CASE("dga identity semantics")
{
    Dga heis = heisenberg_model();
    Dga copy = heis;
    CHECK(copy.same(heis));
    CHECK_FALSE(heisenberg_model().same(heis));
}
