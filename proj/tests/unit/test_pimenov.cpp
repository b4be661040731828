#include "ck/pimenov.hpp"

#include <doctest.h>

#include <random>

using namespace ck;

TEST_CASE("nilpotent generators") {
    Pim a = Pim::iota(3, 1), b = Pim::iota(3, 2), one(3, Scalar(1));
    CHECK((a * a).is_zero());
    CHECK(a * b == b * a);
    CHECK_FALSE((a * b).is_zero());
    CHECK((one + a) * (one - a) == one);
    CHECK((one + a).inv() == one - a);
    CHECK_THROWS_AS(a.inv(), std::domain_error);
    // (1 + i1 + i2)^3 = 1 + 3 i1 + 3 i2 + 6 i1 i2
    Pim p = (one + a + b).pow(3);
    CHECK(p == one + a * Scalar(3) + b * Scalar(3) + a * b * Scalar(6));
}

TEST_CASE("inverse of a unit with a random nilpotent part") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int t = 0; t < 100; ++t) {
        Pim x(3, Scalar(d(rng) == 0 ? 1 : d(rng) + 4));
        for (IotaMask m = 1; m < 8; ++m) x += Pim::monomial(3, m, Scalar(d(rng)));
        if (!x.is_unit()) continue;
        CHECK(x * x.inv() == Pim(3, Scalar(1)));
    }
}

TEST_CASE("rendering and parsing") {
    Pim x = Pim(2, Scalar(2)) - Pim::iota(2, 1) * Scalar::i() + Pim::monomial(2, 3, Scalar::frac(1, 3));
    CHECK(x.str() == "2 + (-i)*I1 + 1/3*I1I2");
    CHECK(Pim::parse(x.str(), 2) == x);
    CHECK(Pim::parse("-I2").arity() == 2);
    CHECK(Pim::parse("0", 1).is_zero());
    CHECK(Pim::parse("(1 + s2)*I1", 1) == Pim::iota(1, 1) * Scalar(1, 0, 1, 0));
    CHECK_THROWS(Pim::parse("I1I1"));
    CHECK_THROWS(Pim::parse("2*J1"));
}

TEST_CASE("valuations and products of parameters") {
    JValuation v = JValuation::parse("1,iota,i");
    CHECK(v.size() == 3);
    CHECK(v.str() == "1,iota,i");
    CHECK(v.is_iota(2));
    CHECK(v.iota_indices() == std::vector<int>{2});
    CHECK(v.j(1) == Pim(3, Scalar(1)));
    CHECK(v.j(2) == Pim::iota(3, 2));
    CHECK(v.j(3) == Pim(3, Scalar::i()));
    CHECK(jprod(1, 3, 2, v).is_zero());
    CHECK(jprod(3, 3, 2, v) == Pim(3, Scalar(-1)));
    CHECK(jprod(3, 2, 2, v) == Pim(3, Scalar(1)));
    CHECK(interval_product(1, 1, v) == Pim(3, Scalar(1)));
    CHECK(JValuation::iota_at(4, {2, 4}).str() == "1,iota,1,iota");
}

TEST_CASE("formal monomials") {
    JMonomial m = JMonomial::range(2, 4, 2);
    CHECK(m.str() == "j2^2*j3^2*j4^2");
    JValuation v = JValuation::iota_at(4, {3});
    CHECK(m.killed_by(v));
    CHECK_FALSE(JMonomial::range(1, 2, 1).killed_by(v));
    CHECK(JMonomial::range(3, 2, 1).is_one());
}
