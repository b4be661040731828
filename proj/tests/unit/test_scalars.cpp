#include "ck/scalar.hpp"

#include <doctest.h>

#include <random>

using ck::Scalar;

namespace {

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-5, 5), q(1, 4);
    auto r = [&] { return ck::Rational(d(rng), q(rng)); };
    return Scalar(r(), r(), r(), r());
}

}  // namespace

TEST_CASE("basic identities in Q(i, sqrt2)") {
    Scalar i = Scalar::i(), s = Scalar::sqrt2();
    CHECK(i * i == Scalar(-1));
    CHECK(s * s == Scalar(2));
    CHECK((i * s) * (i * s) == Scalar(-2));
    CHECK((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2));
    CHECK(Scalar::frac(1, 2) + Scalar::frac(1, 3) == Scalar::frac(5, 6));
    CHECK(Scalar(1) / (Scalar(1) + s) == s - Scalar(1));
    CHECK(i.conj() == -i);
    CHECK(s.conj() == s);
    CHECK_THROWS_AS(Scalar(0).inv(), std::domain_error);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(7);
    for (int t = 0; t < 300; ++t) {
        Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK((x * y).conj() == x.conj() * y.conj());
        if (!x.is_zero()) CHECK(x * x.inv() == Scalar(1));
    }
}

TEST_CASE("rendering and parsing round-trip") {
    std::mt19937 rng(11);
    for (int t = 0; t < 300; ++t) {
        Scalar x = random_scalar(rng);
        CHECK(Scalar::parse(x.str()) == x);
    }
    CHECK(Scalar::parse("1/2 - i*s2") == Scalar(ck::Rational(1, 2), 0, 0, -1));
    CHECK(Scalar::parse("-3*i + s2") == Scalar(0, -3, 1, 0));
    CHECK(Scalar(0).str() == "0");
    CHECK(ck::rational_str(ck::Rational(-4, 6)) == "-2/3");
    CHECK_THROWS(Scalar::parse("1 +"));
    CHECK_THROWS(Scalar::parse("x"));
}

TEST_CASE("predicates") {
    CHECK(Scalar(3).is_rational());
    CHECK_FALSE(Scalar::i().is_rational());
    CHECK(Scalar(1).is_one());
    CHECK(Scalar().is_zero());
}
