#include "dpfg/gaussian.hpp"

#include "helpers.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using dpfg::GaussianRational;
using dpfg::Rational;

TEST_CASE("gaussian construction and accessors") {
    GaussianRational z(Rational(1, 2), Rational(-3, 4));
    CHECK(z.re() == Rational(1, 2));
    CHECK(z.im() == Rational(-3, 4));
    CHECK(GaussianRational(Rational(5)).is_real());
    CHECK(GaussianRational().is_zero());
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(Rational(-1)));
}

TEST_CASE("gaussian arithmetic") {
    GaussianRational a(Rational(1), Rational(2));
    GaussianRational b(Rational(3), Rational(-1));
    CHECK(a * b == GaussianRational(Rational(5), Rational(5)));
    CHECK(a + b == GaussianRational(Rational(4), Rational(1)));
    CHECK(a - b == GaussianRational(Rational(-2), Rational(3)));
    CHECK(a.conj() == GaussianRational(Rational(1), Rational(-2)));
    CHECK(a.norm2() == Rational(5));
    CHECK(a * a.inverse() == GaussianRational(Rational(1)));
    CHECK(a / b == a * b.inverse());
    CHECK_THROWS_AS(GaussianRational().inverse(), std::domain_error);
}

TEST_CASE("gaussian field axioms hold on random samples") {
    std::mt19937_64 rng(424242ull);
    for (int round = 0; round < 150; ++round) {
        GaussianRational a = testutil::random_gaussian(rng);
        GaussianRational b = testutil::random_gaussian(rng);
        GaussianRational c = testutil::random_gaussian(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.norm2() == (a * a.conj()).re());
        if (!a.is_zero()) CHECK(a * a.inverse() == GaussianRational(Rational(1)));
    }
}

TEST_CASE("gaussian text round trip") {
    CHECK(GaussianRational(Rational(1, 2), Rational(-3, 4)).to_string() == "1/2+-3/4*i");
    CHECK(GaussianRational(Rational(5)).to_string() == "5+0*i");
    CHECK(GaussianRational::parse("1/2+-3/4*i") ==
          GaussianRational(Rational(1, 2), Rational(-3, 4)));
    CHECK(GaussianRational::parse("0+1*i") == GaussianRational::i());
    CHECK(GaussianRational::parse("-2+0*i") == GaussianRational(Rational(-2)));

    std::mt19937_64 rng(99ull);
    for (int round = 0; round < 100; ++round) {
        GaussianRational z = testutil::random_gaussian(rng);
        CHECK(GaussianRational::parse(z.to_string()) == z);
    }

    CHECK_THROWS_AS(GaussianRational::parse("1"), std::invalid_argument);
    CHECK_THROWS_AS(GaussianRational::parse("1+2"), std::invalid_argument);
    CHECK_THROWS_AS(GaussianRational::parse("+1*i"), std::invalid_argument);
    CHECK_THROWS_AS(GaussianRational::parse(""), std::invalid_argument);
}

TEST_CASE("gaussian pow") {
    GaussianRational i = GaussianRational::i();
    CHECK(dpfg::pow(i, 4) == GaussianRational(Rational(1)));
    CHECK(dpfg::pow(i, -1) == -i);
    CHECK(dpfg::pow(GaussianRational(Rational(1), Rational(1)), 2) ==
          GaussianRational(Rational(0), Rational(2)));
}
