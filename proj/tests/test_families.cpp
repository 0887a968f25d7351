#include "dpfg/families.hpp"

#include "helpers.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using dpfg::FamilyId;
using dpfg::GaussianRational;
using dpfg::ParamSet;
using dpfg::Rational;
using dpfg::RationalSeries;

namespace {

struct SampleParams {
    Rational x, u, lambda;
};

// A few fixed parameter points exercising signs and non-integers.
const SampleParams kSamples[] = {
    {Rational(0), Rational(-1), Rational(1, 3)},
    {Rational(1, 2), Rational(2), Rational(-2, 5)},
    {Rational(-2), Rational(-1, 3), Rational(3)},
};

}  // namespace

TEST_CASE("Frobenius-Euler low-order values") {
    for (const auto& s : kSamples) {
        CHECK(dpfg::deg_frobenius_euler(0, s.x, s.u, s.lambda) == Rational(1));
        // H_1(x;u) = x + 1/(u-1), independent of lambda.
        CHECK(dpfg::deg_frobenius_euler(1, s.x, s.u, s.lambda) ==
              s.x + (s.u - Rational(1)).inverse());
    }
    CHECK_THROWS_AS(dpfg::deg_frobenius_euler(1, Rational(0), Rational(1), Rational(1)),
                    std::domain_error);
}

TEST_CASE("Frobenius-Genocchi helper satisfies its defining equation") {
    // (e_lambda - u) shifts the generating function of (1-u) t e_lambda^x:
    // sum_m C(n,m) (1)_{n-m,lambda} FGh_m(x) - u FGh_n(x) = (1-u) n (x)_{n-1,lambda}.
    for (const auto& s : kSamples) {
        for (int n = 0; n <= 10; ++n) {
            Rational lhs = -s.u * dpfg::deg_frobenius_genocchi(n, s.x, s.u, s.lambda);
            for (int m = 0; m <= n; ++m) {
                lhs += Rational(dpfg::binomial(n, m)) *
                       dpfg::deg_falling(Rational(1), n - m, s.lambda) *
                       dpfg::deg_frobenius_genocchi(m, s.x, s.u, s.lambda);
            }
            Rational rhs = n == 0 ? Rational(0)
                                  : (Rational(1) - s.u) * Rational(n) *
                                        dpfg::deg_falling(s.x, n - 1, s.lambda);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Genocchi is the u = -1 specialization") {
    for (int n = 0; n <= 8; ++n) {
        CHECK(dpfg::deg_genocchi(n, Rational(1, 2), Rational(1, 3)) ==
              dpfg::deg_frobenius_genocchi(n, Rational(1, 2), Rational(-1), Rational(1, 3)));
    }
    CHECK(dpfg::deg_genocchi(0, Rational(0), Rational(1, 3)) == Rational(0));
    CHECK(dpfg::deg_genocchi(1, Rational(0), Rational(1, 3)) == Rational(1));
}

TEST_CASE("order-one poly family collapses to the Frobenius-Genocchi helper") {
    for (const auto& s : kSamples) {
        for (int n = 0; n <= 10; ++n) {
            CHECK(dpfg::poly_fg(n, 1, s.x, s.u, s.lambda) ==
                  dpfg::deg_frobenius_genocchi(n, s.x, s.u, s.lambda));
        }
    }
}

TEST_CASE("poly family regression column") {
    // k = 1, u = -1, lambda = 1/3, x = 0; frozen from the series oracle and
    // cross-checked by the helper collapse above.
    const Rational expected[] = {Rational(0), Rational(1), Rational(-1), Rational(1, 2),
                                 Rational(5, 9)};
    for (int n = 0; n <= 4; ++n) {
        CHECK(dpfg::poly_fg(n, 1, Rational(0), Rational(-1), Rational(1, 3)) == expected[n]);
    }
    // Index 0 vanishes for every order because the polyexponential has no
    // constant term.
    for (long long k = 1; k <= 3; ++k) {
        CHECK(dpfg::poly_fg(0, k, Rational(1, 2), Rational(2), Rational(1, 5)) == Rational(0));
    }
}

TEST_CASE("complex family projects onto the cosine and sine families") {
    Rational x(1, 2), y(2, 3), u(-1, 2), lambda(1, 4);
    for (int n = 0; n <= 6; ++n) {
        GaussianRational z = dpfg::poly_fg_complex(n, 2, x, y, u, lambda);
        CHECK(z.re() == dpfg::poly_fg_cos(n, 2, x, y, u, lambda));
        CHECK(z.im() == dpfg::poly_fg_sin(n, 2, x, y, u, lambda));
    }
    // y = 0 collapses to the real family.
    for (int n = 0; n <= 6; ++n) {
        CHECK(dpfg::poly_fg_cos(n, 2, x, Rational(0), u, lambda) ==
              dpfg::poly_fg(n, 2, x, u, lambda));
        CHECK(dpfg::poly_fg_sin(n, 2, x, Rational(0), u, lambda) == Rational(0));
    }
}

TEST_CASE("two-parameter polynomials match their closed forms") {
    std::mt19937_64 rng(21ull);
    for (int round = 0; round < 8; ++round) {
        Rational x = testutil::random_rational(rng);
        Rational y = testutil::random_rational(rng);
        Rational lambda = testutil::random_nonzero_rational(rng);
        for (int n = 0; n <= 8; ++n) {
            CHECK(dpfg::c_poly(n, x, y, lambda) == dpfg::c_poly_closed(n, x, y, lambda));
            CHECK(dpfg::s_poly(n, x, y, lambda) == dpfg::s_poly_closed(n, x, y, lambda));
        }
        // Degree-two values in closed form.
        CHECK(dpfg::c_poly(2, x, y, lambda) == x * x - lambda * x - y * y);
        CHECK(dpfg::s_poly(2, x, y, lambda) == Rational(2) * x * y - lambda * y);
        CHECK(dpfg::s_poly(1, x, y, lambda) == y);
    }
}

TEST_CASE("classical families") {
    // Genocchi numbers from 2t/(e^t+1).
    const Rational genocchi[] = {Rational(0), Rational(1), Rational(-1), Rational(0), Rational(1),
                                 Rational(0), Rational(-3)};
    RationalSeries g = dpfg::classical_genocchi_series(Rational(0), 8);
    for (int n = 0; n <= 6; ++n) CHECK(g.egf_coeff(n) == genocchi[n]);

    CHECK(dpfg::classical_frobenius_euler_series(Rational(0), Rational(-1), 4).egf_coeff(1) ==
          Rational(-1, 2));

    // The order-one classical poly family collapses the same way.
    RationalSeries fg1 = dpfg::classical_poly_fg_series(1, Rational(1, 2), Rational(3), 8);
    RationalSeries helper = dpfg::classical_frobenius_genocchi_series(Rational(1, 2), Rational(3), 8);
    CHECK(fg1 == helper);
}

TEST_CASE("family dispatch agrees with direct accessors") {
    ParamSet p;
    p.lambda = Rational(1, 3);
    p.u = Rational(-1);
    p.x = Rational(1, 2);
    p.y = Rational(2);
    p.k = 2;

    for (int n = 0; n <= 6; ++n) {
        CHECK(dpfg::family_value(FamilyId::PolyFG, p, n) ==
              dpfg::poly_fg(n, p.k, p.x, p.u, p.lambda));
        CHECK(dpfg::family_value(FamilyId::CPoly, p, n) == dpfg::c_poly(n, p.x, p.y, p.lambda));
        CHECK(dpfg::family_value(FamilyId::DegFalling, p, n) ==
              dpfg::deg_falling(p.x, n, p.lambda));
        CHECK(dpfg::family_value(FamilyId::DegFrobeniusEuler, p, n) ==
              dpfg::deg_frobenius_euler(n, p.x, p.u, p.lambda));
        CHECK(dpfg::family_value_gaussian(FamilyId::PolyFGComplex, p, n) ==
              dpfg::poly_fg_complex(n, p.k, p.x, p.y, p.u, p.lambda));
    }

    // The complex family has no rational series; the value-only families
    // have no series at all.
    CHECK_THROWS_AS(dpfg::family_series(FamilyId::PolyFGComplex, p, 4), std::invalid_argument);
    CHECK_THROWS_AS(dpfg::family_series(FamilyId::DegFalling, p, 4), std::invalid_argument);

    ParamSet bad = p;
    bad.lambda = Rational(0);
    CHECK_THROWS_AS(dpfg::family_value(FamilyId::PolyFG, bad, 2), std::domain_error);
    bad = p;
    bad.u = Rational(1);
    CHECK_THROWS_AS(dpfg::family_value(FamilyId::PolyFG, bad, 2), std::domain_error);
    bad = p;
    bad.k = -1;
    CHECK_THROWS_AS(dpfg::family_value(FamilyId::Stirling2Deg, bad, 2), std::domain_error);
}

TEST_CASE("family table round trips") {
    for (const auto& info : dpfg::family_table()) {
        auto id = dpfg::family_from_name(info.name);
        REQUIRE(id.has_value());
        CHECK(*id == info.id);
        CHECK(dpfg::family_name(info.id) == info.name);
    }
    CHECK_FALSE(dpfg::family_from_name("no-such-family").has_value());
    CHECK(dpfg::family_table().size() == 31);
}
