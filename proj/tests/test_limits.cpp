#include "dpfg/limits.hpp"

#include "helpers.hpp"

#include <catch_amalgamated.hpp>

#include <vector>

using dpfg::FamilyId;
using dpfg::ParamSet;
using dpfg::Rational;

namespace {

ParamSet base_params() {
    ParamSet p;
    p.lambda = Rational(1);  // overwritten at every node
    p.u = Rational(-1, 2);
    p.x = Rational(1, 3);
    p.y = Rational(3, 4);
    p.k = 2;
    return p;
}

// Signed first-kind Stirling recurrence, independent of the series code.
std::vector<std::vector<long long>> stirling1_grid(int n_max) {
    std::vector<std::vector<long long>> s(n_max + 1, std::vector<long long>(n_max + 1, 0));
    s[0][0] = 1;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k) s[n][k] = s[n - 1][k - 1] - (n - 1) * s[n - 1][k];
    return s;
}

}  // namespace

TEST_CASE("interpolation recovers the Genocchi numbers") {
    ParamSet p = base_params();
    p.x = Rational(0);
    const Rational genocchi[] = {Rational(0), Rational(1), Rational(-1), Rational(0), Rational(1),
                                 Rational(0), Rational(-3)};
    for (int n = 0; n <= 6; ++n) {
        CHECK(dpfg::interpolated_limit_value(FamilyId::DegGenocchi, p, n) == genocchi[n]);
    }
}

TEST_CASE("interpolation recovers signed Stirling numbers of the first kind") {
    auto grid = stirling1_grid(6);
    ParamSet p = base_params();
    for (int n = 0; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            p.k = k;
            CHECK(dpfg::interpolated_limit_value(FamilyId::Stirling1Deg, p, n) ==
                  Rational(grid[n][k]));
        }
    }
}

TEST_CASE("interpolation recovers plain powers and Cauchy values") {
    ParamSet p = base_params();
    p.x = Rational(2, 3);
    for (int n = 0; n <= 6; ++n) {
        CHECK(dpfg::interpolated_limit_value(FamilyId::DegExp, p, n) == dpfg::pow(p.x, n));
        CHECK(dpfg::interpolated_limit_value(FamilyId::DegFalling, p, n) == dpfg::pow(p.x, n));
    }
    p.x = Rational(0);
    const Rational cauchy[] = {Rational(1), Rational(1, 2), Rational(-1, 6), Rational(1, 4),
                               Rational(-19, 30)};
    for (int n = 0; n <= 4; ++n) {
        CHECK(dpfg::interpolated_limit_value(FamilyId::Bernoulli2Deg, p, n) == cauchy[n]);
    }
}

TEST_CASE("limit_check passes across the deformed families") {
    ParamSet p = base_params();
    for (FamilyId id : {FamilyId::DegExp, FamilyId::DegLog, FamilyId::Stirling2Deg,
                        FamilyId::Stirling2DegPoly, FamilyId::DegPolyexp, FamilyId::CosDeg,
                        FamilyId::SinDeg, FamilyId::DegFrobeniusEuler,
                        FamilyId::DegFrobeniusGenocchi, FamilyId::PolyFG, FamilyId::PolyFGCos,
                        FamilyId::PolyFGSin, FamilyId::CPoly, FamilyId::SPoly}) {
        dpfg::LimitReport rep = dpfg::limit_check(id, p, 5);
        INFO(dpfg::family_name(id));
        CHECK(rep.all_match);
        CHECK(rep.entries.size() == 6);
        for (const auto& e : rep.entries) CHECK(e.match == (e.interpolated == e.classical));
    }
}

TEST_CASE("limit_check at both sampled poly orders") {
    ParamSet p = base_params();
    for (long long k : {1, 2}) {
        p.k = k;
        CHECK(dpfg::limit_check(FamilyId::PolyFG, p, 6).all_match);
    }
}

TEST_CASE("degree bound consistency holds at an extra node") {
    ParamSet p = base_params();
    for (int n = 0; n <= 6; ++n) {
        CHECK(dpfg::lambda_degree_consistent(FamilyId::PolyFG, p, n));
        CHECK(dpfg::lambda_degree_consistent(FamilyId::CPoly, p, n));
        CHECK(dpfg::lambda_degree_consistent(FamilyId::Stirling2Deg, p, n));
    }
}

TEST_CASE("families without a deformation limit are rejected") {
    ParamSet p = base_params();
    CHECK_FALSE(dpfg::limit_supported(FamilyId::Falling));
    CHECK_FALSE(dpfg::limit_supported(FamilyId::ClassicalGenocchi));
    CHECK(dpfg::limit_supported(FamilyId::PolyFG));
    CHECK_THROWS_AS(dpfg::classical_limit_value(FamilyId::Falling, p, 2), std::invalid_argument);
    CHECK_THROWS_AS(dpfg::limit_check(FamilyId::ClassicalGenocchi, p, 2), std::invalid_argument);
}
