#pragma once

// Deformation limits by exact interpolation.  Every family value here is a
// polynomial in the deformation parameter of degree at most n (each series
// coefficient picks up at most one power of lambda per order, and the
// constant terms of all inverted series are lambda-free units).  Evaluating
// at the n+1 nodes lambda = 1..n+1 therefore determines that polynomial
// exactly, and its value at 0 is the classical limit.  An extra node turns
// the same data into a degree-bound consistency check.

#include "dpfg/families.hpp"
#include "dpfg/interpolation.hpp"
#include "dpfg/params.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace dpfg {

// True for families with a deformation parameter and a rational-valued
// classical limit the library can compute independently.
inline bool limit_supported(FamilyId id) {
    switch (id) {
        case FamilyId::DegFalling:
        case FamilyId::DegExp:
        case FamilyId::DegLog:
        case FamilyId::Stirling1Deg:
        case FamilyId::Stirling2Deg:
        case FamilyId::Stirling2DegPoly:
        case FamilyId::Bernoulli2Deg:
        case FamilyId::DegPolyexp:
        case FamilyId::CosDeg:
        case FamilyId::SinDeg:
        case FamilyId::DegFrobeniusEuler:
        case FamilyId::DegGenocchi:
        case FamilyId::DegFrobeniusGenocchi:
        case FamilyId::PolyFG:
        case FamilyId::PolyFGCos:
        case FamilyId::PolyFGSin:
        case FamilyId::CPoly:
        case FamilyId::SPoly:
            return true;
        default:
            return false;
    }
}

// Classical value the lambda -> 0 limit must reproduce, computed without
// any interpolation.
inline Rational classical_limit_value(FamilyId id, const ParamSet& p, int n) {
    unsigned un = static_cast<unsigned>(n);
    unsigned kk = p.k >= 0 ? static_cast<unsigned>(p.k) : 0u;
    switch (id) {
        case FamilyId::DegFalling: return pow(p.x, n);
        case FamilyId::DegExp: return pow(p.x, n);
        case FamilyId::DegLog:
            // log(1+t): EGF value n!/n alternating, zero at n = 0.
            return n == 0 ? Rational(0)
                          : Rational(n % 2 == 1 ? 1 : -1) * Rational(factorial(un)) / Rational(n);
        case FamilyId::Stirling1Deg: return classical_stirling1(un, kk);
        case FamilyId::Stirling2Deg: return classical_stirling2(un, kk);
        case FamilyId::Stirling2DegPoly: return classical_stirling2_poly(un, kk, p.x);
        case FamilyId::Bernoulli2Deg: return classical_bernoulli2(un, p.x);
        case FamilyId::DegPolyexp:
            return polyexp_series(p.k, n).egf_coeff(n);
        case FamilyId::CosDeg: return cos_series(p.y, n).egf_coeff(n);
        case FamilyId::SinDeg: return sin_series(p.y, n).egf_coeff(n);
        case FamilyId::DegFrobeniusEuler:
            return classical_frobenius_euler_series(p.x, p.u, n).egf_coeff(n);
        case FamilyId::DegGenocchi: return classical_genocchi_series(p.x, n).egf_coeff(n);
        case FamilyId::DegFrobeniusGenocchi:
            return classical_frobenius_genocchi_series(p.x, p.u, n).egf_coeff(n);
        case FamilyId::PolyFG:
            return classical_poly_fg_series(p.k, p.x, p.u, n).egf_coeff(n);
        case FamilyId::PolyFGCos:
            return (classical_poly_fg_prefactor_series(p.k, p.u, n) * exp_series(p.x, n) *
                    cos_series(p.y, n))
                .egf_coeff(n);
        case FamilyId::PolyFGSin:
            return (classical_poly_fg_prefactor_series(p.k, p.u, n) * exp_series(p.x, n) *
                    sin_series(p.y, n))
                .egf_coeff(n);
        case FamilyId::CPoly: return classical_c_series(p.x, p.y, n).egf_coeff(n);
        case FamilyId::SPoly: return classical_s_series(p.x, p.y, n).egf_coeff(n);
        default:
            throw std::invalid_argument("family: " + family_name(id) +
                                        " has no deformation limit to check");
    }
}

// Family value at the integer node lambda = j, shared by the limit and the
// degree-consistency paths.
inline Rational limit_node_value(FamilyId id, const ParamSet& base, int n, long long j) {
    ParamSet p = base;
    p.lambda = Rational(j);
    return family_value(id, p, n);
}

// Interpolated lambda -> 0 value from the nodes lambda = 1..n+1.
inline Rational interpolated_limit_value(FamilyId id, const ParamSet& base, int n) {
    std::vector<std::pair<Rational, Rational>> nodes;
    for (long long j = 1; j <= n + 1; ++j)
        nodes.emplace_back(Rational(j), limit_node_value(id, base, n, j));
    return lagrange_at_zero(nodes);
}

// Degree-bound consistency: the polynomial fitted through lambda = 1..n+1
// must also reproduce the directly computed value at lambda = n+2.
inline bool lambda_degree_consistent(FamilyId id, const ParamSet& base, int n) {
    std::vector<std::pair<Rational, Rational>> nodes;
    for (long long j = 1; j <= n + 1; ++j)
        nodes.emplace_back(Rational(j), limit_node_value(id, base, n, j));
    Rational predicted = lagrange_eval(nodes, Rational(n + 2));
    return predicted == limit_node_value(id, base, n, n + 2);
}

struct LimitEntry {
    int n;
    Rational interpolated;
    Rational classical;
    bool match;
};

struct LimitReport {
    FamilyId family;
    int n_max;
    std::vector<LimitEntry> entries;
    bool all_match;
};

inline LimitReport limit_check(FamilyId id, const ParamSet& base, int n_max) {
    if (!limit_supported(id))
        throw std::invalid_argument("family: " + family_name(id) +
                                    " has no deformation limit to check");
    LimitReport report{id, n_max, {}, true};
    for (int n = 0; n <= n_max; ++n) {
        LimitEntry e;
        e.n = n;
        e.interpolated = interpolated_limit_value(id, base, n);
        e.classical = classical_limit_value(id, base, n);
        e.match = e.interpolated == e.classical;
        report.all_match = report.all_match && e.match;
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace dpfg
