#pragma once

// The constructed polynomial families: Frobenius-Euler, Genocchi and
// (poly-)Frobenius-Genocchi in degenerate and classical forms, the complex
// and cosine/sine companions, and the two-parameter cosine/sine polynomials.
// Everything is generating-function-first: a family member is an EGF
// coefficient of an explicitly built series, and the summation formulas the
// construction also provides are audited against these, never substituted
// for them.

#include "dpfg/memo.hpp"
#include "dpfg/params.hpp"
#include "dpfg/special.hpp"

#include <stdexcept>
#include <string>

namespace dpfg {

inline void require_u(const Rational& u) {
    if (u == Rational(1)) throw std::domain_error("u: must not equal 1");
}

// (1-u) e_lambda^x(t) / (e_lambda(t) - u).
inline RationalSeries deg_frobenius_euler_series(const Rational& x, const Rational& u,
                                                 const Rational& lambda, int order) {
    require_deformation(lambda);
    require_u(u);
    auto p = rational_cache().get_or_build(
        cache_key("deg-fe", {x.to_string(), u.to_string(), lambda.to_string()}, order), [&] {
            RationalSeries denom =
                deg_exp_series(Rational(1), lambda, order) - RationalSeries::one(order) * u;
            return denom.reciprocal() * deg_exp_series(x, lambda, order) * (Rational(1) - u);
        });
    return *p;
}

// 2t e_lambda^x(t) / (e_lambda(t) + 1).
inline RationalSeries deg_genocchi_series(const Rational& x, const Rational& lambda, int order) {
    require_deformation(lambda);
    auto p = rational_cache().get_or_build(
        cache_key("deg-genocchi", {x.to_string(), lambda.to_string()}, order), [&] {
            return (deg_frobenius_euler_series(x, Rational(-1), lambda, order))
                .shifted_up()
                .truncated(order);
        });
    return *p;
}

// (1-u) t e_lambda^x(t) / (e_lambda(t) - u).
inline RationalSeries deg_frobenius_genocchi_series(const Rational& x, const Rational& u,
                                                    const Rational& lambda, int order) {
    require_deformation(lambda);
    require_u(u);
    auto p = rational_cache().get_or_build(
        cache_key("deg-fg", {x.to_string(), u.to_string(), lambda.to_string()}, order), [&] {
            return deg_frobenius_euler_series(x, u, lambda, order).shifted_up().truncated(order);
        });
    return *p;
}

// (1-u) Ei_{k,lambda}(log_lambda(1+t)) / (e_lambda(t) - u), the x-free part
// of the poly-family generating function.
inline RationalSeries poly_fg_prefactor_series(long long k, const Rational& u,
                                               const Rational& lambda, int order) {
    require_deformation(lambda);
    require_u(u);
    auto p = rational_cache().get_or_build(
        cache_key("poly-fg-pre", {std::to_string(k), u.to_string(), lambda.to_string()}, order),
        [&] {
            RationalSeries comp = deg_polyexp_log_series(k, lambda, order);
            RationalSeries denom =
                deg_exp_series(Rational(1), lambda, order) - RationalSeries::one(order) * u;
            return denom.reciprocal() * comp * (Rational(1) - u);
        });
    return *p;
}

inline RationalSeries poly_fg_series(long long k, const Rational& x, const Rational& u,
                                     const Rational& lambda, int order) {
    auto p = rational_cache().get_or_build(
        cache_key("poly-fg",
                  {std::to_string(k), x.to_string(), u.to_string(), lambda.to_string()}, order),
        [&] {
            return poly_fg_prefactor_series(k, u, lambda, order) *
                   deg_exp_series(x, lambda, order);
        });
    return *p;
}

// Complex-argument version: the exponential runs at x + iy.
inline GaussianSeries poly_fg_complex_series(long long k, const Rational& x, const Rational& y,
                                             const Rational& u, const Rational& lambda,
                                             int order) {
    auto p = gaussian_cache().get_or_build(
        cache_key("poly-fg-cplx",
                  {std::to_string(k), x.to_string(), y.to_string(), u.to_string(),
                   lambda.to_string()},
                  order),
        [&] {
            return complexify(poly_fg_prefactor_series(k, u, lambda, order)) *
                   deg_exp_series_gaussian(GaussianRational(x, y), lambda, order);
        });
    return *p;
}

// Cosine/sine versions are defined through their own generating products;
// agreement with the real/imaginary decomposition of the complex version is
// one of the audited identities, not an implementation shortcut.
inline RationalSeries poly_fg_cos_series(long long k, const Rational& x, const Rational& y,
                                         const Rational& u, const Rational& lambda, int order) {
    auto p = rational_cache().get_or_build(
        cache_key("poly-fg-cos",
                  {std::to_string(k), x.to_string(), y.to_string(), u.to_string(),
                   lambda.to_string()},
                  order),
        [&] {
            return poly_fg_prefactor_series(k, u, lambda, order) *
                   deg_exp_series(x, lambda, order) * cos_deg_series(y, lambda, order);
        });
    return *p;
}

inline RationalSeries poly_fg_sin_series(long long k, const Rational& x, const Rational& y,
                                         const Rational& u, const Rational& lambda, int order) {
    auto p = rational_cache().get_or_build(
        cache_key("poly-fg-sin",
                  {std::to_string(k), x.to_string(), y.to_string(), u.to_string(),
                   lambda.to_string()},
                  order),
        [&] {
            return poly_fg_prefactor_series(k, u, lambda, order) *
                   deg_exp_series(x, lambda, order) * sin_deg_series(y, lambda, order);
        });
    return *p;
}

// Two-parameter cosine/sine polynomials: e_lambda^x(t) cos/sin factors alone.
inline RationalSeries c_poly_series(const Rational& x, const Rational& y, const Rational& lambda,
                                    int order) {
    require_deformation(lambda);
    auto p = rational_cache().get_or_build(
        cache_key("c-poly", {x.to_string(), y.to_string(), lambda.to_string()}, order), [&] {
            return deg_exp_series(x, lambda, order) * cos_deg_series(y, lambda, order);
        });
    return *p;
}

inline RationalSeries s_poly_series(const Rational& x, const Rational& y, const Rational& lambda,
                                    int order) {
    require_deformation(lambda);
    auto p = rational_cache().get_or_build(
        cache_key("s-poly", {x.to_string(), y.to_string(), lambda.to_string()}, order), [&] {
            return deg_exp_series(x, lambda, order) * sin_deg_series(y, lambda, order);
        });
    return *p;
}

// Undeformed counterparts.
inline RationalSeries classical_frobenius_euler_series(const Rational& x, const Rational& u,
                                                       int order) {
    require_u(u);
    auto p = rational_cache().get_or_build(
        cache_key("c-fe", {x.to_string(), u.to_string()}, order), [&] {
            RationalSeries denom = exp_series(Rational(1), order) - RationalSeries::one(order) * u;
            return denom.reciprocal() * exp_series(x, order) * (Rational(1) - u);
        });
    return *p;
}

inline RationalSeries classical_genocchi_series(const Rational& x, int order) {
    auto p = rational_cache().get_or_build(cache_key("c-genocchi", {x.to_string()}, order), [&] {
        return classical_frobenius_euler_series(x, Rational(-1), order).shifted_up().truncated(order);
    });
    return *p;
}

inline RationalSeries classical_frobenius_genocchi_series(const Rational& x, const Rational& u,
                                                          int order) {
    require_u(u);
    auto p = rational_cache().get_or_build(
        cache_key("c-fg", {x.to_string(), u.to_string()}, order), [&] {
            return classical_frobenius_euler_series(x, u, order).shifted_up().truncated(order);
        });
    return *p;
}

inline RationalSeries classical_poly_fg_prefactor_series(long long k, const Rational& u,
                                                         int order) {
    require_u(u);
    auto p = rational_cache().get_or_build(
        cache_key("c-poly-fg-pre", {std::to_string(k), u.to_string()}, order), [&] {
            RationalSeries comp = polyexp_series(k, order).compose(log1p_series(order));
            RationalSeries denom = exp_series(Rational(1), order) - RationalSeries::one(order) * u;
            return denom.reciprocal() * comp * (Rational(1) - u);
        });
    return *p;
}

inline RationalSeries classical_poly_fg_series(long long k, const Rational& x, const Rational& u,
                                               int order) {
    auto p = rational_cache().get_or_build(
        cache_key("c-poly-fg", {std::to_string(k), x.to_string(), u.to_string()}, order), [&] {
            return classical_poly_fg_prefactor_series(k, u, order) * exp_series(x, order);
        });
    return *p;
}

inline RationalSeries classical_c_series(const Rational& x, const Rational& y, int order) {
    return exp_series(x, order) * cos_series(y, order);
}

inline RationalSeries classical_s_series(const Rational& x, const Rational& y, int order) {
    return exp_series(x, order) * sin_series(y, order);
}

// Scalar accessors.  A negative order means "pick enough headroom for n".
inline Rational poly_fg(int n, long long k, const Rational& x, const Rational& u,
                        const Rational& lambda, int order = -1) {
    if (order < 0) order = default_order(n);
    return poly_fg_series(k, x, u, lambda, order).egf_coeff(n);
}

inline GaussianRational poly_fg_complex(int n, long long k, const Rational& x, const Rational& y,
                                        const Rational& u, const Rational& lambda,
                                        int order = -1) {
    if (order < 0) order = default_order(n);
    return poly_fg_complex_series(k, x, y, u, lambda, order).egf_coeff(n);
}

inline Rational poly_fg_cos(int n, long long k, const Rational& x, const Rational& y,
                            const Rational& u, const Rational& lambda, int order = -1) {
    if (order < 0) order = default_order(n);
    return poly_fg_cos_series(k, x, y, u, lambda, order).egf_coeff(n);
}

inline Rational poly_fg_sin(int n, long long k, const Rational& x, const Rational& y,
                            const Rational& u, const Rational& lambda, int order = -1) {
    if (order < 0) order = default_order(n);
    return poly_fg_sin_series(k, x, y, u, lambda, order).egf_coeff(n);
}

inline Rational deg_frobenius_euler(int n, const Rational& x, const Rational& u,
                                    const Rational& lambda, int order = -1) {
    if (order < 0) order = default_order(n);
    return deg_frobenius_euler_series(x, u, lambda, order).egf_coeff(n);
}

inline Rational deg_genocchi(int n, const Rational& x, const Rational& lambda, int order = -1) {
    if (order < 0) order = default_order(n);
    return deg_genocchi_series(x, lambda, order).egf_coeff(n);
}

inline Rational deg_frobenius_genocchi(int n, const Rational& x, const Rational& u,
                                       const Rational& lambda, int order = -1) {
    if (order < 0) order = default_order(n);
    return deg_frobenius_genocchi_series(x, u, lambda, order).egf_coeff(n);
}

inline Rational c_poly(int n, const Rational& x, const Rational& y, const Rational& lambda,
                       int order = -1) {
    if (order < 0) order = default_order(n);
    return c_poly_series(x, y, lambda, order).egf_coeff(n);
}

inline Rational s_poly(int n, const Rational& x, const Rational& y, const Rational& lambda,
                       int order = -1) {
    if (order < 0) order = default_order(n);
    return s_poly_series(x, y, lambda, order).egf_coeff(n);
}

// Closed forms for the two-parameter polynomials, used as cross-checks:
// C/S_{n,lambda}(x,y) = sum_k C(n,k) (x)_{n-k,lambda} Re/Im((iy)_{k,lambda}).
inline Rational c_poly_closed(int n, const Rational& x, const Rational& y,
                              const Rational& lambda) {
    GaussianRational iy(Rational(0), y);
    Rational sum = 0;
    for (int j = 0; j <= n; ++j)
        sum += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(j))) *
               deg_falling(x, static_cast<unsigned>(n - j), lambda) *
               deg_falling(iy, static_cast<unsigned>(j), lambda).re();
    return sum;
}

inline Rational s_poly_closed(int n, const Rational& x, const Rational& y,
                              const Rational& lambda) {
    GaussianRational iy(Rational(0), y);
    Rational sum = 0;
    for (int j = 0; j <= n; ++j)
        sum += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(j))) *
               deg_falling(x, static_cast<unsigned>(n - j), lambda) *
               deg_falling(iy, static_cast<unsigned>(j), lambda).im();
    return sum;
}

// Family-level dispatch.  family_series produces the generating series of a
// rational-valued family at fixed parameters; family_value extracts EGF
// values (or direct products for the two value-only families).
inline RationalSeries family_series(FamilyId id, const ParamSet& p, int order) {
    validate_for(id, p);
    unsigned kk = p.k >= 0 ? static_cast<unsigned>(p.k) : 0u;
    switch (id) {
        case FamilyId::DegExp: return deg_exp_series(p.x, p.lambda, order);
        case FamilyId::DegLog: return deg_log_series(p.lambda, order);
        case FamilyId::Stirling1Deg: return stirling1_deg_series(kk, p.lambda, order);
        case FamilyId::Stirling2Deg: return stirling2_deg_series(kk, p.lambda, order);
        case FamilyId::Stirling2DegPoly: return stirling2_deg_poly_series(kk, p.x, p.lambda, order);
        case FamilyId::Bernoulli2Deg: return bernoulli2_series(p.x, p.lambda, order);
        case FamilyId::Polyexp: return polyexp_series(p.k, order);
        case FamilyId::DegPolyexp: return deg_polyexp_series(p.k, p.lambda, order);
        case FamilyId::CosDeg: return cos_deg_series(p.y, p.lambda, order);
        case FamilyId::SinDeg: return sin_deg_series(p.y, p.lambda, order);
        case FamilyId::DegFrobeniusEuler: return deg_frobenius_euler_series(p.x, p.u, p.lambda, order);
        case FamilyId::DegGenocchi: return deg_genocchi_series(p.x, p.lambda, order);
        case FamilyId::DegFrobeniusGenocchi:
            return deg_frobenius_genocchi_series(p.x, p.u, p.lambda, order);
        case FamilyId::PolyFG: return poly_fg_series(p.k, p.x, p.u, p.lambda, order);
        case FamilyId::PolyFGCos: return poly_fg_cos_series(p.k, p.x, p.y, p.u, p.lambda, order);
        case FamilyId::PolyFGSin: return poly_fg_sin_series(p.k, p.x, p.y, p.u, p.lambda, order);
        case FamilyId::CPoly: return c_poly_series(p.x, p.y, p.lambda, order);
        case FamilyId::SPoly: return s_poly_series(p.x, p.y, p.lambda, order);
        case FamilyId::ClassicalFrobeniusEuler:
            return classical_frobenius_euler_series(p.x, p.u, order);
        case FamilyId::ClassicalGenocchi: return classical_genocchi_series(p.x, order);
        case FamilyId::ClassicalFrobeniusGenocchi:
            return classical_frobenius_genocchi_series(p.x, p.u, order);
        case FamilyId::ClassicalStirling1: return classical_stirling1_series(kk, order);
        case FamilyId::ClassicalStirling2: return classical_stirling2_series(kk, order);
        case FamilyId::ClassicalStirling2Poly:
            return classical_stirling2_poly_series(kk, p.x, order);
        case FamilyId::ClassicalBernoulli2: return classical_bernoulli2_series(p.x, order);
        case FamilyId::ClassicalC: return classical_c_series(p.x, p.y, order);
        case FamilyId::ClassicalS: return classical_s_series(p.x, p.y, order);
        case FamilyId::ClassicalPolyFG: return classical_poly_fg_series(p.k, p.x, p.u, order);
        case FamilyId::PolyFGComplex:
            throw std::invalid_argument("family: " + family_name(id) +
                                        " is complex-valued; use the gaussian accessors");
        case FamilyId::DegFalling:
        case FamilyId::Falling:
            throw std::invalid_argument("family: " + family_name(id) +
                                        " is value-only and has no generating series");
    }
    throw std::logic_error("family_series: unhandled family");
}

inline GaussianSeries family_series_gaussian(FamilyId id, const ParamSet& p, int order) {
    validate_for(id, p);
    if (id == FamilyId::PolyFGComplex)
        return poly_fg_complex_series(p.k, p.x, p.y, p.u, p.lambda, order);
    return complexify(family_series(id, p, order));
}

inline Rational family_value(FamilyId id, const ParamSet& p, int n, int order = -1) {
    validate_for(id, p);
    switch (id) {
        case FamilyId::DegFalling: return deg_falling(p.x, static_cast<unsigned>(n), p.lambda);
        case FamilyId::Falling: return falling_factorial(p.x, static_cast<unsigned>(n));
        default: break;
    }
    if (order < 0) order = default_order(n);
    return family_series(id, p, order).egf_coeff(n);
}

inline GaussianRational family_value_gaussian(FamilyId id, const ParamSet& p, int n,
                                              int order = -1) {
    if (id == FamilyId::PolyFGComplex) {
        validate_for(id, p);
        if (order < 0) order = default_order(n);
        return poly_fg_complex_series(p.k, p.x, p.y, p.u, p.lambda, order).egf_coeff(n);
    }
    return GaussianRational(family_value(id, p, n, order));
}

}  // namespace dpfg
