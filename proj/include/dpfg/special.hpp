#pragma once

// Builders for the base special-function series: degenerate exponentials
// and logarithms, polyexponentials, degenerate trigonometric series, both
// kinds of degenerate Stirling numbers, and Bernoulli polynomials of the
// second kind, plus their classical (undeformed) counterparts.  All series
// are ordinary-coefficient truncations; EGF values come out of egf_coeff.
//
// Degenerate builders refuse lambda = 0: the limit families are provided
// separately and reaching them numerically is the interpolation layer's job.

#include "dpfg/memo.hpp"
#include "dpfg/rational.hpp"
#include "dpfg/series.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dpfg {

inline void require_deformation(const Rational& lambda) {
    if (lambda.is_zero())
        throw std::domain_error("lambda: must be nonzero (use the classical counterpart instead)");
}

inline std::string cache_key(std::string_view tag, std::initializer_list<std::string> parts,
                             int order) {
    std::string key(tag);
    for (const auto& p : parts) {
        key += '|';
        key += p;
    }
    key += "|N=";
    key += std::to_string(order);
    return key;
}

// Generalized falling factorial (x)_{n,lambda} = x(x-lambda)...(x-(n-1)lambda).
// Defined for every lambda: lambda = 0 gives the plain power x^n and
// lambda = 1 the ordinary falling factorial.
template <class R>
R deg_falling(const R& x, unsigned n, const Rational& lambda) {
    R p(1);
    for (unsigned i = 0; i < n; ++i) p *= x - R(lambda * Rational(static_cast<long long>(i)));
    return p;
}

// Ordinary falling factorial (x)_n = x(x-1)...(x-n+1).
inline Rational falling_factorial(const Rational& x, unsigned n) {
    return deg_falling(x, n, Rational(1));
}

// e_lambda^x(t) = (1+lambda t)^{x/lambda}, EGF of (x)_{n,lambda}.
inline RationalSeries deg_exp_series(const Rational& x, const Rational& lambda, int order) {
    require_deformation(lambda);
    auto p = rational_cache().get_or_build(
        cache_key("deg-exp", {x.to_string(), lambda.to_string()}, order), [&] {
            RationalSeries s(order);
            Rational c = 1;
            s.set_coeff(0, c);
            for (int n = 1; n <= order; ++n) {
                c *= (x - lambda * Rational(n - 1)) / Rational(n);
                s.set_coeff(n, c);
            }
            return s;
        });
    return *p;
}

inline GaussianSeries deg_exp_series_gaussian(const GaussianRational& z, const Rational& lambda,
                                              int order) {
    require_deformation(lambda);
    auto p = gaussian_cache().get_or_build(
        cache_key("deg-exp-g", {z.to_string(), lambda.to_string()}, order), [&] {
            GaussianSeries s(order);
            GaussianRational c(Rational(1));
            s.set_coeff(0, c);
            for (int n = 1; n <= order; ++n) {
                c *= (z - GaussianRational(lambda * Rational(n - 1))) / GaussianRational(Rational(n));
                s.set_coeff(n, c);
            }
            return s;
        });
    return *p;
}

// log_lambda(1+t) = ((1+t)^lambda - 1)/lambda, compositional inverse of
// e_lambda(t) on the t side: log_lambda(e_lambda(t)) = t.
inline RationalSeries deg_log_series(const Rational& lambda, int order) {
    require_deformation(lambda);
    auto p = rational_cache().get_or_build(cache_key("deg-log", {lambda.to_string()}, order), [&] {
        RationalSeries s(order);
        for (int n = 1; n <= order; ++n) s.set_coeff(n, gen_binomial(lambda, static_cast<unsigned>(n)) / lambda);
        return s;
    });
    return *p;
}

inline RationalSeries exp_series(const Rational& x, int order) {
    auto p = rational_cache().get_or_build(cache_key("exp", {x.to_string()}, order), [&] {
        RationalSeries s(order);
        Rational c = 1;
        s.set_coeff(0, c);
        for (int n = 1; n <= order; ++n) {
            c *= x / Rational(n);
            s.set_coeff(n, c);
        }
        return s;
    });
    return *p;
}

inline GaussianSeries exp_series_gaussian(const GaussianRational& z, int order) {
    auto p = gaussian_cache().get_or_build(cache_key("exp-g", {z.to_string()}, order), [&] {
        GaussianSeries s(order);
        GaussianRational c(Rational(1));
        s.set_coeff(0, c);
        for (int n = 1; n <= order; ++n) {
            c *= z / GaussianRational(Rational(n));
            s.set_coeff(n, c);
        }
        return s;
    });
    return *p;
}

inline RationalSeries log1p_series(int order) {
    auto p = rational_cache().get_or_build(cache_key("log1p", {}, order), [&] {
        RationalSeries s(order);
        for (int n = 1; n <= order; ++n)
            s.set_coeff(n, Rational(n % 2 == 1 ? 1 : -1, n));
        return s;
    });
    return *p;
}

// (1+t)^x for rational x.
inline RationalSeries binom_series(const Rational& x, int order) {
    auto p = rational_cache().get_or_build(cache_key("binom", {x.to_string()}, order), [&] {
        RationalSeries s(order);
        Rational c = 1;
        s.set_coeff(0, c);
        for (int n = 1; n <= order; ++n) {
            c *= (x - Rational(n - 1)) / Rational(n);
            s.set_coeff(n, c);
        }
        return s;
    });
    return *p;
}

// Polyexponential Ei_k(t) = sum_{n>=1} t^n / (n^k (n-1)!).  Negative and
// zero k are allowed; n^{-k} then multiplies.
inline RationalSeries polyexp_series(long long k, int order) {
    auto p = rational_cache().get_or_build(cache_key("polyexp", {std::to_string(k)}, order), [&] {
        RationalSeries s(order);
        Rational fact = 1;  // (n-1)!
        for (int n = 1; n <= order; ++n) {
            if (n >= 2) fact *= Rational(n - 1);
            s.set_coeff(n, pow(Rational(n), -k) / fact);
        }
        return s;
    });
    return *p;
}

// Modified degenerate polyexponential Ei_{k,lambda}(t) with (1)_{n,lambda}
// in place of the unit numerator.
inline RationalSeries deg_polyexp_series(long long k, const Rational& lambda, int order) {
    require_deformation(lambda);
    auto p = rational_cache().get_or_build(
        cache_key("deg-polyexp", {std::to_string(k), lambda.to_string()}, order), [&] {
            RationalSeries s(order);
            Rational fact = 1;     // (n-1)!
            Rational falling = 1;  // (1)_{n,lambda}
            for (int n = 1; n <= order; ++n) {
                if (n >= 2) {
                    fact *= Rational(n - 1);
                    falling *= Rational(1) - lambda * Rational(n - 1);
                }
                s.set_coeff(n, falling * pow(Rational(n), -k) / fact);
            }
            return s;
        });
    return *p;
}

// Ei_{k,lambda} evaluated at log_lambda(1+t).  Shared by the generating
// function of the poly families and by the coefficient audit, so memoized in
// its own right; the composition is the costly step.
inline RationalSeries deg_polyexp_log_series(long long k, const Rational& lambda, int order) {
    require_deformation(lambda);
    auto p = rational_cache().get_or_build(
        cache_key("deg-polyexp-log", {std::to_string(k), lambda.to_string()}, order), [&] {
            return deg_polyexp_series(k, lambda, order).compose(deg_log_series(lambda, order));
        });
    return *p;
}

// Degenerate cosine / sine: real and imaginary parts of e_lambda^{iy}(t).
inline RationalSeries cos_deg_series(const Rational& y, const Rational& lambda, int order) {
    return real_part(deg_exp_series_gaussian(GaussianRational(Rational(0), y), lambda, order));
}

inline RationalSeries sin_deg_series(const Rational& y, const Rational& lambda, int order) {
    return imag_part(deg_exp_series_gaussian(GaussianRational(Rational(0), y), lambda, order));
}

// Classical cos(qt), sin(qt) through the same projection route.
inline RationalSeries cos_series(const Rational& q, int order) {
    return real_part(exp_series_gaussian(GaussianRational(Rational(0), q), order));
}

inline RationalSeries sin_series(const Rational& q, int order) {
    return imag_part(exp_series_gaussian(GaussianRational(Rational(0), q), order));
}

// Degenerate Stirling numbers of the first kind:
// (1/k!) (log_lambda(1+t))^k = sum_{n>=k} S1_lambda(n,k) t^n/n!.
inline RationalSeries stirling1_deg_series(unsigned k, const Rational& lambda, int order) {
    require_deformation(lambda);
    auto p = rational_cache().get_or_build(
        cache_key("stirling1-deg", {std::to_string(k), lambda.to_string()}, order), [&] {
            return deg_log_series(lambda, order).pow(k) * Rational(BigInt(1), factorial(k));
        });
    return *p;
}

inline Rational stirling1_deg(unsigned n, unsigned k, const Rational& lambda) {
    if (k > n) return 0;
    return stirling1_deg_series(k, lambda, static_cast<int>(n)).egf_coeff(static_cast<int>(n));
}

// Degenerate Stirling numbers of the second kind:
// (1/k!) (e_lambda(t) - 1)^k = sum_{n>=k} S2_lambda(n,k) t^n/n!.
inline RationalSeries stirling2_deg_series(unsigned k, const Rational& lambda, int order) {
    require_deformation(lambda);
    auto p = rational_cache().get_or_build(
        cache_key("stirling2-deg", {std::to_string(k), lambda.to_string()}, order), [&] {
            RationalSeries base = deg_exp_series(Rational(1), lambda, order) - RationalSeries::one(order);
            return base.pow(k) * Rational(BigInt(1), factorial(k));
        });
    return *p;
}

inline Rational stirling2_deg(unsigned n, unsigned k, const Rational& lambda) {
    if (k > n) return 0;
    return stirling2_deg_series(k, lambda, static_cast<int>(n)).egf_coeff(static_cast<int>(n));
}

// Degenerate Stirling polynomials of the second kind: the extra factor
// e_lambda^x(t) shifts by x.
inline RationalSeries stirling2_deg_poly_series(unsigned k, const Rational& x,
                                                const Rational& lambda, int order) {
    return stirling2_deg_series(k, lambda, order) * deg_exp_series(x, lambda, order);
}

inline Rational stirling2_deg_poly(unsigned n, unsigned k, const Rational& x,
                                   const Rational& lambda) {
    if (k > n) return 0;
    return stirling2_deg_poly_series(k, x, lambda, static_cast<int>(n)).egf_coeff(static_cast<int>(n));
}

// Degenerate Bernoulli polynomials of the second kind:
// t/log_lambda(1+t) * (1+t)^x.  The log factor starts at t, so the quotient
// needs one extra order of the log before the shift.
inline RationalSeries bernoulli2_series(const Rational& x, const Rational& lambda, int order) {
    require_deformation(lambda);
    auto p = rational_cache().get_or_build(
        cache_key("bernoulli2", {x.to_string(), lambda.to_string()}, order), [&] {
            RationalSeries pre = deg_log_series(lambda, order + 1).shifted_down().reciprocal();
            return pre * binom_series(x, order);
        });
    return *p;
}

inline Rational bernoulli2_deg(unsigned n, const Rational& x, const Rational& lambda) {
    return bernoulli2_series(x, lambda, static_cast<int>(n)).egf_coeff(static_cast<int>(n));
}

// Classical counterparts, same shapes with exp/log in place of their
// deformed versions.
inline RationalSeries classical_stirling1_series(unsigned k, int order) {
    auto p = rational_cache().get_or_build(cache_key("c-stirling1", {std::to_string(k)}, order), [&] {
        return log1p_series(order).pow(k) * Rational(BigInt(1), factorial(k));
    });
    return *p;
}

inline Rational classical_stirling1(unsigned n, unsigned k) {
    if (k > n) return 0;
    return classical_stirling1_series(k, static_cast<int>(n)).egf_coeff(static_cast<int>(n));
}

inline RationalSeries classical_stirling2_series(unsigned k, int order) {
    auto p = rational_cache().get_or_build(cache_key("c-stirling2", {std::to_string(k)}, order), [&] {
        RationalSeries base = exp_series(Rational(1), order) - RationalSeries::one(order);
        return base.pow(k) * Rational(BigInt(1), factorial(k));
    });
    return *p;
}

inline Rational classical_stirling2(unsigned n, unsigned k) {
    if (k > n) return 0;
    return classical_stirling2_series(k, static_cast<int>(n)).egf_coeff(static_cast<int>(n));
}

inline RationalSeries classical_stirling2_poly_series(unsigned k, const Rational& x, int order) {
    return classical_stirling2_series(k, order) * exp_series(x, order);
}

inline Rational classical_stirling2_poly(unsigned n, unsigned k, const Rational& x) {
    if (k > n) return 0;
    return classical_stirling2_poly_series(k, x, static_cast<int>(n)).egf_coeff(static_cast<int>(n));
}

inline RationalSeries classical_bernoulli2_series(const Rational& x, int order) {
    auto p = rational_cache().get_or_build(cache_key("c-bernoulli2", {x.to_string()}, order), [&] {
        RationalSeries pre = log1p_series(order + 1).shifted_down().reciprocal();
        return pre * binom_series(x, order);
    });
    return *p;
}

inline Rational classical_bernoulli2(unsigned n, const Rational& x) {
    return classical_bernoulli2_series(x, static_cast<int>(n)).egf_coeff(static_cast<int>(n));
}

}  // namespace dpfg
