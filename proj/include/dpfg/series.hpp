#pragma once

// Truncated formal power series over an exact coefficient ring R (Rational
// or GaussianRational).  A Series of order N stores the ordinary (not
// factorial-scaled) coefficients c_0..c_N of f mod t^{N+1}; exponential-
// generating-function coefficients are produced on extraction.  Binary
// operations truncate to the smaller operand order, so results never claim
// more precision than their inputs support.

#include "dpfg/gaussian.hpp"
#include "dpfg/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace dpfg {

template <class R>
class Series {
public:
    explicit Series(int order) {
        if (order < 0) throw std::invalid_argument("Series: negative order");
        c_.assign(static_cast<std::size_t>(order) + 1, R(0));
    }
    explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("Series: empty coefficient list");
    }

    static Series zero(int order) { return Series(order); }
    static Series one(int order) {
        Series s(order);
        s.c_[0] = R(1);
        return s;
    }
    // The identity series t (zero when the order is 0).
    static Series t(int order) {
        Series s(order);
        if (order >= 1) s.c_[1] = R(1);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const R& coeff(int n) const {
        if (n < 0 || n > order())
            throw std::out_of_range("Series: coefficient index " + std::to_string(n) +
                                    " outside order " + std::to_string(order()));
        return c_[static_cast<std::size_t>(n)];
    }

    void set_coeff(int n, R v) {
        if (n < 0 || n > order())
            throw std::out_of_range("Series: coefficient index " + std::to_string(n) +
                                    " outside order " + std::to_string(order()));
        c_[static_cast<std::size_t>(n)] = std::move(v);
    }

    // n! * c_n, the coefficient in the exponential generating convention.
    R egf_coeff(int n) const { return coeff(n) * R(Rational(factorial(static_cast<unsigned>(n)))); }

    Series truncated(int new_order) const {
        if (new_order < 0 || new_order > order())
            throw std::out_of_range("Series: cannot truncate order " + std::to_string(order()) +
                                    " to " + std::to_string(new_order));
        return Series(std::vector<R>(c_.begin(), c_.begin() + new_order + 1));
    }

    friend Series operator+(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }
    friend Series operator*(const Series& a, const R& s) {
        Series r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend Series operator*(const R& s, const Series& a) { return a * s; }

    Series operator-() const {
        Series r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    // Multiplicative inverse mod t^{order+1}; the constant term must be a unit.
    Series reciprocal() const {
        if (c_[0] == R(0)) throw std::domain_error("Series: reciprocal needs a nonzero constant term");
        int n = order();
        Series r(n);
        R inv0 = R(1) / c_[0];
        r.c_[0] = inv0;
        for (int k = 1; k <= n; ++k) {
            R acc(0);
            for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
            r.c_[k] = -inv0 * acc;
        }
        return r;
    }

    // f.compose(g) = f(g(t)); requires g(0) = 0 so the result is well defined
    // degree by degree.  Horner evaluation, truncated to the smaller order.
    Series compose(const Series& inner) const {
        if (inner.c_[0] != R(0))
            throw std::invalid_argument("Series: compose needs inner constant term zero");
        int n = std::min(order(), inner.order());
        Series g = inner.truncated(n);
        Series r(n);
        r.c_[0] = c_[static_cast<std::size_t>(n)];
        for (int k = n - 1; k >= 0; --k) {
            r = r * g;
            r.c_[0] += c_[static_cast<std::size_t>(k)];
        }
        return r;
    }

    // Formal derivative; drops the order by one (an order-0 input stays
    // order 0 and becomes the zero series).
    Series derivative() const {
        int n = order();
        if (n == 0) return Series(0);
        Series r(n - 1);
        for (int k = 0; k < n; ++k) r.c_[k] = c_[k + 1] * R(static_cast<long long>(k) + 1);
        return r;
    }

    // Formal antiderivative with zero constant term; raises the order by one.
    Series integral() const {
        int n = order();
        Series r(n + 1);
        for (int k = 0; k <= n; ++k) r.c_[k + 1] = c_[k] / R(static_cast<long long>(k) + 1);
        return r;
    }

    // Multiplication by t; exact, so the order grows by one.
    Series shifted_up() const {
        int n = order();
        Series r(n + 1);
        for (int k = 0; k <= n; ++k) r.c_[k + 1] = c_[k];
        return r;
    }

    // Division by t; requires a vanishing constant term.
    Series shifted_down() const {
        if (c_[0] != R(0))
            throw std::domain_error("Series: shifted_down needs a zero constant term");
        int n = order();
        if (n == 0) return Series(0);
        Series r(n - 1);
        for (int k = 1; k <= n; ++k) r.c_[k - 1] = c_[k];
        return r;
    }

    Series pow(unsigned e) const {
        Series acc = one(order());
        Series b = *this;
        while (e > 0) {
            if (e & 1u) acc = acc * b;
            b = b * b;
            e >>= 1u;
        }
        return acc;
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

private:
    std::vector<R> c_;
};

using RationalSeries = Series<Rational>;
using GaussianSeries = Series<GaussianRational>;

// Ring projections.  Gaussian -> rational loses information and is therefore
// only available explicitly; the embedding the other way is lossless.
inline RationalSeries real_part(const GaussianSeries& s) {
    std::vector<Rational> c(static_cast<std::size_t>(s.order()) + 1);
    for (int n = 0; n <= s.order(); ++n) c[static_cast<std::size_t>(n)] = s.coeff(n).re();
    return RationalSeries(std::move(c));
}

inline RationalSeries imag_part(const GaussianSeries& s) {
    std::vector<Rational> c(static_cast<std::size_t>(s.order()) + 1);
    for (int n = 0; n <= s.order(); ++n) c[static_cast<std::size_t>(n)] = s.coeff(n).im();
    return RationalSeries(std::move(c));
}

inline GaussianSeries complexify(const RationalSeries& s) {
    std::vector<GaussianRational> c(static_cast<std::size_t>(s.order()) + 1);
    for (int n = 0; n <= s.order(); ++n) c[static_cast<std::size_t>(n)] = GaussianRational(s.coeff(n));
    return GaussianSeries(std::move(c));
}

}  // namespace dpfg
