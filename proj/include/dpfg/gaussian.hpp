#pragma once

// Gaussian rationals: pairs (re, im) over dpfg::Rational, i.e. Q(i).
// Canonical text form is "re+im*i" with both parts in canonical rational
// form, so "0+1*i" is the imaginary unit and pure reals print as "x+0*i".

#include "dpfg/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace dpfg {

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long long n) : re_(n) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    // |z|^2 = re^2 + im^2, zero iff z is zero.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_,
                                a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    GaussianRational inverse() const {
        Rational n2 = norm2();
        if (n2.is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
        return GaussianRational(re_ / n2, -im_ / n2);
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::string to_string() const {
        return re_.to_string() + "+" + im_.to_string() + "*i";
    }

    // Inverse of to_string: splits at the last '+', requires the "*i" suffix.
    static GaussianRational parse(std::string_view text) {
        auto bad = [&] {
            throw std::invalid_argument("GaussianRational: cannot parse '" + std::string(text) + "'");
        };
        auto plus = text.rfind('+');
        if (plus == std::string_view::npos || plus == 0) bad();
        std::string_view re_part = text.substr(0, plus);
        std::string_view im_part = text.substr(plus + 1);
        if (im_part.size() < 2 || im_part.substr(im_part.size() - 2) != "*i") bad();
        im_part.remove_suffix(2);
        return GaussianRational(Rational::parse(re_part), Rational::parse(im_part));
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        return os << z.to_string();
    }

private:
    Rational re_;
    Rational im_;
};

inline GaussianRational pow(const GaussianRational& base, long long e) {
    if (e < 0) return pow(base.inverse(), -e);
    GaussianRational acc(Rational(1));
    GaussianRational b = base;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

}  // namespace dpfg
