#pragma once

// Exact rational arithmetic over arbitrary-precision integers.
// Every value is kept in canonical form at all times: denominator > 0,
// gcd(|num|, den) == 1, and zero is stored as 0/1.  All public operations
// preserve that invariant, so equality is plain field comparison.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dpfg {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt l = a.num_ * b.den_;
        BigInt r = b.num_ * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational inverse() const {
        if (num_ == 0) throw std::domain_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    // Canonical text form: "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    // Accepts "p" or "p/q" with an optional leading minus; input need not be
    // canonical ("2/4" parses to 1/2) but the defaulting rules above make
    // parse(to_string(x)) == x exact.
    static Rational parse(std::string_view text) {
        auto bad = [&] { throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'"); };
        if (text.empty()) bad();
        std::string_view num_part = text;
        std::string_view den_part;
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            num_part = text.substr(0, slash);
            den_part = text.substr(slash + 1);
            if (den_part.empty()) bad();
        }
        bool neg = false;
        if (!num_part.empty() && num_part.front() == '-') {
            neg = true;
            num_part.remove_prefix(1);
        }
        auto digits_only = [](std::string_view sv) {
            if (sv.empty()) return false;
            for (char c : sv)
                if (c < '0' || c > '9') return false;
            return true;
        };
        if (!digits_only(num_part)) bad();
        BigInt num{std::string(num_part)};
        if (neg) num = -num;
        if (den_part.empty()) return Rational(std::move(num));
        if (!digits_only(den_part)) bad();
        BigInt den{std::string(den_part)};
        if (den == 0) bad();
        return Rational(std::move(num), std::move(den));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Exact integer power; negative exponents invert (so the base must be nonzero).
inline Rational pow(const Rational& base, long long e) {
    if (e < 0) return pow(base.inverse(), -e);
    Rational acc = 1;
    Rational b = base;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (unsigned i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;
    }
    return c;
}

// Generalized binomial coefficient a(a-1)...(a-n+1)/n! for rational a.
inline Rational gen_binomial(const Rational& a, unsigned n) {
    Rational p = 1;
    for (unsigned i = 0; i < n; ++i) p *= a - Rational(static_cast<long long>(i));
    return p / Rational(factorial(n));
}

}  // namespace dpfg
