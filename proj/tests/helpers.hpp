#pragma once

// Shared helpers for the unit tests: deterministic random scalar generators.
// mt19937_64 is fully specified by the standard, so sequences are stable
// across toolchains; bounds are applied by plain modulo on purpose.

#include "dpfg/gaussian.hpp"
#include "dpfg/rational.hpp"
#include "dpfg/series.hpp"

#include <random>
#include <vector>

namespace testutil {

inline long long bounded(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

// Nonzero denominator, numerator in [-9, 9].
inline dpfg::Rational random_rational(std::mt19937_64& rng) {
    return dpfg::Rational(bounded(rng, -9, 9), bounded(rng, 1, 9));
}

inline dpfg::Rational random_nonzero_rational(std::mt19937_64& rng) {
    for (;;) {
        dpfg::Rational r = random_rational(rng);
        if (!r.is_zero()) return r;
    }
}

inline dpfg::GaussianRational random_gaussian(std::mt19937_64& rng) {
    return dpfg::GaussianRational(random_rational(rng), random_rational(rng));
}

inline dpfg::RationalSeries random_series(std::mt19937_64& rng, int order) {
    dpfg::RationalSeries s(order);
    for (int n = 0; n <= order; ++n) s.set_coeff(n, random_rational(rng));
    return s;
}

// Random series with an invertible constant term.
inline dpfg::RationalSeries random_unit_series(std::mt19937_64& rng, int order) {
    dpfg::RationalSeries s = random_series(rng, order);
    s.set_coeff(0, random_nonzero_rational(rng));
    return s;
}

// Random series with zero constant term, suitable as a compose inner.
inline dpfg::RationalSeries random_compose_inner(std::mt19937_64& rng, int order) {
    dpfg::RationalSeries s = random_series(rng, order);
    s.set_coeff(0, dpfg::Rational(0));
    return s;
}

}  // namespace testutil
