#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/binomial.hpp>

#include "../config.hpp"

namespace lvg {

// (w)_n = w (w+1) ... (w+n-1); saturates to +-inf instead of wrapping through NaN
template <class Real>
Real pochhammer(Real w, unsigned n) {
    Real p = 1;
    for (unsigned i = 0; i < n; ++i) {
        p *= w + Real(i);
        if (p == 0) return p;
        if (!std::isfinite(static_cast<double>(p))) {
            return std::signbit(static_cast<double>(p)) ? -std::numeric_limits<Real>::infinity()
                                                        : std::numeric_limits<Real>::infinity();
        }
    }
    return p;
}

template <class Real>
Real digamma(Real x) {
    detail::require(x > 0, errc::domain, "digamma needs x > 0");
    using std::log;
    Real shift = 0;
    while (x < Real(10)) {
        shift += Real(1) / x;
        x += Real(1);
    }
    const Real r = Real(1) / (x * x);
    // Bernoulli tail through x^-12
    Real tail = r * (Real(1) / 12 -
                     r * (Real(1) / 120 -
                          r * (Real(1) / 252 -
                               r * (Real(1) / 240 - r * (Real(1) / 132 - r * (Real(691) / 32760))))));
    return log(x) - Real(1) / (2 * x) - tail - shift;
}

inline double euler_gamma() { return std::numbers::egamma; }

// exact integer arithmetic up to n = 60, Boost's beta-based formula above
inline double binomial(unsigned n, unsigned k) {
    detail::require(k <= n, errc::domain, "binomial needs k <= n");
    if (n <= 60) {
        unsigned kk = k < n - k ? k : n - k;
        unsigned __int128 c = 1;
        for (unsigned i = 0; i < kk; ++i) c = c * (n - i) / (i + 1);
        return static_cast<double>(c);
    }
    return boost::math::binomial_coefficient<double>(n, k);
}

template <class Real = double>
Real harmonic(unsigned n) {
    Real h = 0;
    for (unsigned k = n; k >= 1; --k) h += Real(1) / Real(k);
    return h;
}

} // namespace lvg
