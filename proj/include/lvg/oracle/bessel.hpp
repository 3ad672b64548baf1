#pragma once

#include <cmath>
#include <numbers>

#include "../config.hpp"

namespace lvg {

namespace detail {

// e^{-x} sum_k (x/2)^{2k+n} / (k! (n+k)!) with the running sum kept in range
inline double bessel_i_scaled_series(unsigned n, double x) {
    const double q = 0.25 * x * x;
    double term = 1, sum = 1;
    int scale = 0;
    for (unsigned k = 1; k < 100000; ++k) {
        term *= q / (double(k) * double(n + k));
        sum += term;
        if (sum > 1e250) {
            sum = std::ldexp(sum, -800);
            term = std::ldexp(term, -800);
            scale += 800;
        }
        if (term < 1e-17 * sum && double(k) > 0.5 * x) break;
    }
    const double logp = -x + n * std::log(0.5 * x) - std::lgamma(n + 1.0);
    return std::exp(logp + std::log(sum) + scale * std::numbers::ln2);
}

// Hankel expansion of e^{-x} I_n(x); converged flag false if terms turn upward first
inline double bessel_i_scaled_asymptotic(unsigned n, double x, bool& ok) {
    const double mu = 4.0 * n * n;
    double term = 1, sum = 1;
    ok = false;
    for (unsigned k = 1; k < 400; ++k) {
        const double next = -term * (mu - double(2 * k - 1) * double(2 * k - 1)) / (8.0 * k * x);
        if (std::abs(next) > std::abs(term) && k > 1) break;
        term = next;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) {
            ok = true;
            break;
        }
    }
    return sum / std::sqrt(2 * std::numbers::pi * x);
}

} // namespace detail

// e^{-x} I_n(x) for x >= 0
inline double modified_bessel_i_scaled(unsigned n, double x) {
    detail::require(x >= 0, errc::domain, "modified_bessel_i needs x >= 0");
    if (x == 0) return n == 0 ? 1.0 : 0.0;
    const double nn = double(n) * double(n);
    if (x > std::max(40.0, nn)) {
        bool ok = false;
        const double v = detail::bessel_i_scaled_asymptotic(n, x, ok);
        if (ok) return v;
    }
    return detail::bessel_i_scaled_series(n, x);
}

inline double modified_bessel_i(unsigned n, double x) {
    detail::require(x <= 700, errc::domain, "modified_bessel_i overflows beyond x = 700; use the scaled form");
    return modified_bessel_i_scaled(n, x) * std::exp(x);
}

} // namespace lvg
