#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/special_functions/expint.hpp>

#include "../config.hpp"
#include "../variogram/types.hpp"
#include "bessel.hpp"
#include "gauss_kronrod.hpp"

namespace lvg {

namespace detail {

constexpr double bessel_x_cap = 1e5;

// integrate g over [0, X] on geometrically growing panels
template <class G>
QuadValue integrate_half_line_panels(const G& g, double X, const QuadratureSettings& q) {
    QuadValue out;
    compensated_sum<double> s;
    double lo = 0, hi = std::min(1.0, X);
    while (lo < X) {
        const auto r = adaptive_gk(g, lo, hi, 0.1 * q.abs_tol, q.rel_tol, q.max_subdivisions);
        s += r.value;
        out.error += r.error;
        out.subdivisions += r.subdivisions;
        lo = hi;
        hi = std::min(2 * hi, X);
    }
    out.value = s.value();
    return out;
}

// bound on e^{-z} I_n(z): 1 near zero, 1.17/sqrt(2 pi z) beyond
inline double scaled_bessel_bound(double z) {
    if (z <= 0) return 1;
    return std::min(1.0, 1.17 / std::sqrt(2 * std::numbers::pi * z));
}

// Hankel coefficients a_k(n), k = 0..m
inline std::vector<double> hankel_coefficients(unsigned n, unsigned m) {
    std::vector<double> c(m + 1);
    c[0] = 1;
    const double mu = 4.0 * n * n;
    for (unsigned k = 1; k <= m; ++k) c[k] = c[k - 1] * (mu - double(2 * k - 1) * double(2 * k - 1)) / (8.0 * k);
    return c;
}

} // namespace detail

// integral_0^inf e^{-x} I_s(2ax) I_t(2bx) dx for |a| + |b| < 1/2
inline QuadValue bessel_laplace_i_st(const CoeffPair& c, Lag lag, const QuadratureSettings& q = {}) {
    const double aa = std::abs(c.a), bb = std::abs(c.b);
    const double delta = 1 - 2 * aa - 2 * bb;
    detail::require(delta > 0, errc::out_of_region, "single-term Bessel integral diverges at |a| + |b| = 1/2");
    if ((lag.s > 0 && aa == 0) || (lag.t > 0 && bb == 0)) return {};
    const double sign = ((c.a < 0 && lag.s % 2) ? -1.0 : 1.0) * ((c.b < 0 && lag.t % 2) ? -1.0 : 1.0);

    auto g = [&](double x) {
        return std::exp(-delta * x) * modified_bessel_i_scaled(lag.s, 2 * aa * x) *
               modified_bessel_i_scaled(lag.t, 2 * bb * x);
    };
    // tail beyond X is at most bound(X) e^{-delta X} / delta
    const double target = 0.1 * q.abs_tol;
    auto tail = [&](double X) {
        return detail::scaled_bessel_bound(2 * aa * X) * detail::scaled_bessel_bound(2 * bb * X) *
               std::exp(-delta * X) / delta;
    };
    double X = 8;
    while (tail(X) > target && X < detail::bessel_x_cap) X *= 1.25;
    if (tail(X) > target)
        throw error(errc::tolerance_not_reached, "Bessel-Laplace truncation point exceeds the cap");
    auto r = detail::integrate_half_line_panels(g, X, q);
    r.value *= sign;
    r.error += tail(X);
    return r;
}

// nu_st directly: integral of e^{-x}[I_0(2ax) I_0(2bx) - I_s(2ax) I_t(2bx)],
// whose integrand decays like x^{-2} even on a + b = 1/2. The part beyond X is
// taken from the product of the Hankel expansions.
inline QuadValue bessel_laplace_difference(const CoeffPair& c, Lag lag, const QuadratureSettings& q = {}) {
    detail::require(c.a >= 0 && c.b >= 0, errc::domain, "difference form needs a, b >= 0");
    const double a = c.a, b = c.b;
    double delta = 1 - 2 * a - 2 * b;
    detail::require(delta > -1e-14, errc::out_of_region, "difference form needs a + b <= 1/2");
    delta = std::max(delta, 0.0);
    if (lag.s == 0 && lag.t == 0) return {};
    if (a == 0 || b == 0) {
        detail::require(delta > 0, errc::out_of_region, "one-dimensional edge is not supported");
        const auto i00 = bessel_laplace_i_st(c, {0, 0}, q);
        const auto ist = bessel_laplace_i_st(c, lag, q);
        return {i00.value - ist.value, i00.error + ist.error, i00.subdivisions + ist.subdivisions};
    }

    auto g = [&](double x) {
        const double za = 2 * a * x, zb = 2 * b * x;
        const double p0 = modified_bessel_i_scaled(0, za) * modified_bessel_i_scaled(0, zb);
        const double p1 = modified_bessel_i_scaled(lag.s, za) * modified_bessel_i_scaled(lag.t, zb);
        return std::exp(-delta * x) * (p0 - p1);
    };

    // Hankel expansion needs 2 min(a,b) X well beyond max(s,t)^2
    const unsigned nmax = std::max(lag.s, lag.t);
    const double X = std::max(60.0, 4.0 * nmax * nmax) / (2 * std::min(a, b));
    if (X > detail::bessel_x_cap)
        throw error(errc::tolerance_not_reached, "difference-form truncation point exceeds the cap");

    constexpr unsigned M = 12;
    const auto h0 = detail::hankel_coefficients(0, M), hs = detail::hankel_coefficients(lag.s, M),
               ht = detail::hankel_coefficients(lag.t, M);
    const double pref = 1 / (4 * std::numbers::pi * std::sqrt(a * b));
    double tail = 0, last = 0;
    for (unsigned m = 1; m <= M; ++m) {
        double dm = 0;
        for (unsigned k = 0; k <= m; ++k) {
            const double w = std::pow(2 * a, -double(k)) * std::pow(2 * b, -double(m - k));
            dm += (h0[k] * h0[m - k] - hs[k] * ht[m - k]) * w;
        }
        if (m % 2) dm = -dm;
        // integral_X^inf e^{-delta x} x^{-m-1} dx
        const double moment =
            delta == 0 ? std::pow(X, -double(m)) / m
                       : std::pow(X, -double(m)) * boost::math::expint(static_cast<int>(m + 1), delta * X);
        last = pref * dm * moment;
        tail += last;
    }

    auto r = detail::integrate_half_line_panels(g, X, q);
    r.value += tail;
    r.error += std::abs(last);
    return r;
}

} // namespace lvg
