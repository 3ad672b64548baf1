#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "../config.hpp"
#include "../variogram/types.hpp"
#include "gauss_kronrod.hpp"

namespace lvg {

namespace detail {

// (1 - cos sx cos ty) / (1 - 2a cos x - 2b cos y) written without cancellation
struct variogram_integrand {
    double a, b, gap;  // gap = 1 - 2a - 2b >= 0
    unsigned s, t;

    double operator()(double x, double y) const {
        const double ps = std::sin(0.5 * s * x), pt = std::sin(0.5 * t * y);
        const double ps2 = ps * ps, pt2 = pt * pt;
        const double num = 2 * ps2 + 2 * pt2 - 4 * ps2 * pt2;
        if (num == 0) return 0;
        const double hx = std::sin(0.5 * x), hy = std::sin(0.5 * y);
        const double den = gap + 4 * a * hx * hx + 4 * b * hy * hy;
        return num / den;
    }
};

template <class G>
QuadValue nested_rect(const G& g, double x0, double x1, double y0, double y1, const QuadratureSettings& q,
                      double& inner_err) {
    auto outer = [&](double x) {
        auto inner = [&](double y) { return g(x, y); };
        const auto r = adaptive_gk(inner, y0, y1, 0.05 * q.abs_tol, 0.05 * q.rel_tol, q.max_subdivisions);
        inner_err = std::max(inner_err, r.error);
        return r.value;
    };
    return adaptive_gk(outer, x0, x1, q.abs_tol, q.rel_tol, q.max_subdivisions);
}

} // namespace detail

// (1/pi^2) double integral over [0,pi]^2 of the variogram integrand. The
// corner [0,d]^2 is done in polar coordinates, where the integrand stays
// smooth even when the denominator vanishes at the origin.
inline QuadValue quadrature_variogram(const CoeffPair& c, Lag lag, const QuadratureSettings& q = {}) {
    detail::require(c.a >= 0 && c.b >= 0, errc::domain, "quadrature oracle needs a, b >= 0");
    double gap = 1 - 2 * c.a - 2 * c.b;
    detail::require(gap > -1e-14, errc::out_of_region, "quadrature oracle needs a + b <= 1/2");
    gap = std::max(gap, 0.0);
    detail::require(q.origin_split_radius > 0 && q.origin_split_radius <= std::numbers::pi / 4, errc::domain,
                    "origin_split_radius must lie in (0, pi/4]");
    if (lag.s == 0 && lag.t == 0) return {};

    const double pi = std::numbers::pi, d = q.origin_split_radius;
    const detail::variogram_integrand f{c.a, c.b, gap, lag.s, lag.t};
    double inner_err = 0;

    auto polar = [&](double phi, double r) {
        const double x = r * std::cos(phi), y = r * std::sin(phi);
        return f(x, y) * r;
    };
    auto sector = [&](double phi0, double phi1, bool lower) {
        auto outer = [&](double phi) {
            const double rmax = d / (lower ? std::cos(phi) : std::sin(phi));
            auto inner = [&](double r) { return polar(phi, r); };
            const auto r = adaptive_gk(inner, 0.0, rmax, 0.05 * q.abs_tol, 0.05 * q.rel_tol, q.max_subdivisions);
            inner_err = std::max(inner_err, r.error);
            return r.value;
        };
        return adaptive_gk(outer, phi0, phi1, q.abs_tol, q.rel_tol, q.max_subdivisions);
    };

    const auto p1 = sector(0.0, pi / 4, true);
    const auto p2 = sector(pi / 4, pi / 2, false);
    const auto r1 = detail::nested_rect(f, d, pi, 0.0, pi, q, inner_err);
    const auto r2 = detail::nested_rect(f, 0.0, d, d, pi, q, inner_err);

    compensated_sum<double> sum;
    sum += p1.value;
    sum += p2.value;
    sum += r1.value;
    sum += r2.value;
    QuadValue out;
    out.value = sum.value() / (pi * pi);
    out.error = (p1.error + p2.error + r1.error + r2.error + 2 * pi * inner_err) / (pi * pi);
    out.subdivisions = p1.subdivisions + p2.subdivisions + r1.subdivisions + r2.subdivisions;
    return out;
}

} // namespace lvg
