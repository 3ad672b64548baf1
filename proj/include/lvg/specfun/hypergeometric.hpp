#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "../config.hpp"
#include "summation.hpp"

namespace lvg {

namespace detail {

template <class Real>
bool hits_nonpositive_integer(const Real& v, long upto) {
    // does (v)_m vanish for some m <= upto
    using std::floor;
    return v <= 0 && v == floor(v) && -v < Real(upto);
}

} // namespace detail

// Finite sum  sum_{m=0}^{k} (a1)_m (a2)_m (-k)_m / ((b1)_m (b2)_m m!).
// Real may be a multiprecision type.
template <class Real>
Real hyp3f2_terminating(const Real& a1, const Real& a2, unsigned k, const Real& b1, const Real& b2) {
    compensated_sum<Real> s(Real(1));
    Real term = 1;
    for (unsigned m = 0; m < k; ++m) {
        const Real num = (a1 + m) * (a2 + m) * (Real(m) - Real(k));
        if (num == 0) break;
        const Real den = (b1 + m) * (b2 + m) * Real(m + 1);
        if (den == 0) throw error(errc::pole_in_term, "3F2 lower parameter vanishes inside the finite sum");
        term = term * num / den;
        s += term;
    }
    return s.value();
}

// Generic pFq power series for |z| < 1 (or any z when p <= q).
template <class Real = double>
SeriesValue<Real> hyp_pfq_series(const std::vector<Real>& a, const std::vector<Real>& b, Real z,
                                 const EvalConfig& cfg = {}) {
    using std::abs;
    const bool power_growth = a.size() > b.size() + 1;
    const bool unit_radius = a.size() == b.size() + 1;
    detail::require(!power_growth || z == 0, errc::out_of_region, "pFq with p > q+1 diverges");
    detail::require(!unit_radius || abs(z) < 1, errc::out_of_region, "pFq needs |z| < 1");
    const Real tol = Real(cfg.tol);
    const Real rho_inf = unit_radius ? abs(z) : Real(0);

    compensated_sum<Real> s(Real(1));
    Real term = 1;
    Real prev = 1;
    SeriesValue<Real> out;
    out.terms_used = 1;
    for (std::size_t n = 0;; ++n) {
        Real num = z, den = Real(n + 1);
        for (const Real& ai : a) num *= ai + Real(n);
        for (const Real& bi : b) den *= bi + Real(n);
        if (num == 0) {
            out.converged = true;
            break;
        }
        if (den == 0) throw error(errc::pole_in_term, "pFq lower parameter is a nonpositive integer");
        prev = term;
        term = term * num / den;
        s += term;
        ++out.terms_used;

        const Real sv = abs(s.value());
        if (abs(term) <= tol * sv && abs(prev) <= tol * sv) {
            Real rho = prev != 0 ? abs(term / prev) : rho_inf;
            rho = std::max(rho, rho_inf);
            const Real tail = rho < 1 ? abs(term) * rho / (1 - rho) : std::numeric_limits<Real>::infinity();
            if (tail <= tol * std::max(Real(1), sv)) {
                out.tail_estimate = tail;
                out.converged = true;
                break;
            }
        }
        if (out.terms_used >= cfg.max_terms) {
            Real rho = std::max(prev != 0 ? abs(term / prev) : rho_inf, rho_inf);
            out.tail_estimate = rho < 1 ? abs(term) * rho / (1 - rho) : std::numeric_limits<Real>::infinity();
            if (cfg.throw_on_nonconvergence)
                throw error(errc::max_terms_exceeded, "pFq series hit the term cap");
            break;
        }
    }
    out.value = s.value();
    return out;
}

struct ZeroBalanced4F3 {
    std::array<double, 4> a{};
    std::array<double, 3> b{};

    double balance() const { return (a[0] + a[1] + a[2] + a[3]) - (b[0] + b[1] + b[2]); }
    bool is_zero_balanced() const { return std::abs(balance()) <= 1e-12; }
};

template <class Real = double>
SeriesValue<Real> hyp4f3_series(const ZeroBalanced4F3& p, Real z, const EvalConfig& cfg = {}) {
    detail::require(p.is_zero_balanced(), errc::domain,
                    "4F3 parameters are not zero-balanced (excess " + std::to_string(p.balance()) + ")");
    detail::require(std::abs(z) < 1, errc::out_of_region, "4F3 needs |z| < 1");
    std::vector<Real> a(p.a.begin(), p.a.end()), b(p.b.begin(), p.b.end());
    return hyp_pfq_series<Real>(a, b, z, cfg);
}

// F4[alpha, beta; g1, g2; x, x] collapsed to a single 4F3 at 4x
template <class Real = double>
SeriesValue<Real> f4_equal_args_reduction(double alpha, double beta, double g1, double g2, double x,
                                          const EvalConfig& cfg = {}) {
    const double g = g1 + g2;
    detail::require(std::abs(4 * x) < 1, errc::out_of_region, "equal-argument reduction needs |4x| < 1");
    std::vector<Real> a{Real(alpha), Real(beta), Real(g / 2), Real((g - 1) / 2)};
    std::vector<Real> b{Real(g1), Real(g2), Real(g - 1)};
    return hyp_pfq_series<Real>(a, b, Real(4 * x), cfg);
}

} // namespace lvg
