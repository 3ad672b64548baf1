#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <limits>
#include <string>

#include "../config.hpp"
#include "summation.hpp"

namespace lvg {

struct F4Params {
    double alpha = 0;
    double beta = 0;
    double gamma1 = 1;
    double gamma2 = 1;
    double x = 0;
    double y = 0;
};

// Series value carried as mantissa * 2^exponent so that huge F4 values
// (tiny a^s b^t prefactors in front) survive until the caller rescales.
template <class Real = double>
struct ScaledSeries {
    Real mantissa{};
    long exponent = 0;
    std::size_t terms_used = 0;
    Real tail_mantissa{};
    bool converged = false;

    Real value() const { return std::ldexp(mantissa, static_cast<int>(exponent)); }
    Real tail() const { return std::ldexp(tail_mantissa, static_cast<int>(exponent)); }
};

namespace detail {

inline bool is_nonpositive_integer(double v) { return v <= 0 && v == std::floor(v); }

// Sums sum_{j,k} t(j,k) by anti-diagonals j+k = n. The kernel supplies the two
// neighbour ratios t(j+1,k)/t(j,k) and t(j,k+1)/t(j,k). With `window` set the
// terms of each diagonal are assumed unimodal in j and only the band above
// eps * (diagonal max) is carried forward.
template <class Real, class Kernel>
ScaledSeries<Real> sum_anti_diagonals(const Kernel& ker, Real rho_inf, bool window,
                                      const EvalConfig& cfg) {
    using std::abs;
    const Real tol = Real(cfg.tol);
    const Real eps = tol * Real(1e-3);

    std::deque<Real> d{Real(1)};
    long jlo = 0;
    long e = 0;
    compensated_sum<Real> S;
    Real d_prev = 0;
    bool have_prev = false;
    ScaledSeries<Real> out;

    for (long n = 0;; ++n) {
        compensated_sum<Real> dn_acc;
        for (Real v : d) dn_acc += v;
        const Real dn = dn_acc.value();
        S += dn;
        out.terms_used += d.size();

        const Real s_abs = abs(S.value());
        const Real unit = std::ldexp(Real(1), static_cast<int>(-e));
        if (have_prev && abs(dn) <= tol * s_abs && abs(d_prev) <= tol * s_abs) {
            Real tail = 0;
            if (dn != 0) {
                Real rho = d_prev != 0 ? abs(dn / d_prev) : rho_inf;
                rho = std::max(rho, rho_inf);
                tail = rho < 1 ? abs(dn) * rho / (1 - rho) : std::numeric_limits<Real>::infinity();
            }
            if (tail <= tol * std::max(unit, s_abs)) {
                out.tail_mantissa = tail;
                out.converged = true;
                break;
            }
        }
        if (out.terms_used >= cfg.max_terms) {
            Real rho = (have_prev && d_prev != 0) ? std::max(abs(dn / d_prev), rho_inf) : rho_inf;
            out.tail_mantissa = rho < 1 ? abs(dn) * rho / (1 - rho) : std::numeric_limits<Real>::infinity();
            out.converged = false;
            break;
        }
        d_prev = dn;
        have_prev = true;

        // advance to diagonal n+1
        const long jhi = jlo + static_cast<long>(d.size()) - 1;
        Real top = d.back() * ker.step_j(jhi, n - jhi);
        for (std::size_t i = 0; i < d.size(); ++i) {
            const long j = jlo + static_cast<long>(i);
            d[i] *= ker.step_k(j, n - j);
        }
        d.push_back(top);
        const long m = n + 1;

        if (window) {
            auto argmax = [&] {
                std::size_t im = 0;
                for (std::size_t i = 1; i < d.size(); ++i)
                    if (abs(d[i]) > abs(d[im])) im = i;
                return im;
            };
            Real M = abs(d[argmax()]);
            // grow downward (more weight on y)
            while (jlo > 0 && abs(d.front()) > eps * M) {
                const long j = jlo, k = m - jlo;
                const Real sj = ker.step_j(j - 1, k);
                if (sj == 0) break;
                d.push_front(d.front() * ker.step_k(j - 1, k) / sj);
                --jlo;
                M = std::max(M, abs(d.front()));
            }
            // grow upward when an earlier trim left room below j = m
            while (jlo + static_cast<long>(d.size()) - 1 < m && abs(d.back()) > eps * M) {
                const long j = jlo + static_cast<long>(d.size()) - 1, k = m - j;
                const Real sk = ker.step_k(j, k - 1);
                if (sk == 0) break;
                d.push_back(d.back() * ker.step_j(j, k - 1) / sk);
                M = std::max(M, abs(d.back()));
            }
            const std::size_t im = argmax();
            std::size_t front_drop = 0;
            while (front_drop < im && abs(d[front_drop]) < eps * M) ++front_drop;
            std::size_t back_keep = d.size();
            while (back_keep - 1 > im && abs(d[back_keep - 1]) < eps * M) --back_keep;
            d.erase(d.begin() + static_cast<long>(back_keep), d.end());
            d.erase(d.begin(), d.begin() + static_cast<long>(front_drop));
            jlo += static_cast<long>(front_drop);
        }

        Real M = 0;
        for (Real v : d) M = std::max(M, abs(v));
        if (M != 0 && (M > std::ldexp(Real(1), 400) || M < std::ldexp(Real(1), -400))) {
            const int f = std::ilogb(M);
            for (Real& v : d) v = std::ldexp(v, -f);
            S.scale(std::ldexp(Real(1), -f));
            d_prev = std::ldexp(d_prev, -f);
            e += f;
        }
    }
    out.mantissa = S.value();
    out.exponent = e;
    return out;
}

template <class Real>
struct f4_kernel {
    Real alpha, beta, g1, g2, x, y;
    Real common(long j, long k) const { return (alpha + Real(j + k)) * (beta + Real(j + k)); }
    Real step_j(long j, long k) const { return common(j, k) * x / ((g1 + Real(j)) * Real(j + 1)); }
    Real step_k(long j, long k) const { return common(j, k) * y / ((g2 + Real(k)) * Real(k + 1)); }
};

template <class Real>
struct f2_kernel {
    Real alpha, b1, b2, g1, g2, x, y;
    Real step_j(long j, long k) const {
        return (alpha + Real(j + k)) * (b1 + Real(j)) * x / ((g1 + Real(j)) * Real(j + 1));
    }
    Real step_k(long j, long k) const {
        return (alpha + Real(j + k)) * (b2 + Real(k)) * y / ((g2 + Real(k)) * Real(k + 1));
    }
};

template <class Real>
SeriesValue<Real> finish(const ScaledSeries<Real>& r, const EvalConfig& cfg, const char* who) {
    if (!r.converged && cfg.throw_on_nonconvergence)
        throw error(errc::max_terms_exceeded,
                    std::string(who) + " hit the term cap (" + std::to_string(cfg.max_terms) + ")");
    return {r.value(), r.terms_used, r.tail(), r.converged};
}

} // namespace detail

template <class Real = double>
ScaledSeries<Real> appell_f4_scaled(const F4Params& p, const EvalConfig& cfg = {}) {
    detail::require(p.x >= 0 && p.y >= 0, errc::domain, "F4 arguments must be nonnegative");
    detail::require(std::sqrt(p.x) + std::sqrt(p.y) < 1, errc::out_of_region,
                    "F4 needs sqrt(x) + sqrt(y) < 1");
    detail::require(!detail::is_nonpositive_integer(p.gamma1) && !detail::is_nonpositive_integer(p.gamma2),
                    errc::pole_in_term, "F4 lower parameter is a nonpositive integer");
    const detail::f4_kernel<Real> ker{Real(p.alpha), Real(p.beta), Real(p.gamma1), Real(p.gamma2),
                                      Real(p.x), Real(p.y)};
    const Real r = std::sqrt(Real(p.x)) + std::sqrt(Real(p.y));
    const bool unimodal = p.alpha > 0 && p.beta > 0 && p.gamma1 > 0 && p.gamma2 > 0;
    auto res = detail::sum_anti_diagonals<Real>(ker, r * r, unimodal, cfg);
    if (!res.converged && cfg.throw_on_nonconvergence)
        throw error(errc::max_terms_exceeded, "appell_f4 hit the term cap");
    return res;
}

template <class Real = double>
SeriesValue<Real> appell_f4(const F4Params& p, const EvalConfig& cfg = {}) {
    EvalConfig c = cfg;
    c.throw_on_nonconvergence = false;
    return detail::finish(appell_f4_scaled<Real>(p, c), cfg, "appell_f4");
}

template <class Real = double>
SeriesValue<Real> appell_f2(double alpha, double beta1, double beta2, double gamma1, double gamma2, double x,
                            double y, const EvalConfig& cfg = {}) {
    detail::require(std::abs(x) + std::abs(y) < 1, errc::out_of_region, "F2 needs |x| + |y| < 1");
    detail::require(!detail::is_nonpositive_integer(gamma1) && !detail::is_nonpositive_integer(gamma2),
                    errc::pole_in_term, "F2 lower parameter is a nonpositive integer");
    const detail::f2_kernel<Real> ker{Real(alpha), Real(beta1), Real(beta2), Real(gamma1),
                                      Real(gamma2), Real(x), Real(y)};
    EvalConfig c = cfg;
    c.throw_on_nonconvergence = false;
    auto res = detail::sum_anti_diagonals<Real>(ker, Real(std::abs(x) + std::abs(y)), false, c);
    return detail::finish(res, cfg, "appell_f2");
}

} // namespace lvg
