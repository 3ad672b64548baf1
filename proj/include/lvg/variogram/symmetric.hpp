#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "../config.hpp"
#include "../specfun/gamma.hpp"
#include "../specfun/hypergeometric.hpp"
#include "../specfun/levin.hpp"
#include "../specfun/multiprecision.hpp"
#include "types.hpp"

namespace lvg {

inline double gamma_st(Lag lag) {
    return std::ldexp(binomial(lag.s + lag.t, lag.s) * std::numbers::pi, -2 * static_cast<int>(lag.s + lag.t));
}

inline double l_st(Lag lag) {
    const double n = lag.s + lag.t;
    return -2 * euler_gamma() - digamma((n + 1) / 2) - digamma(n / 2 + 1);
}

inline double b_ss_closed(unsigned s) { return digamma(s + 1.0) - digamma(s + 0.5); }

// 4F3 family obtained from F4[(s+t+1)/2, (s+t)/2+1; s+1, t+1; x, x] by the
// equal-argument reduction; zero-balanced for every lag
inline ZeroBalanced4F3 symmetric_4f3_params(Lag lag) {
    const double n = lag.s + lag.t;
    return {{(n + 1) / 2, n / 2 + 1, n / 2 + 1, (n + 1) / 2}, {lag.s + 1.0, lag.t + 1.0, n + 1}};
}

namespace detail {

inline SeriesValue<double> to_series(const AcceleratedSum<wide_real>& r, const EvalConfig& cfg, const char* who) {
    if (!r.converged && cfg.throw_on_nonconvergence)
        throw error(errc::max_terms_exceeded,
                    std::string(who) + ": accelerated estimates did not settle within " +
                        std::to_string(r.terms) + " terms");
    return {static_cast<double>(r.value), r.terms, static_cast<double>(r.change), r.converged};
}

inline std::size_t levin_cap(const EvalConfig& cfg) {
    // beyond ~120 points the W table eats the working precision
    return std::min<std::size_t>(cfg.max_acceleration_terms, 120);
}

} // namespace detail

// B_st = sum_{k>=1} 4^k (s+1/2)_k (t+1/2)_k / (k (s+t+1)_{2k})
//        * 3F2[(s+t)/2, (s+t+1)/2, -k; s+1/2, t+1/2; 1]
inline SeriesValue<double> b_st(Lag lag, const EvalConfig& cfg = {}) {
    using R = wide_real;
    const R s = lag.s, t = lag.t, h = R(1) / 2;
    R P = 1;
    auto gen = [&](std::size_t k) {
        const R kk = R(static_cast<unsigned>(k));
        P *= 4 * (s + h + kk - 1) * (t + h + kk - 1) / ((s + t + 2 * kk - 1) * (s + t + 2 * kk));
        if (k > 1) P *= (kk - 1) / kk;
        const R F = hyp3f2_terminating<R>((s + t) / 2, (s + t + 1) / 2, static_cast<unsigned>(k), s + h, t + h);
        return std::pair<R, R>{P * F, P};
    };
    return detail::to_series(levin_prefactor_sum<R>(gen, cfg.tol, 12, detail::levin_cap(cfg)), cfg, "b_st");
}

// Same constant from the transformed representation
//   sum_{k>=1} (s+1/2)_k ((t-s+1)/2)_k / (k ((s+t+1)/2)_k ((s+t)/2+1)_k)
//        * 3F2[(s+t)/2, (s-t)/2, -k; s+1/2, (s-t+1)/2 - k; 1].
// For s > t with s - t odd the lower parameter (s-t+1)/2 - k is a nonpositive
// integer reached inside the finite sum, so those lags raise PoleInTerm.
// For odd t - s the 3F2 factor decays like k^(-1/2), which goes into the
// remainder estimate so that the Levin model stays in integer powers of 1/k.
inline SeriesValue<double> b_st_transformed(Lag lag, const EvalConfig& cfg = {}) {
    if (lag.s > lag.t && (lag.s - lag.t) % 2 == 1)
        throw error(errc::pole_in_term, "transformed B series has a pole for s > t with s - t odd (s=" +
                                            std::to_string(lag.s) + ", t=" + std::to_string(lag.t) + ")");
    using R = wide_real;
    const R s = lag.s, t = lag.t, h = R(1) / 2;
    const R c1 = (t - s + 1) / 2, d1 = (s + t + 1) / 2, d2 = (s + t) / 2 + 1;
    const bool odd = (lag.t - lag.s) % 2 == 1;
    R P = 1;
    auto gen = [&](std::size_t k) {
        const R kk = R(static_cast<unsigned>(k));
        P *= (s + h + kk - 1) * (c1 + kk - 1) / ((d1 + kk - 1) * (d2 + kk - 1));
        if (k > 1) P *= (kk - 1) / kk;
        const R F = hyp3f2_terminating<R>((s + t) / 2, (s - t) / 2, static_cast<unsigned>(k), s + h,
                                          (s - t + 1) / 2 - kk);
        return std::pair<R, R>{P * F, odd ? R(P / sqrt(kk)) : P};
    };
    return detail::to_series(levin_prefactor_sum<R>(gen, cfg.tol, 12, detail::levin_cap(cfg)), cfg,
                             "b_st_transformed");
}

// B_st = B_ts; routes pole lags of the transformed series through the mirror lag
inline SeriesValue<double> b_st_transformed_ordered(Lag lag, const EvalConfig& cfg = {}) {
    return b_st_transformed({std::min(lag.s, lag.t), std::max(lag.s, lag.t)}, cfg);
}

inline SymmetricExpansionTerms symmetric_expansion_terms(Lag lag, const EvalConfig& cfg = {}) {
    return {gamma_st(lag), l_st(lag), b_st(lag, cfg).value};
}

// leading behaviour of the zero-balanced 4F3 at 1 - theta
inline double zero_balanced_4f3_near_unit(Lag lag, double theta, const EvalConfig& cfg = {}) {
    detail::require(theta > 0 && theta < 1, errc::domain, "theta must lie in (0,1)");
    const auto e = symmetric_expansion_terms(lag, cfg);
    return (e.l_st + e.b_st - std::log(theta)) / e.gamma_st;
}

inline double variogram_diagonal(unsigned s) {
    double sum = 0;
    for (unsigned k = s; k-- > 0;) sum += 1.0 / (2.0 * k + 1.0);
    return 4 / std::numbers::pi * sum;
}

// nu_st(1/4, 1/4) = (ln 4 + 2 H_{s+t} - B_st) / pi
inline VariogramResult variogram_symmetric(Lag lag, const EvalConfig& cfg = {}) {
    VariogramResult r;
    r.method = Method::SymmetricClosed;
    const double pi = std::numbers::pi;
    const double h = harmonic(lag.s + lag.t);

    EvalConfig soft = cfg;
    soft.throw_on_nonconvergence = false;
    SeriesValue<double> B = b_st(lag, soft);
    r.diagnostics.push_back({"b_st", B});

    SeriesValue<double> Bt{};
    bool have_t = false;
    try {
        Bt = b_st_transformed_ordered(lag, soft);
        have_t = true;
        r.diagnostics.push_back({"b_st_transformed", Bt});
    } catch (const error& e) {
        r.notes.push_back(std::string("transformed B skipped: ") + e.what());
    }

    double b_used = B.value;
    double b_err = B.tail_estimate;
    if (!B.converged) {
        if (have_t && Bt.converged) {
            r.notes.push_back("b_st did not settle; using the transformed series");
            b_used = Bt.value;
            b_err = Bt.tail_estimate;
        } else if (cfg.throw_on_nonconvergence) {
            throw error(errc::max_terms_exceeded, "neither B series settled for the symmetric path");
        }
    }
    if (have_t && Bt.converged && B.converged) {
        const double diff = std::abs(B.value - Bt.value);
        b_err = std::max(b_err, diff);
        if (diff > 1e-9 * std::max(1.0, std::abs(B.value)))
            r.notes.push_back("B series disagree by " + std::to_string(diff));
    }

    r.value = (std::log(4.0) + 2 * h - b_used) / pi;
    r.est_error = b_err / pi + 8 * std::numeric_limits<double>::epsilon() * (std::log(4.0) + 2 * h) / pi;

    if (lag.s == lag.t) {
        const double diag = variogram_diagonal(lag.s);
        const double diff = std::abs(diag - r.value);
        if (diff > 1e-10) r.notes.push_back("diagonal closed form differs by " + std::to_string(diff));
        if (!B.converged && !(have_t && Bt.converged)) {
            r.notes.push_back("fell back to the diagonal closed form");
            r.value = diag;
            r.est_error = 4 * std::numeric_limits<double>::epsilon() * diag;
            r.method = Method::DiagonalClosed;
        }
    }
    detail::clamp_nonnegative(r);
    return r;
}

} // namespace lvg
