#pragma once

#include <cmath>
#include <limits>

#include "../config.hpp"
#include "../specfun/appell.hpp"
#include "../specfun/gamma.hpp"
#include "types.hpp"

namespace lvg {

namespace detail {

// |x|^n as mantissa * 2^exp without intermediate under/overflow
struct scaled_double {
    double m = 1;
    long e = 0;
    void normalize() {
        int k = 0;
        m = std::frexp(m, &k);
        e += k;
    }
    scaled_double& operator*=(const scaled_double& o) {
        m *= o.m;
        e += o.e;
        normalize();
        return *this;
    }
};

inline scaled_double scaled_pow(double x, unsigned n) {
    scaled_double base{std::abs(x), 0}, r{1, 0};
    base.normalize();
    while (n) {
        if (n & 1u) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

inline double scaled_to_double(double m, long e) {
    if (m == 0) return 0;
    if (e > std::numeric_limits<int>::max()) return std::copysign(std::numeric_limits<double>::infinity(), m);
    if (e < std::numeric_limits<int>::min()) return std::copysign(0.0, m);
    return std::ldexp(m, static_cast<int>(e));
}

inline F4Params i_st_params(double a, double b, Lag lag) {
    const double n = lag.s + lag.t;
    return {(n + 1) / 2, n / 2 + 1, lag.s + 1.0, lag.t + 1.0, 4 * a * a, 4 * b * b};
}

// binomial(s+t,s) a^s b^t F4[...] with no regime check
inline SeriesValue<double> i_st_unchecked(double a, double b, Lag lag, const EvalConfig& cfg) {
    if ((lag.s > 0 && a == 0) || (lag.t > 0 && b == 0)) return {0.0, 0, 0.0, true};
    EvalConfig soft = cfg;
    soft.throw_on_nonconvergence = false;
    const auto F = appell_f4_scaled<double>(i_st_params(a, b, lag), soft);
    scaled_double pref{binomial(lag.s + lag.t, lag.s), 0};
    pref.normalize();
    pref *= scaled_pow(a, lag.s);
    pref *= scaled_pow(b, lag.t);
    const double sign = ((a < 0 && lag.s % 2) ? -1.0 : 1.0) * ((b < 0 && lag.t % 2) ? -1.0 : 1.0);
    const long e = pref.e + F.exponent;
    SeriesValue<double> out;
    out.value = sign * scaled_to_double(pref.m * F.mantissa, e);
    out.tail_estimate = scaled_to_double(pref.m * F.tail_mantissa, e);
    out.terms_used = F.terms_used;
    out.converged = F.converged;
    if (!out.converged && cfg.throw_on_nonconvergence)
        throw error(errc::max_terms_exceeded, "F4 series for i_st hit the term cap");
    return out;
}

inline VariogramResult exact_unchecked(double a, double b, Lag lag, const EvalConfig& cfg) {
    VariogramResult r;
    r.method = Method::ExactF4;
    const auto i00 = i_st_unchecked(a, b, {0, 0}, cfg);
    const auto ist = (lag.s == 0 && lag.t == 0) ? i00 : i_st_unchecked(a, b, lag, cfg);
    r.diagnostics.push_back({"i_00", i00});
    r.diagnostics.push_back({"i_st", ist});
    r.value = i00.value - ist.value;
    r.est_error = i00.tail_estimate + ist.tail_estimate +
                  4 * std::numeric_limits<double>::epsilon() * (std::abs(i00.value) + std::abs(ist.value));
    return r;
}

inline void require_interior(double a, double b, const EvalConfig& cfg) {
    const double r = std::abs(a) + std::abs(b);
    require(r < 0.5 - cfg.edge_epsilon, errc::out_of_region,
            "exact path needs |a| + |b| < 1/2 - edge_epsilon (got " + std::to_string(r) + ")");
}

} // namespace detail

// integral of exp(-x) I_s(2ax) I_t(2bx) over (0, inf) in closed F4 form
inline SeriesValue<double> i_st(const CoeffPair& c, Lag lag, const EvalConfig& cfg = {}) {
    detail::require_interior(c.a, c.b, cfg);
    return detail::i_st_unchecked(c.a, c.b, lag, cfg);
}

inline VariogramResult variogram_exact(const CoeffPair& c, Lag lag, const EvalConfig& cfg = {}) {
    detail::require_interior(c.a, c.b, cfg);
    auto r = detail::exact_unchecked(c.a, c.b, lag, cfg);
    detail::clamp_nonnegative(r);
    return r;
}

} // namespace lvg
