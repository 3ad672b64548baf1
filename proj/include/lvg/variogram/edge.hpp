#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "../config.hpp"
#include "exact.hpp"
#include "types.hpp"

namespace lvg {

namespace detail {

// Gaussian elimination with partial pivoting, n <= 5
inline std::vector<double> solve_small(std::vector<std::vector<double>> A, std::vector<double> y) {
    const std::size_t n = y.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(A[r][c]) > std::abs(A[p][c])) p = r;
        std::swap(A[c], A[p]);
        std::swap(y[c], y[p]);
        require(A[c][c] != 0, errc::domain, "singular extrapolation system (repeated theta?)");
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = A[r][c] / A[c][c];
            for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
            y[r] -= f * y[c];
        }
    }
    std::vector<double> x(n);
    for (std::size_t c = n; c-- > 0;) {
        double v = y[c];
        for (std::size_t k = c + 1; k < n; ++k) v -= A[c][k] * x[k];
        x[c] = v / A[c][c];
    }
    return x;
}

// basis 1, theta, theta ln theta, theta^2, theta^2 ln theta (first n used)
inline double edge_basis(std::size_t i, double th) {
    switch (i) {
    case 0: return 1;
    case 1: return th;
    case 2: return th * std::log(th);
    case 3: return th * th;
    default: return th * th * std::log(th);
    }
}

// weights w with nu_0 = sum_i w_i nu(theta_i)
inline std::vector<double> edge_weights(const std::vector<double>& thetas) {
    const std::size_t n = thetas.size();
    std::vector<std::vector<double>> V(n, std::vector<double>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) V[r][c] = edge_basis(c, thetas[r]);
    // nu_0 = e0^T V^{-1} nu  ->  w solves V^T w = e0
    std::vector<std::vector<double>> VT(n, std::vector<double>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) VT[r][c] = V[c][r];
    std::vector<double> e0(n, 0.0);
    e0[0] = 1;
    return solve_small(VT, e0);
}

} // namespace detail

// Abel-limit evaluation on a + b = 1/2: the exact formula at coefficients
// shrunk by sqrt(1 - theta), extrapolated to theta -> 0 over the schedule.
inline VariogramResult variogram_edge(double a, Lag lag, const EvalConfig& cfg = {}) {
    detail::require(a > 0 && a < 0.5, errc::domain, "edge path needs 0 < a < 1/2");
    const double b = 0.5 - a;
    std::vector<double> sched = cfg.theta_schedule;
    std::sort(sched.begin(), sched.end());
    detail::require(sched.size() >= 3 && sched.size() <= 5, errc::domain, "theta schedule needs 3 to 5 points");
    detail::require(sched.front() > 0 && sched.back() < 0.25, errc::domain, "theta values must lie in (0, 1/4)");

    VariogramResult r;
    r.method = Method::EdgeAbel;
    EvalConfig soft = cfg;
    soft.throw_on_nonconvergence = false;

    std::map<double, VariogramResult> at;
    auto eval = [&](double th) -> const VariogramResult& {
        auto it = at.find(th);
        if (it != at.end()) return it->second;
        const double f = std::sqrt(1 - th);
        return at.emplace(th, detail::exact_unchecked(a * f, b * f, lag, soft)).first->second;
    };

    auto extrapolate = [&](const std::vector<double>& th, double& weighted_tail) {
        const auto w = detail::edge_weights(th);
        double v = 0;
        weighted_tail = 0;
        for (std::size_t i = 0; i < th.size(); ++i) {
            const auto& e = eval(th[i]);
            v += w[i] * e.value;
            weighted_tail += std::abs(w[i]) * e.est_error;
        }
        return v;
    };

    double tail_main = 0, tail_shift = 0;
    const double v0 = extrapolate(sched, tail_main);
    std::vector<double> shifted(sched);
    for (double& th : shifted) th *= 2;
    const double v1 = extrapolate(shifted, tail_shift);

    for (auto& [th, e] : at) {
        for (auto& d : e.diagnostics) {
            d.label += "@theta=" + std::to_string(th);
            r.diagnostics.push_back(d);
        }
    }
    if (!at.at(sched.front()).converged()) {
        if (cfg.throw_on_nonconvergence)
            throw error(errc::slow_convergence,
                        "F4 at theta=" + std::to_string(sched.front()) + " exhausted the term cap");
        r.notes.push_back("smallest theta did not converge");
    }
    r.value = v0;
    r.est_error = std::abs(v0 - v1) + tail_main;
    detail::clamp_nonnegative(r);
    return r;
}

} // namespace lvg
