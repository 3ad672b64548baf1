#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "../config.hpp"
#include "../specfun/summation.hpp"

namespace lvg {

struct QuadValue {
    double value = 0;
    double error = 0;
    int subdivisions = 0;
};

namespace detail {

struct gk_panel {
    double a, b, value, error;
    bool operator<(const gk_panel& o) const { return error < o.error; }
};

template <class F>
gk_panel gk21_panel(F& f, double a, double b) {
    double err = 0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(f, a, b, 0, 0.0, &err);
    return {a, b, v, err};
}

} // namespace detail

// Globally adaptive 21-point Gauss-Kronrod: bisect the panel with the largest
// error estimate until the total meets max(abs_tol, rel_tol*|I|).
// The result is summed over panels ordered by left endpoint.
template <class F>
QuadValue adaptive_gk(F&& f, double a, double b, double abs_tol, double rel_tol, int max_subdivisions) {
    if (a == b) return {};
    std::priority_queue<detail::gk_panel> heap;
    heap.push(detail::gk21_panel(f, a, b));
    double total = heap.top().value, err = heap.top().error;
    int subdiv = 0;
    while (err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (subdiv >= max_subdivisions) {
            throw error(errc::tolerance_not_reached,
                        "adaptive quadrature on [" + std::to_string(a) + ", " + std::to_string(b) +
                            "] stalled at error " + std::to_string(err));
        }
        const auto p = heap.top();
        heap.pop();
        const double m = 0.5 * (p.a + p.b);
        if (!(m > p.a && m < p.b)) {
            throw error(errc::tolerance_not_reached, "adaptive quadrature ran out of resolution");
        }
        const auto l = detail::gk21_panel(f, p.a, m);
        const auto r = detail::gk21_panel(f, m, p.b);
        total += l.value + r.value - p.value;
        err += l.error + r.error - p.error;
        heap.push(l);
        heap.push(r);
        ++subdiv;
    }
    std::vector<detail::gk_panel> panels;
    panels.reserve(heap.size());
    double e = 0;
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
    compensated_sum<double> s;
    for (const auto& p : panels) {
        s += p.value;
        e += p.error;
    }
    return {s.value(), e, subdiv};
}

} // namespace lvg
