#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace lvg {

// Sidi's W-algorithm for the model  S_n = S + omega_n * sum_i c_i t_n^i.
// With t_n = 1/n this is the Levin transformation driven by the supplied
// remainder estimates omega_n. All points are used; returns the top estimate.
template <class Real>
Real levin_w(const std::vector<Real>& partial, const std::vector<Real>& omega, const std::vector<Real>& t) {
    const std::size_t n = partial.size();
    std::vector<Real> M(n), N(n);
    for (std::size_t j = 0; j < n; ++j) {
        M[j] = partial[j] / omega[j];
        N[j] = Real(1) / omega[j];
    }
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t j = 0; j + k < n; ++j) {
            const Real dt = t[j + k] - t[j];
            M[j] = (M[j + 1] - M[j]) / dt;
            N[j] = (N[j + 1] - N[j]) / dt;
        }
    }
    return M[0] / N[0];
}

template <class Real>
struct AcceleratedSum {
    Real value{};
    Real change{};       // |L_N - L_{N-step}| at acceptance
    std::size_t terms = 0;
    bool converged = false;
};

// Accelerated sum of sum_{k>=1} term_k where term_k = prefactor_k * g(k) and the
// prefactor is a fixed-sign hypergeometric term. The remainder estimate
// k*prefactor_k stays smooth in k even when g(k) changes sign late.
// gen(k) is called for k = 1, 2, ... in order and returns {term_k, prefactor_k}.
// N grows in steps; accepted once three successive estimates agree to tol*max(1,|L|).
template <class Real, class Gen>
AcceleratedSum<Real> levin_prefactor_sum(Gen gen, double tol, std::size_t n_min, std::size_t n_max,
                                         std::size_t step = 5) {
    using std::abs;
    std::vector<Real> partial, omega, t;
    Real acc = 0;
    AcceleratedSum<Real> out;
    Real last{};
    bool have_last = false;
    int hits = 0;
    for (std::size_t k = 1; k <= n_max; ++k) {
        const auto [term, pref] = gen(k);
        acc += term;
        partial.push_back(acc);
        omega.push_back(Real(k) * pref);
        t.push_back(Real(1) / Real(k));
        if (k < n_min || (k - n_min) % step != 0) continue;
        const Real est = levin_w(partial, omega, t);
        if (have_last) {
            const Real ch = abs(est - last);
            const Real scale = abs(est) > 1 ? abs(est) : Real(1);
            hits = ch <= Real(tol) * scale ? hits + 1 : 0;
            out.value = est;
            out.change = hits >= 2 && out.change > ch ? out.change : ch;
            out.terms = k;
            if (hits >= 2) {
                out.converged = true;
                return out;
            }
        }
        last = est;
        have_last = true;
    }
    return out;
}

} // namespace lvg
