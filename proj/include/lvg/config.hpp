#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lvg {

enum class errc {
    out_of_region,
    max_terms_exceeded,
    tolerance_not_reached,
    slow_convergence,
    pole_in_term,
    domain,
    internal_consistency
};

inline const char* to_string(errc e) noexcept {
    switch (e) {
    case errc::out_of_region: return "OutOfRegion";
    case errc::max_terms_exceeded: return "MaxTermsExceeded";
    case errc::tolerance_not_reached: return "ToleranceNotReached";
    case errc::slow_convergence: return "SlowConvergence";
    case errc::pole_in_term: return "PoleInTerm";
    case errc::domain: return "DomainError";
    case errc::internal_consistency: return "InternalConsistency";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
    errc code() const noexcept { return code_; }

    // true for failures that mean "ran out of budget" rather than "bad input"
    bool is_convergence_failure() const noexcept {
        return code_ == errc::max_terms_exceeded || code_ == errc::tolerance_not_reached ||
               code_ == errc::slow_convergence;
    }

private:
    errc code_;
};

template <class Real = double>
struct SeriesValue {
    Real value{};
    std::size_t terms_used = 0;
    Real tail_estimate{};
    bool converged = false;
};

struct EvalConfig {
    double tol = 1e-14;
    std::size_t max_terms = 50'000'000;
    // edge path
    std::vector<double> theta_schedule{4e-3, 2e-3, 1e-3};
    double edge_epsilon = 1e-9;
    double symmetric_epsilon = 1e-14;
    // series acceleration for the B constants
    std::size_t max_acceleration_terms = 160;
    // false: hand back converged=false instead of throwing on exhausted budgets
    bool throw_on_nonconvergence = true;
};

struct QuadratureSettings {
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    int max_subdivisions = 2000;
    double origin_split_radius = 0.1;
};

namespace detail {

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) throw error(code, what);
}

} // namespace detail
} // namespace lvg
