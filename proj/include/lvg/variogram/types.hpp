#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "../config.hpp"

namespace lvg {

struct Lag {
    unsigned s = 0;
    unsigned t = 0;
};

enum class Regime { Interior, Edge, SymmetricQuarter };

inline const char* to_string(Regime r) {
    switch (r) {
    case Regime::Interior: return "Interior";
    case Regime::Edge: return "Edge";
    case Regime::SymmetricQuarter: return "SymmetricQuarter";
    }
    return "?";
}

struct CoeffPair {
    double a = 0;
    double b = 0;
    Regime regime = Regime::Interior;

    static CoeffPair classify(double a, double b, const EvalConfig& cfg = {}) {
        detail::require(std::isfinite(a) && std::isfinite(b), errc::domain, "coefficients must be finite");
        CoeffPair c{a, b, Regime::Interior};
        const double r = std::abs(a) + std::abs(b);
        if (std::abs(a - 0.25) <= cfg.symmetric_epsilon && std::abs(b - 0.25) <= cfg.symmetric_epsilon)
            c.regime = Regime::SymmetricQuarter;
        else if (std::abs(r - 0.5) <= cfg.edge_epsilon)
            c.regime = Regime::Edge;
        else if (r > 0.5)
            throw error(errc::out_of_region, "|a| + |b| exceeds 1/2");
        return c;
    }
};

enum class Method { ExactF4, EdgeAbel, SymmetricClosed, DiagonalClosed };

inline const char* to_string(Method m) {
    switch (m) {
    case Method::ExactF4: return "ExactF4";
    case Method::EdgeAbel: return "EdgeAbel";
    case Method::SymmetricClosed: return "SymmetricClosed";
    case Method::DiagonalClosed: return "DiagonalClosed";
    }
    return "?";
}

struct Diagnostic {
    std::string label;
    SeriesValue<double> series;
};

struct VariogramResult {
    double value = 0;
    Method method = Method::ExactF4;
    double est_error = 0;
    std::vector<Diagnostic> diagnostics;
    std::vector<std::string> notes;

    std::size_t terms() const {
        std::size_t n = 0;
        for (const auto& d : diagnostics) n += d.series.terms_used;
        return n;
    }
    bool converged() const {
        for (const auto& d : diagnostics)
            if (!d.series.converged) return false;
        return true;
    }
};

struct SymmetricExpansionTerms {
    double gamma_st = 0;
    double l_st = 0;
    double b_st = 0;
};

namespace detail {

// a variance cannot be negative; tiny negatives from cancellation are clamped
inline void clamp_nonnegative(VariogramResult& r) {
    if (r.value >= 0) return;
    const double slack = 10 * r.est_error + 1e-15;
    if (r.value >= -slack) {
        r.notes.push_back("clamped negative value " + std::to_string(r.value) + " to 0");
        r.value = 0;
        return;
    }
    throw error(errc::internal_consistency, "negative variogram value " + std::to_string(r.value));
}

} // namespace detail
} // namespace lvg
