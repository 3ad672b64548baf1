#pragma once

#include <cmath>

#include "edge.hpp"
#include "exact.hpp"
#include "symmetric.hpp"
#include "types.hpp"

namespace lvg {

inline VariogramResult variogram(const CoeffPair& c, Lag lag, const EvalConfig& cfg = {}) {
    switch (c.regime) {
    case Regime::SymmetricQuarter:
        return variogram_symmetric(lag, cfg);
    case Regime::Edge: {
        detail::require(c.a > 0 && c.b > 0, errc::domain, "edge path needs a, b > 0");
        // project onto a + b = 1/2 exactly
        return variogram_edge(c.a / (2 * (c.a + c.b)), lag, cfg);
    }
    case Regime::Interior:
        break;
    }
    return variogram_exact(c, lag, cfg);
}

inline VariogramResult variogram(double a, double b, Lag lag, const EvalConfig& cfg = {}) {
    return variogram(CoeffPair::classify(a, b, cfg), lag, cfg);
}

} // namespace lvg
