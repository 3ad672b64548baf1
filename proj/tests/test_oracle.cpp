#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include <lvg/oracle/bessel_laplace.hpp>
#include <lvg/oracle/quadrature_variogram.hpp>
#include <lvg/variogram/exact.hpp>

#include "oracles.hpp"

using namespace lvg;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST(AdaptiveGK, SmoothAndPeakedIntegrands) {
    const auto r = adaptive_gk([](double x) { return std::sin(x); }, 0.0, pi, 1e-13, 1e-13, 100);
    EXPECT_NEAR(r.value, 2.0, 1e-13);
    const auto p = adaptive_gk([](double x) { return 1e-3 / (x * x + 1e-6); }, -1.0, 1.0, 1e-11, 1e-12, 500);
    EXPECT_NEAR(p.value, 2 * std::atan(1000.0), 1e-10);
    EXPECT_GT(p.subdivisions, 0);
}

TEST(AdaptiveGK, ReportsStall) {
    try {
        adaptive_gk([](double x) { return 1 / std::sqrt(std::abs(x - 0.3)); }, 0.0, 1.0, 1e-15, 1e-15, 5);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::tolerance_not_reached);
    }
}

TEST(Quadrature, Examples) {
    EXPECT_EQ(quadrature_variogram({0.1, 0.3}, {0, 0}).value, 0.0);
    EXPECT_EQ(quadrature_variogram({0.25, 0.25}, {0, 0}).value, 0.0);
    EXPECT_NEAR(quadrature_variogram({0.25, 0.25}, {1, 1}).value, 4 / pi, 1e-7);
    const auto q = quadrature_variogram({0.2, 0.1}, {3, 2});
    EXPECT_NEAR(q.value, variogram_exact({0.2, 0.1}, {3, 2}).value, 1e-9);
    EXPECT_GT(q.subdivisions, 0);
}

TEST(Quadrature, PotentialKernelAtQuarter) {
    for (unsigned s = 0; s <= 3; ++s)
        for (unsigned t = 0; t <= s; ++t) {
            const double ref = oracle::potential_kernel(s, t);
            if (std::isnan(ref)) continue;
            EXPECT_NEAR(quadrature_variogram({0.25, 0.25}, {s, t}).value, ref, 1e-8) << s << "," << t;
        }
}

TEST(Quadrature, ContractChecks) {
    EXPECT_THROW(quadrature_variogram({0.3, 0.3}, {1, 0}), error);
    EXPECT_THROW(quadrature_variogram({-0.1, 0.2}, {1, 0}), error);
    QuadratureSettings q;
    q.origin_split_radius = 1.0;
    EXPECT_THROW(quadrature_variogram({0.1, 0.2}, {1, 0}, q), error);
    QuadratureSettings starved;
    starved.max_subdivisions = 1;
    starved.abs_tol = starved.rel_tol = 1e-15;
    try {
        quadrature_variogram({0.25, 0.25}, {3, 1}, starved);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::tolerance_not_reached);
    }
}

TEST(Quadrature, RefinementStaysWithinReportedError) {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> u(0.02, 0.25);
    std::uniform_int_distribution<unsigned> lag(0, 4);
    for (int i = 0; i < 20; ++i) {
        const CoeffPair c{u(rng), u(rng)};
        const Lag l{lag(rng), lag(rng)};
        QuadratureSettings coarse, fine;
        coarse.abs_tol = coarse.rel_tol = 1e-9;
        fine.abs_tol = fine.rel_tol = 5e-10;
        const auto a = quadrature_variogram(c, l, coarse), b = quadrature_variogram(c, l, fine);
        EXPECT_LE(std::abs(a.value - b.value), a.error + 1e-15) << c.a << " " << c.b << " " << l.s << l.t;
    }
}

TEST(Quadrature, SwapSymmetry) {
    const double x = quadrature_variogram({0.12, 0.31}, {3, 1}).value;
    const double y = quadrature_variogram({0.31, 0.12}, {1, 3}).value;
    EXPECT_NEAR(x, y, 1e-10);
}

TEST(ModifiedBessel, Examples) {
    EXPECT_EQ(modified_bessel_i(0, 0.0), 1.0);
    EXPECT_EQ(modified_bessel_i(3, 0.0), 0.0);
    const double x = 2.5;
    for (unsigned n = 1; n < 8; ++n) {
        const double lhs = modified_bessel_i(n - 1, x) - modified_bessel_i(n + 1, x);
        EXPECT_NEAR(lhs, 2.0 * n / x * modified_bessel_i(n, x), 1e-11 * std::abs(lhs));
    }
}

TEST(ModifiedBessel, MatchesBoostAcrossBranches) {
    for (unsigned n : {0u, 1u, 2u, 5u, 9u})
        for (double x : {1e-3, 0.7, 2.5, 10.0, 39.0, 41.0, 90.0, 300.0, 650.0}) {
            const double ref = boost::math::cyl_bessel_i(double(n), x) * std::exp(-x);
            EXPECT_LE(std::abs(modified_bessel_i_scaled(n, x) - ref), 1e-13 * ref) << n << " " << x;
        }
    EXPECT_NEAR(modified_bessel_i_scaled(3, 5e4) * std::sqrt(2 * pi * 5e4), 1.0, 1e-4);
    EXPECT_THROW(modified_bessel_i(0, 800.0), error);
}

TEST(BesselLaplace, Examples) {
    EXPECT_NEAR(bessel_laplace_i_st({0, 0}, {0, 0}).value, 1.0, 1e-12);
    EXPECT_NEAR(bessel_laplace_i_st({0.2, 0.2}, {1, 0}).value, i_st({0.2, 0.2}, {1, 0}).value, 1e-8);
    EXPECT_NEAR(bessel_laplace_difference({0.25, 0.25}, {1, 1}).value, 4 / pi, 1e-6);
}

TEST(BesselLaplace, SingleTermMatchesSeries) {
    for (double a : {0.05, 0.15, 0.2})
        for (double b : {0.05, 0.2})
            for (unsigned s = 0; s < 4; ++s) {
                const double v = i_st({a, b}, {s, 1}).value;
                EXPECT_NEAR(bessel_laplace_i_st({a, b}, {s, 1}).value, v, 1e-8 * std::max(1.0, v));
            }
}

TEST(BesselLaplace, SignsForNegativeCoefficients) {
    const double p = bessel_laplace_i_st({0.1, 0.2}, {3, 2}).value;
    EXPECT_NEAR(bessel_laplace_i_st({-0.1, 0.2}, {3, 2}).value, -p, 1e-12);
    EXPECT_NEAR(bessel_laplace_i_st({-0.1, -0.2}, {3, 2}).value, -p, 1e-12);
}

TEST(BesselLaplace, DifferenceFormOnAndOffTheEdge) {
    EXPECT_EQ(bessel_laplace_difference({0.2, 0.1}, {0, 0}).value, 0.0);
    for (unsigned s = 0; s <= 3; ++s)
        for (unsigned t = 0; t <= s; ++t) {
            const double ref = oracle::potential_kernel(s, t);
            if (std::isnan(ref)) continue;
            EXPECT_NEAR(bessel_laplace_difference({0.25, 0.25}, {s, t}).value, ref, 1e-7) << s << "," << t;
        }
    const double q = quadrature_variogram({0.3, 0.2}, {2, 1}).value;
    EXPECT_NEAR(bessel_laplace_difference({0.3, 0.2}, {2, 1}).value, q, 1e-7);
    const double ex = variogram_exact({0.1, 0.15}, {2, 3}).value;
    EXPECT_NEAR(bessel_laplace_difference({0.1, 0.15}, {2, 3}).value, ex, 1e-9);
}

TEST(BesselLaplace, ContractChecks) {
    try {
        bessel_laplace_i_st({0.3, 0.2}, {1, 0});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::out_of_region);
    }
    EXPECT_THROW(bessel_laplace_difference({-0.1, 0.2}, {1, 0}), error);
    EXPECT_THROW(bessel_laplace_difference({0.3, 0.3}, {1, 0}), error);
    try {
        bessel_laplace_difference({0.4999, 1e-4}, {3, 0});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::tolerance_not_reached);
    }
}
