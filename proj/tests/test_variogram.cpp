#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <lvg/oracle/bessel_laplace.hpp>
#include <lvg/oracle/quadrature_variogram.hpp>
#include <lvg/specfun/hypergeometric.hpp>
#include <lvg/variogram/dispatch.hpp>

#include "oracles.hpp"

using namespace lvg;

namespace {
constexpr double pi = std::numbers::pi;
const double ln4 = std::log(4.0);
} // namespace

TEST(IntegralTerm, Examples) {
    EXPECT_EQ(i_st({0, 0}, {0, 0}).value, 1.0);
    EXPECT_EQ(i_st({0, 0.3}, {2, 1}).value, 0.0);
    EXPECT_EQ(i_st({0, 0.1}, {1, 0}).value, 0.0);
    const double ref = bessel_laplace_i_st({0.2, 0.2}, {1, 0}).value;
    EXPECT_NEAR(i_st({0.2, 0.2}, {1, 0}).value, ref, 1e-10);
}

TEST(IntegralTerm, NegativeCoefficientFlipsOddPowers) {
    for (unsigned s = 0; s < 4; ++s)
        for (unsigned t = 0; t < 4; ++t) {
            const double p = i_st({0.15, 0.2}, {s, t}).value;
            const double n = i_st({-0.15, 0.2}, {s, t}).value;
            EXPECT_NEAR(n, (s % 2 ? -1 : 1) * p, 1e-15 * std::abs(p));
        }
}

TEST(ExactPath, Examples) {
    const auto z = variogram_exact({0.2, 0.2}, {0, 0});
    EXPECT_EQ(z.value, 0.0);
    EXPECT_EQ(z.method, Method::ExactF4);
    const auto v = variogram_exact({0.1, 0.2}, {2, 1});
    EXPECT_NEAR(v.value, quadrature_variogram({0.1, 0.2}, {2, 1}).value, 1e-8);
}

TEST(ExactPath, NearEdgeParameters) {
    EvalConfig cfg;
    cfg.max_terms = 10'000'000;
    const auto v = variogram_exact({0.4848, 0.0132}, {1, 0}, cfg);
    const auto q = quadrature_variogram({0.4848, 0.0132}, {1, 0});
    EXPECT_NEAR(v.value, q.value, 1e-6);
    EXPECT_TRUE(v.converged());
}

TEST(ExactPath, RejectsEdgeAndBeyond) {
    try {
        variogram_exact({0.3, 0.2}, {1, 0});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::out_of_region);
    }
    EXPECT_THROW(variogram_exact({0.3, 0.3}, {1, 0}), error);
}

TEST(ExactPath, SwapSymmetry) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.01, 0.24);
    for (int i = 0; i < 25; ++i) {
        const double a = u(rng), b = u(rng);
        const unsigned s = i % 5, t = (i / 5) % 5;
        const double x = variogram_exact({a, b}, {s, t}).value, y = variogram_exact({b, a}, {t, s}).value;
        EXPECT_NEAR(x, y, 1e-14 * std::max(1.0, x));
    }
}

TEST(ExactPath, NonnegativeAndGrowingAlongAxis) {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.01, 0.245);
    for (int i = 0; i < 20; ++i) {
        const double a = u(rng), b = u(rng);
        double prev = 0;
        for (unsigned s = 0; s < 6; ++s) {
            const auto r = variogram_exact({a, b}, {s, 0});
            EXPECT_GE(r.value, 0);
            // the walk variance never shrinks along a lattice axis
            EXPECT_GE(r.value, prev - 1e-13);
            prev = r.value;
        }
    }
}

TEST(ExactPath, ErrorEstimateCoversOracle) {
    for (auto [a, b] : {std::pair{0.05, 0.1}, {0.2, 0.2}, {0.15, 0.3}, {0.24, 0.24}})
        for (unsigned s = 0; s < 4; ++s) {
            const auto r = variogram_exact({a, b}, {s, 3 - s});
            const auto q = quadrature_variogram({a, b}, {s, 3 - s});
            EXPECT_LE(std::abs(r.value - q.value), r.est_error + q.error + 1e-12) << a << " " << b << " " << s;
        }
}

TEST(EdgePath, Examples) {
    const auto z = variogram_edge(0.25, {0, 0});
    EXPECT_LE(std::abs(z.value), z.est_error + 1e-15);
    const auto d = variogram_edge(0.25, {1, 1});
    EXPECT_EQ(d.method, Method::EdgeAbel);
    EXPECT_NEAR(d.value, 4 / pi, d.est_error + 1e-12);
    const auto e = variogram_edge(0.3, {1, 0});
    EXPECT_NEAR(e.value, quadrature_variogram({0.3, 0.2}, {1, 0}).value, 1e-4);
}

TEST(EdgePath, MatchesSymmetricWithinReportedError) {
    for (unsigned s = 0; s <= 3; ++s)
        for (unsigned t = 0; t <= 3; ++t) {
            const auto e = variogram_edge(0.25, {s, t});
            const auto y = variogram_symmetric({s, t});
            EXPECT_LE(std::abs(e.value - y.value), e.est_error) << s << "," << t;
            EXPECT_LE(e.est_error, 1e-3);
        }
}

TEST(EdgePath, DomainAndCapErrors) {
    EXPECT_THROW(variogram_edge(0.0, {1, 0}), error);
    EXPECT_THROW(variogram_edge(0.5, {1, 0}), error);
    EvalConfig cfg;
    cfg.max_terms = 100;
    try {
        variogram_edge(0.25, {1, 0}, cfg);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::slow_convergence);
    }
}

TEST(ExpansionTerms, GammaExamples) {
    EXPECT_DOUBLE_EQ(gamma_st({0, 0}), pi);
    EXPECT_DOUBLE_EQ(gamma_st({1, 1}), pi / 8);
    EXPECT_DOUBLE_EQ(gamma_st({3, 2}), 10 * pi / 1024);
    for (unsigned s = 0; s < 30; ++s)
        for (unsigned t = 0; t < 30; ++t) EXPECT_GT(gamma_st({s, t}), 0);
}

TEST(ExpansionTerms, LExamples) {
    const double g = std::numbers::egamma;
    EXPECT_NEAR(l_st({0, 0}), ln4, 1e-14);
    EXPECT_NEAR(l_st({1, 1}), -2 * g - digamma(1.5) - digamma(2.0), 1e-14);
    EXPECT_EQ(l_st({2, 0}), l_st({1, 1}));
}

TEST(BSeries, Examples) {
    const auto b00 = b_st({0, 0});
    EXPECT_TRUE(b00.converged);
    EXPECT_NEAR(b00.value, 2 * std::log(2.0), 1e-12);
    EXPECT_NEAR(b_st({1, 1}).value, ln4 - 1, 1e-12);
    EXPECT_NEAR(b_st({1, 0}).value, b_st_transformed({0, 1}).value, 1e-9);
    // ln 4 + 2 - B_10 = pi gives nu_10 = 1
    EXPECT_NEAR(b_st({1, 0}).value, ln4 + 2 - pi, 1e-12);
}

TEST(BSeries, TransformedExamples) {
    EXPECT_NEAR(b_st_transformed({0, 0}).value, 2 * std::log(2.0), 1e-12);
    EXPECT_NEAR(b_st_transformed({1, 2}).value, b_st({2, 1}).value, 1e-9);
    for (unsigned s = 0; s < 5; ++s) {
        // diagonal: sum (1/2)_k / (k (s+1)_k), summed directly
        constexpr unsigned N = 20000;
        oracle::wide sum = 0, t = 1, term = 0;
        for (unsigned k = 1; k <= N; ++k) {
            t = t * (oracle::wide(0.5) + k - 1) / (oracle::wide(s + 1) + k - 1);
            term = t / k;
            sum += term;
        }
        // terms fall like k^{-s-3/2}; add the integral tail
        sum += term * N / (s + 0.5);
        EXPECT_NEAR(b_st_transformed({s, s}).value, static_cast<double>(sum), 1e-6) << s;
        EXPECT_NEAR(b_st_transformed({s, s}).value, b_ss_closed(s), 1e-12);
    }
}

TEST(BSeries, PoleCasesAreFlagged) {
    try {
        b_st_transformed({1, 0});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::pole_in_term);
    }
    EXPECT_NEAR(b_st_transformed_ordered({1, 0}).value, b_st({1, 0}).value, 1e-9);
    EXPECT_NO_THROW(b_st_transformed({2, 0}));
}

TEST(BSeries, SymmetricInLagSwap) {
    for (unsigned s = 0; s < 5; ++s)
        for (unsigned t = 0; t < s; ++t) EXPECT_NEAR(b_st({s, t}).value, b_st({t, s}).value, 1e-12);
}

TEST(BSeries, DiagonalClosedForm) {
    EXPECT_NEAR(b_ss_closed(0), 2 * std::log(2.0), 1e-15);
    EXPECT_NEAR(b_ss_closed(1), ln4 - 1, 1e-15);
    EXPECT_NEAR(b_ss_closed(5), b_st({5, 5}).value, 1e-10);
}

TEST(NearUnit, LeadingTermExamples) {
    EXPECT_NEAR(zero_balanced_4f3_near_unit({0, 0}, 1e-3), (ln4 + 2 * std::log(2.0) - std::log(1e-3)) / pi, 1e-12);
    for (auto [lag, th] : {std::pair{Lag{0, 0}, 1e-3}, {Lag{1, 1}, 1e-2}}) {
        const double series = hyp4f3_series(symmetric_4f3_params(lag), 1 - th).value;
        const double approx = zero_balanced_4f3_near_unit(lag, th);
        EXPECT_LE(std::abs(series - approx), 10 * th * std::abs(std::log(th)));
    }
}

TEST(NearUnit, RemainderStaysBounded) {
    for (Lag lag : {Lag{0, 0}, Lag{1, 1}, Lag{2, 1}}) {
        EvalConfig cfg;
        cfg.max_terms = 200'000'000;
        auto ratio = [&](double th) {
            const double series = hyp4f3_series(symmetric_4f3_params(lag), 1 - th, cfg).value;
            return std::abs(series - zero_balanced_4f3_near_unit(lag, th)) / (th * std::abs(std::log(th)));
        };
        const double r0 = ratio(1e-2);
        for (double th : {1e-3, 1e-4}) EXPECT_LE(ratio(th), 3 * r0);
    }
}

TEST(SymmetricPath, Examples) {
    EXPECT_NEAR(variogram_symmetric({0, 0}).value, 0.0, 1e-14);
    const auto v = variogram_symmetric({1, 1});
    EXPECT_EQ(v.method, Method::SymmetricClosed);
    EXPECT_NEAR(v.value, 4 / pi, 1e-12);
    EXPECT_NEAR(variogram_symmetric({1, 0}).value, 1.0, 1e-12);
}

TEST(SymmetricPath, PotentialKernelValues) {
    for (unsigned s = 0; s <= 3; ++s)
        for (unsigned t = 0; t <= s; ++t) {
            const double ref = oracle::potential_kernel(s, t);
            if (std::isnan(ref)) continue;
            EXPECT_NEAR(variogram_symmetric({s, t}).value, ref, 1e-11) << s << "," << t;
            EXPECT_NEAR(variogram_symmetric({t, s}).value, ref, 1e-11) << t << "," << s;
        }
}

TEST(SymmetricPath, DiagonalAgreement) {
    for (unsigned s = 0; s <= 10; ++s) {
        const auto v = variogram_symmetric({s, s});
        EXPECT_NEAR(v.value, variogram_diagonal(s), 1e-10) << s;
        EXPECT_LE(v.est_error, 1e-10);
    }
}

TEST(SymmetricPath, DiscreteHarmonicAwayFromOrigin) {
    // nu is harmonic for the simple walk at every site but the origin
    auto nu = [](int s, int t) { return variogram_symmetric({unsigned(std::abs(s)), unsigned(std::abs(t))}).value; };
    for (int s = 0; s <= 4; ++s)
        for (int t = 0; t <= 4; ++t) {
            if (s == 0 && t == 0) continue;
            const double avg = (nu(s + 1, t) + nu(s - 1, t) + nu(s, t + 1) + nu(s, t - 1)) / 4;
            EXPECT_NEAR(avg, nu(s, t), 1e-10) << s << "," << t;
        }
    // and the origin carries unit mass
    EXPECT_NEAR((4 * nu(1, 0)) / 4 - nu(0, 0), 1.0, 1e-10);
}

TEST(DiagonalClosed, Examples) {
    EXPECT_EQ(variogram_diagonal(0), 0.0);
    EXPECT_NEAR(variogram_diagonal(1), 4 / pi, 1e-15);
    EXPECT_NEAR(variogram_diagonal(2), 16 / (3 * pi), 1e-15);
}

TEST(Dispatch, Examples) {
    const auto d = variogram(0.25, 0.25, {3, 3});
    EXPECT_NEAR(d.value, 4 / pi * (1 + 1.0 / 3 + 1.0 / 5), 1e-10);
    const auto z = variogram(0.2, 0.2, {0, 0});
    EXPECT_EQ(z.value, 0.0);
    EXPECT_EQ(z.method, Method::ExactF4);
    const auto e = variogram(0.3, 0.2, {1, 1});
    EXPECT_EQ(e.method, Method::EdgeAbel);
    EXPECT_NEAR(e.value, quadrature_variogram({0.3, 0.2}, {1, 1}).value, 1e-4);
}

TEST(Dispatch, RegimeClassification) {
    EXPECT_EQ(CoeffPair::classify(0.25, 0.25).regime, Regime::SymmetricQuarter);
    EXPECT_EQ(CoeffPair::classify(0.3, 0.2).regime, Regime::Edge);
    EXPECT_EQ(CoeffPair::classify(0.3, 0.2 - 5e-10).regime, Regime::Edge);
    EXPECT_EQ(CoeffPair::classify(0.3, 0.19).regime, Regime::Interior);
    EXPECT_EQ(CoeffPair::classify(-0.2, 0.1).regime, Regime::Interior);
    EXPECT_THROW(CoeffPair::classify(0.3, 0.3), error);
    EXPECT_THROW(CoeffPair::classify(NAN, 0.1), error);
}

TEST(Dispatch, ZeroLagEverywhere) {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> u(0.001, 0.499);
    for (int i = 0; i < 30; ++i) {
        const double a = u(rng) / 2, b = u(rng) / 2;
        EXPECT_EQ(variogram(a, b, {0, 0}).value, 0.0);
    }
}

TEST(Clamp, TinyNegativesAreZeroedLargeOnesThrow) {
    VariogramResult r;
    r.value = -1e-17;
    r.est_error = 0;
    detail::clamp_nonnegative(r);
    EXPECT_EQ(r.value, 0.0);
    EXPECT_EQ(r.notes.size(), 1u);
    r.value = -1e-3;
    r.est_error = 1e-6;
    EXPECT_THROW(detail::clamp_nonnegative(r), error);
}
