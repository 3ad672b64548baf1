#include <cmath>
#include <cstdio>

#include <lvg/lvg.hpp>

int main() {
    using namespace lvg;

    const auto f4 = appell_f4({0.5, 1, 1, 1, 0.16, 0.16});
    std::printf("F4[1/2,1;1,1;0.16,0.16] = %.17g  (%zu terms, tail %.1e)\n", f4.value, f4.terms_used,
                f4.tail_estimate);

    const auto f2 = appell_f2(1, 1, 1, 2, 2, 0.3, 0);
    std::printf("F2[1,1,1;2,2;0.3,0]     = %.17g  (-ln 0.7 / 0.3 = %.17g)\n", f2.value, -std::log(0.7) / 0.3);

    const auto red = f4_equal_args_reduction(0.3, 0.6, 1.2, 0.8, 0.05);
    std::printf("F4 at x = y = 0.05       = %.17g\n4F3 reduction at 0.2      = %.17g\n",
                appell_f4({0.3, 0.6, 1.2, 0.8, 0.05, 0.05}).value, red.value);

    // zero-balanced 4F3 near z = 1 against its logarithmic leading term
    const Lag lag{1, 1};
    for (double th : {1e-2, 1e-3, 1e-4}) {
        EvalConfig cfg;
        cfg.max_terms = 100'000'000;
        const double series = hyp4f3_series(symmetric_4f3_params(lag), 1 - th, cfg).value;
        std::printf("4F3(1 - %g) = %.12f   leading term %.12f\n", th, series,
                    zero_balanced_4f3_near_unit(lag, th));
    }

    std::printf("B_10 = %.17g   B_ss(3) closed = %.17g   series = %.17g\n", b_st({1, 0}).value, b_ss_closed(3),
                b_st({3, 3}).value);
}
