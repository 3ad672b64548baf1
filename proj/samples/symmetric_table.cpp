// Variogram of the symmetric intrinsic autoregression (a = b = 1/4) on a small
// grid of lags, with the reported error bound beside each value.
#include <cstdio>

#include <lvg/lvg.hpp>

int main(int argc, char** argv) {
    const unsigned n = argc > 1 ? unsigned(std::atoi(argv[1])) : 5;
    std::printf("%3s %3s %22s %10s  %s\n", "s", "t", "nu_st", "est_error", "method");
    for (unsigned s = 0; s <= n; ++s)
        for (unsigned t = 0; t <= s; ++t) {
            const auto r = lvg::variogram(0.25, 0.25, {s, t});
            std::printf("%3u %3u %22.17g %10.2e  %s\n", s, t, r.value, r.est_error, lvg::to_string(r.method));
        }
}
