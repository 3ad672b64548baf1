// Walks (a, b) toward the edge a + b = 1/2 along a fixed ratio and compares
// the exact series, the 2-D quadrature and, on the edge itself, the Abel path.
#include <cstdio>

#include <lvg/lvg.hpp>

int main() {
    using namespace lvg;
    const Lag lag{2, 1};
    const double ratio = 0.6;
    std::printf("%10s %22s %22s %12s %10s\n", "a+b", "series", "quadrature", "|diff|", "terms");
    for (double r : {0.3, 0.4, 0.45, 0.49, 0.499, 0.4999}) {
        const CoeffPair c{ratio * r, (1 - ratio) * r};
        const auto q = quadrature_variogram(c, lag);
        VariogramResult e;
        try {
            e = variogram_exact(c, lag);
        } catch (const error& err) {
            std::printf("%10g %22s %22.15g  %s\n", r, "-", q.value, err.what());
            continue;
        }
        std::printf("%10g %22.15g %22.15g %12.2e %10zu\n", r, e.value, q.value, std::abs(e.value - q.value),
                    e.terms());
    }
    const auto edge = variogram_edge(ratio * 0.5, lag);
    const auto q = quadrature_variogram({ratio * 0.5, (1 - ratio) * 0.5}, lag);
    std::printf("%10g %22.15g %22.15g %12.2e  edge path, est_error %.2e\n", 0.5, edge.value, q.value,
                std::abs(edge.value - q.value), edge.est_error);
}
