#include "exgof/integrated_periodogram.hpp"

#include <cmath>
#include <stdexcept>

#include "exgof/fourier_kernels.hpp"

namespace exgof {

WeightFunction WeightFunction::one() { return WeightFunction(); }

WeightFunction WeightFunction::product(std::vector<double> g1, std::vector<double> g2) {
    if (g1.size() < 2 || g2.size() < 2)
        throw std::invalid_argument("WeightFunction::product: tables need >= 2 nodes");
    for (const auto& tab : {g1, g2})
        for (double v : tab)
            if (!(v >= 0.0)) throw std::invalid_argument("WeightFunction: values must be >= 0");
    WeightFunction g;
    g.constant_ = false;
    g.g1_ = std::move(g1);
    g.g2_ = std::move(g2);
    return g;
}

double WeightFunction::component(int dim, double x) const {
    if (constant_) return 1.0;
    const auto& tab = dim == 0 ? g1_ : g2_;
    const double pos = x / (2.0 * M_PI) * static_cast<double>(tab.size() - 1);
    if (pos <= 0.0) return tab.front();
    if (pos >= static_cast<double>(tab.size() - 1)) return tab.back();
    const auto k = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(k);
    return tab[k] + frac * (tab[k + 1] - tab[k]);
}

namespace {

// floor(n*omega/(2*pi)) with a guard against roundoff at the grid points.
int grid_index(double omega, int n) {
    const int j = static_cast<int>(std::floor(n * omega / (2.0 * M_PI) + 1e-9));
    return std::clamp(j, 0, n);
}

}  // namespace

double psi_quadrature(Lag h, double omega1, double omega2, const WeightFunction& g,
                      int subdivisions) {
    if (subdivisions < 1) throw std::invalid_argument("psi_quadrature: subdivisions must be >= 1");
    if (omega1 <= 0.0 || omega2 <= 0.0) return 0.0;
    const int s = subdivisions;
    // Midpoint nodes factorize: sum g1 g2 cos(h1 x1 + h2 x2)
    //   = (sum g1 cos)(sum g2 cos) - (sum g1 sin)(sum g2 sin).
    double c1 = 0.0, s1 = 0.0, c2 = 0.0, s2 = 0.0;
    for (int a = 0; a < s; ++a) {
        const double x1 = (a + 0.5) * omega1 / s;
        const double w1 = g.component(0, x1);
        c1 += w1 * std::cos(h.h1 * x1);
        s1 += w1 * std::sin(h.h1 * x1);
        const double x2 = (a + 0.5) * omega2 / s;
        const double w2 = g.component(1, x2);
        c2 += w2 * std::cos(h.h2 * x2);
        s2 += w2 * std::sin(h.h2 * x2);
    }
    const double cell = (omega1 / s) * (omega2 / s);
    return cell * (c1 * c2 - s1 * s2);
}

double psi_discrete(Lag h, double omega1, double omega2, int n, const WeightFunction& g) {
    if (n < 1) throw std::invalid_argument("psi_discrete: n must be >= 1");
    const int j1 = grid_index(omega1, n);
    const int j2 = grid_index(omega2, n);
    if (j1 == 0 || j2 == 0) return 0.0;
    double c1 = 0.0, s1 = 0.0, c2 = 0.0, s2 = 0.0;
    for (int i = 1; i <= j1; ++i) {
        const double x = 2.0 * M_PI * i / n;
        const double w = g.component(0, x);
        c1 += w * std::cos(h.h1 * x);
        s1 += w * std::sin(h.h1 * x);
    }
    for (int i = 1; i <= j2; ++i) {
        const double x = 2.0 * M_PI * i / n;
        const double w = g.component(1, x);
        c2 += w * std::cos(h.h2 * x);
        s2 += w * std::sin(h.h2 * x);
    }
    const double scale = 4.0 * M_PI * M_PI / (static_cast<double>(n) * n);
    return scale * (c1 * c2 - s1 * s2);
}

FourierSurface integrated_surface(const LagFunction& gamma, int n, const WeightFunction& g) {
    if (gamma.max_abs_component() >= n)
        throw std::invalid_argument("integrated_surface: lag support exceeds ||h|| < n");

    FourierSurface surf(n);
    surf.values = cosine_series_on_grid(gamma, n);
    if (!g.is_one()) {
        for (int i1 = 1; i1 <= n; ++i1)
            for (int i2 = 1; i2 <= n; ++i2)
                surf.at(i1, i2) *= g(2.0 * M_PI * i1 / n, 2.0 * M_PI * i2 / n);
    }
    prefix_sum_2d(surf.values, n);
    const double scale = 4.0 * M_PI * M_PI / (static_cast<double>(n) * n);
    for (auto& v : surf.values) v *= scale;
    return surf;
}

double theoretical_integrated(const ModelSpec& spec, const WeightFunction& g, double omega1,
                              double omega2, int lag_cap, int subdivisions) {
    double sum = 0.0;
    for (const auto& [h, v] : extremogram_table(spec, lag_cap))
        sum += v * psi_quadrature(h, omega1, omega2, g, subdivisions);
    return sum;
}

}  // namespace exgof
