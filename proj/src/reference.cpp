#include "exgof/reference.hpp"

#include <cmath>

namespace exgof::reference {

LagFunction empirical_extremogram(const ExceedanceField& ex, const std::vector<Lag>& lags) {
    const int n = ex.n;
    const double p0 = ex.plan.p0;
    LagFunction out;
    out.lags = lags;
    out.values.resize(lags.size());
    for (std::size_t k = 0; k < lags.size(); ++k) {
        const Lag h = lags[k];
        double sum = 0.0;
        for (int t1 = 0; t1 < n; ++t1) {
            if (t1 + h.h1 < 0 || t1 + h.h1 >= n) continue;
            for (int t2 = 0; t2 < n; ++t2) {
                if (t2 + h.h2 < 0 || t2 + h.h2 >= n) continue;
                sum += (ex.at(t1, t2) - p0) * (ex.at(t1 + h.h1, t2 + h.h2) - p0);
            }
        }
        out.values[k] = ex.plan.m_n * sum / (static_cast<double>(n) * n);
    }
    return out;
}

std::vector<double> periodogram_grid(const LagFunction& gamma, int n) {
    std::vector<double> out(static_cast<std::size_t>(n) * n, 0.0);
    for (int i1 = 1; i1 <= n; ++i1) {
        const double w1 = 2.0 * M_PI * i1 / n;
        for (int i2 = 1; i2 <= n; ++i2) {
            const double w2 = 2.0 * M_PI * i2 / n;
            double f = 0.0;
            for (std::size_t k = 0; k < gamma.size(); ++k)
                f += gamma.values[k] * std::cos(gamma.lags[k].h1 * w1 + gamma.lags[k].h2 * w2);
            out[static_cast<std::size_t>(i1 - 1) * n + (i2 - 1)] = f;
        }
    }
    return out;
}

double psi_discrete_loop(Lag h, double omega1, double omega2, int n, const WeightFunction& g) {
    const int j1 = static_cast<int>(std::floor(n * omega1 / (2.0 * M_PI) + 1e-9));
    const int j2 = static_cast<int>(std::floor(n * omega2 / (2.0 * M_PI) + 1e-9));
    double sum = 0.0;
    for (int i1 = 1; i1 <= j1; ++i1) {
        const double x1 = 2.0 * M_PI * i1 / n;
        for (int i2 = 1; i2 <= j2; ++i2) {
            const double x2 = 2.0 * M_PI * i2 / n;
            sum += g(x1, x2) * std::cos(h.h1 * x1 + h.h2 * x2);
        }
    }
    return 4.0 * M_PI * M_PI / (static_cast<double>(n) * n) * sum;
}

double psi_quadrature_loop(Lag h, double omega1, double omega2, const WeightFunction& g,
                           int subdivisions) {
    if (omega1 <= 0.0 || omega2 <= 0.0) return 0.0;
    const int s = subdivisions;
    double sum = 0.0;
    for (int a = 0; a < s; ++a) {
        const double x1 = (a + 0.5) * omega1 / s;
        for (int b = 0; b < s; ++b) {
            const double x2 = (b + 0.5) * omega2 / s;
            sum += g(x1, x2) * std::cos(h.h1 * x1 + h.h2 * x2);
        }
    }
    return sum * (omega1 / s) * (omega2 / s);
}

FourierSurface integrated_surface(const LagFunction& gamma, int n, const WeightFunction& g) {
    FourierSurface surf(n);
#pragma omp parallel for schedule(static)
    for (int i1 = 1; i1 <= n; ++i1) {
        for (int i2 = 1; i2 <= n; ++i2) {
            const double w1 = 2.0 * M_PI * i1 / n;
            const double w2 = 2.0 * M_PI * i2 / n;
            double sum = 0.0;
            for (std::size_t k = 0; k < gamma.size(); ++k)
                sum += gamma.values[k] * psi_discrete_loop(gamma.lags[k], w1, w2, n, g);
            surf.at(i1, i2) = sum;
        }
    }
    return surf;
}

}  // namespace exgof::reference
