#include "exgof/fourier_kernels.hpp"

#include <cmath>

#include "exgof/extremal_stats.hpp"

namespace exgof {

namespace {

std::vector<std::complex<double>> twiddle_table(int m, int sign) {
    std::vector<std::complex<double>> w(m);
    for (int k = 0; k < m; ++k) {
        const double a = sign * 2.0 * M_PI * k / m;
        w[k] = {std::cos(a), std::sin(a)};
    }
    return w;
}

}  // namespace

void dft2(std::vector<std::complex<double>>& data, int m, int sign) {
    const auto w = twiddle_table(m, sign);
    std::vector<std::complex<double>> scratch(data.size());

    // Row pass: scratch[r][k] = sum_c data[r][c] w[(k*c) mod m]
#pragma omp parallel for schedule(static)
    for (int r = 0; r < m; ++r) {
        const std::complex<double>* row = data.data() + static_cast<std::size_t>(r) * m;
        std::complex<double>* out = scratch.data() + static_cast<std::size_t>(r) * m;
        for (int k = 0; k < m; ++k) {
            std::complex<double> acc{0.0, 0.0};
            int idx = 0;
            for (int c = 0; c < m; ++c) {
                acc += row[c] * w[idx];
                idx += k;
                if (idx >= m) idx -= m;
            }
            out[k] = acc;
        }
    }

    // Column pass: data[k][c] = sum_r scratch[r][c] w[(k*r) mod m]
#pragma omp parallel for schedule(static)
    for (int k = 0; k < m; ++k) {
        std::complex<double>* out = data.data() + static_cast<std::size_t>(k) * m;
        for (int c = 0; c < m; ++c) out[c] = {0.0, 0.0};
        int idx = 0;
        for (int r = 0; r < m; ++r) {
            const std::complex<double>* row = scratch.data() + static_cast<std::size_t>(r) * m;
            const std::complex<double> wk = w[idx];
            idx += k;
            if (idx >= m) idx -= m;
            for (int c = 0; c < m; ++c) out[c] += row[c] * wk;
        }
    }

    if (sign > 0) {
        const double scale = 1.0 / (static_cast<double>(m) * m);
        for (auto& z : data) z *= scale;
    }
}

std::vector<double> autocorrelation_padded(const std::vector<double>& a, int n) {
    const int m = 2 * n;
    std::vector<std::complex<double>> buf(static_cast<std::size_t>(m) * m, {0.0, 0.0});
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            buf[static_cast<std::size_t>(r) * m + c] = a[static_cast<std::size_t>(r) * n + c];

    dft2(buf, m, -1);
    for (auto& z : buf) z = std::norm(z);
    dft2(buf, m, +1);

    std::vector<double> out(static_cast<std::size_t>(m) * m);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = buf[i].real();
    return out;
}

std::vector<double> cosine_series_on_grid(const LagFunction& gamma, int n) {
    // Fold lags modulo n; exact at the grid frequencies 2*pi*i/n.
    std::vector<std::complex<double>> buf(static_cast<std::size_t>(n) * n, {0.0, 0.0});
    for (std::size_t k = 0; k < gamma.size(); ++k) {
        const int u = ((gamma.lags[k].h1 % n) + n) % n;
        const int v = ((gamma.lags[k].h2 % n) + n) % n;
        buf[static_cast<std::size_t>(u) * n + v] += gamma.values[k];
    }
    dft2(buf, n, -1);

    // Grid point (i1, i2), 1-based, matches transform bin (i1 mod n, i2 mod n).
    std::vector<double> out(static_cast<std::size_t>(n) * n);
    for (int i1 = 1; i1 <= n; ++i1) {
        const int u = i1 % n;
        for (int i2 = 1; i2 <= n; ++i2) {
            const int v = i2 % n;
            out[static_cast<std::size_t>(i1 - 1) * n + (i2 - 1)] =
                buf[static_cast<std::size_t>(u) * n + v].real();
        }
    }
    return out;
}

void prefix_sum_2d(std::vector<double>& grid, int n) {
    for (int r = 0; r < n; ++r) {
        double* row = grid.data() + static_cast<std::size_t>(r) * n;
        for (int c = 1; c < n; ++c) row[c] += row[c - 1];
    }
    for (int r = 1; r < n; ++r) {
        double* row = grid.data() + static_cast<std::size_t>(r) * n;
        const double* prev = grid.data() + static_cast<std::size_t>(r - 1) * n;
        for (int c = 0; c < n; ++c) row[c] += prev[c];
    }
}

}  // namespace exgof
