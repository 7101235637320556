#include "exgof/bootstrap2d.hpp"

#include <stdexcept>

namespace exgof {

std::vector<int> stationary_resample_1d(int n, double theta, Rng& rng) {
    if (n < 1) throw std::invalid_argument("stationary_resample_1d: n must be >= 1");
    if (!(theta > 0.0 && theta <= 1.0))
        throw std::invalid_argument("stationary_resample_1d: theta must be in (0,1]");
    std::vector<int> out;
    out.reserve(n);
    while (out.size() < static_cast<std::size_t>(n)) {
        const int start = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n)));
        std::uint64_t len = rng.geometric(theta);
        for (std::uint64_t k = 0; k < len && out.size() < static_cast<std::size_t>(n); ++k) {
            int idx = start + static_cast<int>(k % static_cast<std::uint64_t>(n));
            if (idx >= n) idx -= n;
            out.push_back(idx);
        }
    }
    return out;
}

IndexMap2D bootstrap_lattice(int n, double theta, Rng& rng) {
    IndexMap2D map;
    map.n = n;
    map.row_map = stationary_resample_1d(n, theta, rng);
    map.col_map = stationary_resample_1d(n, theta, rng);
    return map;
}

LagFunction bootstrapped_extremogram(const ExceedanceField& ex,
                                     const std::vector<Lag>& lags,
                                     const std::vector<std::vector<std::uint8_t>>& product_fields,
                                     const IndexMap2D& map) {
    const int n = ex.n;
    if (map.n != n) throw std::invalid_argument("bootstrapped_extremogram: map size mismatch");
    LagFunction out;
    out.lags = lags;
    out.values.resize(lags.size());
    const double scale = ex.plan.m_n / (static_cast<double>(n) * n);
    for (std::size_t k = 0; k < lags.size(); ++k) {
        const auto& field = product_fields[k];
        long sum = 0;
        for (int t1 = 0; t1 < n; ++t1) {
            const auto* row = field.data() + static_cast<std::size_t>(map.row_map[t1]) * n;
            for (int t2 = 0; t2 < n; ++t2) sum += row[map.col_map[t2]];
        }
        out.values[k] = scale * static_cast<double>(sum);
    }
    return out;
}

LagFunction bootstrapped_extremogram(const ExceedanceField& ex, const IndexMap2D& map, int r_n) {
    if (r_n >= ex.n) throw std::invalid_argument("bootstrapped_extremogram: r_n must be < n");
    const auto lags = capped_lag_set(r_n);
    std::vector<std::vector<std::uint8_t>> product_fields(lags.size());
    for (std::size_t k = 0; k < lags.size(); ++k)
        product_fields[k] = circular_product_field(ex, lags[k]);
    return bootstrapped_extremogram(ex, lags, product_fields, map);
}

FourierSurface bootstrapped_integrated(const LagFunction& gamma_star, int n,
                                       const WeightFunction& g) {
    return integrated_surface(gamma_star, n, g);
}

}  // namespace exgof
