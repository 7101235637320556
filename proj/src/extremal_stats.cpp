#include "exgof/extremal_stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "exgof/fourier_kernels.hpp"

namespace exgof {

std::size_t ExceedanceField::exceedance_count() const {
    std::size_t c = 0;
    for (auto v : indicators) c += v;
    return c;
}

double LagFunction::value_at(Lag h) const {
    const auto it = std::lower_bound(lags.begin(), lags.end(), h);
    if (it == lags.end() || *it != h) return 0.0;
    return values[static_cast<std::size_t>(it - lags.begin())];
}

int LagFunction::max_abs_component() const {
    int m = 0;
    for (const auto& h : lags) m = std::max({m, std::abs(h.h1), std::abs(h.h2)});
    return m;
}

std::vector<Lag> full_lag_set(int n) {
    std::vector<Lag> lags;
    const long bound = static_cast<long>(n) * n;  // ||h||^2 < n^2
    for (int a = -(n - 1); a <= n - 1; ++a)
        for (int b = -(n - 1); b <= n - 1; ++b)
            if (static_cast<long>(a) * a + static_cast<long>(b) * b < bound)
                lags.push_back({a, b});
    return lags;
}

std::vector<Lag> capped_lag_set(int cap) {
    std::vector<Lag> lags;
    const long bound = static_cast<long>(cap) * cap;
    for (int a = -cap; a <= cap; ++a)
        for (int b = -cap; b <= cap; ++b)
            if (static_cast<long>(a) * a + static_cast<long>(b) * b <= bound)
                lags.push_back({a, b});
    return lags;
}

double empirical_quantile(std::vector<double> values, double p) {
    if (values.empty()) throw std::invalid_argument("empirical_quantile: empty input");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("empirical_quantile: p must be in (0,1)");
    const auto n = values.size();
    auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(n)));
    if (rank < 1) rank = 1;
    if (rank > n) rank = n;
    std::nth_element(values.begin(), values.begin() + (rank - 1), values.end());
    return values[rank - 1];
}

ThresholdPlan threshold_from_pool(const std::vector<const LatticeField*>& fields, double p0) {
    if (!(p0 > 0.0 && p0 < 1.0)) throw std::invalid_argument("threshold_from_pool: p0 must be in (0,1)");
    std::vector<double> pool;
    for (const auto* f : fields) pool.insert(pool.end(), f->values.begin(), f->values.end());
    ThresholdPlan plan;
    plan.p0 = p0;
    plan.m_n = 1.0 / p0;
    plan.a_mn = empirical_quantile(std::move(pool), 1.0 - p0);
    return plan;
}

ThresholdPlan threshold_from_pool(const LatticeField& field, double p0) {
    return threshold_from_pool(std::vector<const LatticeField*>{&field}, p0);
}

ExceedanceField exceedances(const LatticeField& field, const ThresholdPlan& plan) {
    ExceedanceField ex;
    ex.n = field.n;
    ex.plan = plan;
    ex.indicators.resize(field.values.size());
    for (std::size_t i = 0; i < field.values.size(); ++i)
        ex.indicators[i] = field.values[i] > plan.a_mn ? 1 : 0;
    return ex;
}

namespace {

LagFunction extremogram_over(const ExceedanceField& ex, std::vector<Lag> lags) {
    const int n = ex.n;
    const double p0 = ex.plan.p0;
    std::vector<double> centered(ex.indicators.size());
    for (std::size_t i = 0; i < centered.size(); ++i)
        centered[i] = static_cast<double>(ex.indicators[i]) - p0;

    const auto corr = autocorrelation_padded(centered, n);
    const int m = 2 * n;
    const double scale = ex.plan.m_n / (static_cast<double>(n) * n);

    LagFunction out;
    out.lags = std::move(lags);
    out.values.resize(out.lags.size());
    for (std::size_t k = 0; k < out.lags.size(); ++k) {
        const int u = ((out.lags[k].h1 % m) + m) % m;
        const int v = ((out.lags[k].h2 % m) + m) % m;
        out.values[k] = scale * corr[static_cast<std::size_t>(u) * m + v];
    }
    return out;
}

}  // namespace

LagFunction empirical_extremogram(const ExceedanceField& ex) {
    return extremogram_over(ex, full_lag_set(ex.n));
}

LagFunction empirical_extremogram(const ExceedanceField& ex, int lag_cap) {
    if (lag_cap >= ex.n) throw std::invalid_argument("empirical_extremogram: lag_cap must be < n");
    return extremogram_over(ex, capped_lag_set(lag_cap));
}

double circular_pair_mean(const ExceedanceField& ex, Lag h) {
    const int n = ex.n;
    const int d1 = ((h.h1 % n) + n) % n;
    const int d2 = ((h.h2 % n) + n) % n;
    long sum = 0;
    for (int r = 0; r < n; ++r) {
        const int rr = r + d1 >= n ? r + d1 - n : r + d1;
        const auto* row = ex.indicators.data() + static_cast<std::size_t>(r) * n;
        const auto* shifted = ex.indicators.data() + static_cast<std::size_t>(rr) * n;
        for (int c = 0; c < n; ++c) {
            const int cc = c + d2 >= n ? c + d2 - n : c + d2;
            sum += row[c] & shifted[cc];
        }
    }
    return static_cast<double>(sum) / (static_cast<double>(n) * n);
}

std::vector<std::uint8_t> circular_product_field(const ExceedanceField& ex, Lag h) {
    const int n = ex.n;
    const int d1 = ((h.h1 % n) + n) % n;
    const int d2 = ((h.h2 % n) + n) % n;
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        const int rr = r + d1 >= n ? r + d1 - n : r + d1;
        const auto* row = ex.indicators.data() + static_cast<std::size_t>(r) * n;
        const auto* shifted = ex.indicators.data() + static_cast<std::size_t>(rr) * n;
        auto* dst = out.data() + static_cast<std::size_t>(r) * n;
        for (int c = 0; c < n; ++c) {
            const int cc = c + d2 >= n ? c + d2 - n : c + d2;
            dst[c] = row[c] & shifted[cc];
        }
    }
    return out;
}

LagFunction truncated_extremogram(const ExceedanceField& ex, int r_n) {
    if (r_n >= ex.n) throw std::invalid_argument("truncated_extremogram: r_n must be < n");
    LagFunction out;
    out.lags = capped_lag_set(r_n);
    out.values.resize(out.lags.size());
    const double mn = ex.plan.m_n;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(out.lags.size()); ++k)
        out.values[k] = mn * circular_pair_mean(ex, out.lags[k]);
    return out;
}

double extremal_periodogram(const LagFunction& gamma, double omega1, double omega2) {
    double f = 0.0;
    for (std::size_t k = 0; k < gamma.size(); ++k)
        f += gamma.values[k] * std::cos(gamma.lags[k].h1 * omega1 + gamma.lags[k].h2 * omega2);
    return f;
}

std::vector<double> extremal_periodogram_grid(const LagFunction& gamma, int n) {
    return cosine_series_on_grid(gamma, n);
}

}  // namespace exgof
