#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exgof/lattice.hpp"

namespace exgof {

/// Exceedance threshold: a_mn is the empirical (1 - p0) quantile of the
/// reference sample, m_n = 1/p0.
struct ThresholdPlan {
    double p0 = 0.0;
    double m_n = 0.0;
    double a_mn = 0.0;
};

/// Binary exceedance indicators I_t = 1(value_t > a_mn).
struct ExceedanceField {
    int n = 0;
    std::vector<std::uint8_t> indicators;  // n*n row-major
    ThresholdPlan plan;

    std::uint8_t at(int r, int c) const {
        return indicators[static_cast<std::size_t>(r) * n + c];
    }
    std::size_t exceedance_count() const;
};

/// Finite-support map from integer lags to reals, lags sorted
/// lexicographically.
struct LagFunction {
    std::vector<Lag> lags;
    std::vector<double> values;

    std::size_t size() const { return lags.size(); }
    /// Value at h, or 0 when h is outside the support.
    double value_at(Lag h) const;
    int max_abs_component() const;
};

/// All lags with |h1|, |h2| <= n-1 and ||h|| < n (the full set paired by an
/// n x n lattice).
std::vector<Lag> full_lag_set(int n);

/// All lags with ||h|| <= cap (Euclidean).
std::vector<Lag> capped_lag_set(int cap);

/// Order statistic at 1-based index ceil(p * N) of the ascending sort.
double empirical_quantile(std::vector<double> values, double p);

/// Threshold resolved from the pooled values of the given fields at
/// exceedance probability p0: a_mn at p = 1 - p0, m_n = 1/p0.
ThresholdPlan threshold_from_pool(const std::vector<const LatticeField*>& fields, double p0);
ThresholdPlan threshold_from_pool(const LatticeField& field, double p0);

/// Indicator field of a lattice field under a resolved plan (strict >).
ExceedanceField exceedances(const LatticeField& field, const ThresholdPlan& plan);

/// Empirical extremogram: (m_n/n^2) * sum over non-circular valid pairs of
/// centered indicators (I_t - p0)(I_{t+h} - p0), over the full lag set by
/// default or all ||h|| <= lag_cap. Pair sums are evaluated through one
/// padded autocorrelation transform.
LagFunction empirical_extremogram(const ExceedanceField& ex);
LagFunction empirical_extremogram(const ExceedanceField& ex, int lag_cap);

/// C_n(h): mean over all n^2 positions of I_t * I_{t+h} with both
/// coordinates wrapped modulo n.
double circular_pair_mean(const ExceedanceField& ex, Lag h);

/// Product field I_t(h) = I_t * I_{t + h mod n} on the original lattice.
std::vector<std::uint8_t> circular_product_field(const ExceedanceField& ex, Lag h);

/// Truncated extremogram gamma_hat(h) = m_n * C_n(h) for ||h|| <= r_n.
LagFunction truncated_extremogram(const ExceedanceField& ex, int r_n);

/// Cosine series sum_h gamma(h) cos(h . omega) at one frequency.
double extremal_periodogram(const LagFunction& gamma, double omega1, double omega2);

/// Same series on the full Fourier grid (fast transform path); values
/// row-major with (i1, i2), 1-based, at (i1-1)*n + (i2-1).
std::vector<double> extremal_periodogram_grid(const LagFunction& gamma, int n);

}  // namespace exgof
