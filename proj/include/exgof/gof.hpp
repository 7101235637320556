#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exgof/bootstrap2d.hpp"
#include "exgof/extremal_stats.hpp"
#include "exgof/field_sim.hpp"
#include "exgof/integrated_periodogram.hpp"

namespace exgof {

enum class Family { mma, brown_resnick };

std::string family_name(Family f);
ModelSpec make_family_spec(Family f, double parameter);

/// Raised for degenerate data states that the CLI escalates only under
/// --strict.
struct DegenerateDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ThetaRule { fixed, inverse_n, rn_over_mn };

struct GofConfig {
    double p0 = 0.05;
    int replicates = 2000;  // B
    double alpha = 0.05;
    WeightFunction g = WeightFunction::one();
    int r_n = 0;            // 0: use floor(r_n_c * log n)
    double r_n_c = 2.0;
    double theta = 0.0;     // used when theta_rule == fixed
    ThetaRule theta_rule = ThetaRule::inverse_n;
    int lag_cap_theory = 10;
    RngSeed seed;
    bool naive = false;     // force the serial reference kernels
};

double m_n(const GofConfig& cfg);
int resolved_r_n(const GofConfig& cfg, int n);
double resolved_theta(const GofConfig& cfg, int n);
/// Throws std::invalid_argument on out-of-range settings; returns warnings
/// (small B, non-decreasing bootstrap schedule quantities, ...).
std::vector<std::string> validate(const GofConfig& cfg, int n);

/// Grenander-Rosenblatt statistic:
/// (n / sqrt(m_n)) * max over the grid of |surface - centering|.
double grs_statistic(const FourierSurface& surface, const FourierSurface& centering, int n,
                     double mn);

struct WhittleOptions {
    double p0 = 0.05;
    int r_n = 0;  // 0: floor(2 log n)
    std::vector<double> parameter_grid;  // empty: family default
    bool naive = false;
};

std::vector<double> default_parameter_grid(Family f);

/// Least-squares spectral contrast on the Fourier grid between a truncated
/// periodogram surface and the model's cosine series over the same lag ball.
double whittle_contrast(const std::vector<double>& f_obs_grid, Family family, double parameter,
                        int n, int r_n);

/// argmin of the contrast over the parameter grid, refined by one
/// golden-section pass on the bracketing interval; exact zero contrast on a
/// grid point short-circuits to that point.
double whittle_estimate_from_spectrum(const std::vector<double>& f_obs_grid, Family family, int n,
                                      int r_n, const std::vector<double>& grid);

/// Full estimator: thresholds the (unit-Frechet) observation at its own
/// empirical p0-quantile, forms the truncated periodogram, and minimizes the
/// contrast.
double whittle_estimate(const LatticeField& observed, Family family, const WhittleOptions& opts);

/// Simulation half of the test: B replicate fields from `model`, pooled
/// threshold, one integrated-periodogram surface per replicate, centering =
/// replicate mean surface, statistics via grs_statistic. When `observed` is
/// supplied its surface and statistic use the same threshold and centering.
struct SimulationNull {
    ThresholdPlan plan;
    FourierSurface centering;
    std::vector<double> stats;  // T_n(b), b = 1..B
    double t_obs = 0.0;
    FourierSurface observed_surface;
    bool observed_degenerate = false;  // observed field has no exceedances
};
SimulationNull simulate_null_statistics(const ModelSpec& model, int n, const GofConfig& cfg,
                                        const LatticeField* observed_unit_frechet);

/// Bootstrap half: B stationary resamples of the observed indicators,
/// bootstrapped extremogram and surface per replicate, centering = replicate
/// mean, statistics via grs_statistic. t_obs_star centers the observation's
/// own truncated surface.
struct BootstrapNull {
    FourierSurface centering;
    std::vector<double> stats;  // T*_n(b), b = 1..B
    double t_obs_star = 0.0;
};
BootstrapNull bootstrap_statistics(const ExceedanceField& observed, const GofConfig& cfg);

struct McResult {
    double estimate = 0.0;
    ThresholdPlan plan;
    FourierSurface centering;
    std::vector<double> sim_stats;
    double c_sim = 0.0;
    double t_obs = 0.0;
    FourierSurface observed_surface;
    std::vector<std::string> warnings;
};

/// Estimate the family parameter, simulate the fitted null, and return the
/// simulation-based critical value together with the observed statistic.
/// `observed` may be raw; it is rank-standardized internally.
McResult mc_critical_value(const LatticeField& observed, Family family, const GofConfig& cfg);

struct BootResult {
    std::vector<double> boot_stats;
    double c_boot = 0.0;
    FourierSurface centering;
};

/// Bootstrap-based critical value from the observed indicators under the
/// plan already resolved by the simulation procedure.
BootResult bootstrap_critical_value(const LatticeField& observed_unit_frechet,
                                    const ThresholdPlan& plan, const GofConfig& cfg);

struct TestDecisions {
    bool sim_reject = false;
    bool boot_reject = false;
    bool combined_reject = false;
};

struct TestReport {
    int n = 0;
    double t_obs = 0.0;
    double c_sim = 0.0;
    double c_boot = 0.0;
    double alpha = 0.0;
    double p0 = 0.0;
    int replicates = 0;
    Family family = Family::mma;
    double estimate = 0.0;
    TestDecisions decisions;
    std::vector<double> sim_stats;
    std::vector<double> boot_stats;
    FourierSurface normalized_difference;  // (n/sqrt(m_n)) |J_obs - centering|
    std::vector<std::string> warnings;
};

/// End-to-end test: simulation and bootstrap critical values share one
/// threshold; rejection rules are t_obs > c_sim, t_obs > c_boot, and
/// t_obs > min(c_sim, c_boot).
TestReport run_test(const LatticeField& observed, Family family, const GofConfig& cfg);

}  // namespace exgof
