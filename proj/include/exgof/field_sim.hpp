#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "exgof/lattice.hpp"
#include "exgof/rng.hpp"

namespace exgof {

/// Max-moving-average field: pointwise max of weighted unit Frechet noise,
/// weight phi^(|s1|+|s2|) truncated to the L1 ball of the given radius.
struct MmaSpec {
    double phi = 0.5;
    int radius = 5;
};

/// Truncated Brown-Resnick field driven by an isotropic fractional Brownian
/// field with Hurst index `hurst`; the spectral supremum is truncated at
/// `terms` Poisson points.
struct BrownResnickSpec {
    double hurst = 0.5;
    int terms = 1000;
};

/// Brown-Resnick field parameterized through its variogram ||h/scale||^beta.
struct BrownResnickVariogramSpec {
    double beta = 1.0;
    double scale = 1.0;
    int terms = 1000;
};

using ModelSpec = std::variant<MmaSpec, BrownResnickSpec, BrownResnickVariogramSpec>;

/// Throws std::invalid_argument when a parameter is out of range
/// (phi > 0, hurst in (0,1), beta in (0,2], scale > 0, radius >= 0, terms >= 1).
void validate(const ModelSpec& spec);

/// MMA weight phi^(|s1|+|s2|), zero outside the L1 ball of `radius`.
double mma_weight(Lag s, double phi, int radius);

/// Total weight mass sum_s w(s); the MMA marginal is Frechet with this scale.
double mma_weight_sum(double phi, int radius);

/// Covariance of the isotropic fractional Brownian field,
/// (||s||^2H + ||t||^2H - ||s-t||^2H) / 2 with Euclidean norms.
double fbf_covariance(double s1, double s2, double t1, double t2, double hurst);

/// Standard normal CDF.
double normal_cdf(double x);

/// Limit conditional exceedance probability at lag h for the given model.
double theoretical_extremogram(const ModelSpec& spec, Lag h);

/// Truncated cosine series sum_{||h|| <= lag_cap} gamma(h) cos(h . omega)
/// with gamma supplied as a callable; `spec` overload uses the model's
/// extremogram.
double spectral_density_from_extremogram(const std::vector<std::pair<Lag, double>>& gamma,
                                         double omega1, double omega2);
double theoretical_spectral_density(const ModelSpec& spec, double omega1, double omega2,
                                    int lag_cap);

/// Model extremogram tabulated on the Euclidean lag ball ||h|| <= lag_cap,
/// zero entries dropped.
std::vector<std::pair<Lag, double>> extremogram_table(const ModelSpec& spec, int lag_cap);

struct SimulatorOptions {
    /// Dense Cholesky of the n^2 x n^2 Brown-Resnick covariance is refused
    /// for n > 128 unless overridden.
    bool allow_large_grids = false;
};

/// Reusable sampler: model-specific state (weight table or Cholesky factor)
/// is built once and shared read-only across draws, so replicate loops can
/// call draw() concurrently with derived seeds.
class Simulator {
  public:
    Simulator(ModelSpec spec, int n, SimulatorOptions opts = {});
    ~Simulator();
    Simulator(Simulator&&) noexcept;
    Simulator& operator=(Simulator&&) noexcept;

    LatticeField draw(RngSeed seed) const;
    int n() const;
    const ModelSpec& spec() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// One-shot wrappers around Simulator.
LatticeField simulate_mma(const MmaSpec& spec, int n, RngSeed seed);
LatticeField simulate_brown_resnick(const BrownResnickSpec& spec, int n, RngSeed seed,
                                    SimulatorOptions opts = {});
LatticeField simulate(const ModelSpec& spec, int n, RngSeed seed, SimulatorOptions opts = {});

/// MMA field built from caller-supplied noise on the padded lattice
/// (n + 2*radius per side, row-major); exposed so tests can perturb the
/// noise directly.
LatticeField mma_from_noise(const MmaSpec& spec, int n, const std::vector<double>& padded_noise);

/// Pooled rank transform to unit Frechet marginals: the value of pooled rank
/// r (ascending, ties broken by pooled flat index) maps to -1/log(r/(N+1)).
/// Fields are transformed in place and tagged unit_frechet.
void to_unit_frechet(std::vector<LatticeField*> fields);
LatticeField to_unit_frechet(const LatticeField& field);

}  // namespace exgof
