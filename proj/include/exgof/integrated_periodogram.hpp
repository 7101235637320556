#pragma once

#include <vector>

#include "exgof/extremal_stats.hpp"
#include "exgof/field_sim.hpp"
#include "exgof/lattice.hpp"

namespace exgof {

/// Nonnegative weight on [0, 2*pi]^2, either g == 1 or a product
/// g1(w1) * g2(w2) of tabulated piecewise-linear functions (which keeps the
/// required second-order smoothness checkable).
class WeightFunction {
  public:
    static WeightFunction one();
    /// Tables hold values at equally spaced nodes on [0, 2*pi] (>= 2 nodes,
    /// all nonnegative); evaluation interpolates linearly.
    static WeightFunction product(std::vector<double> g1, std::vector<double> g2);

    double operator()(double w1, double w2) const { return component(0, w1) * component(1, w2); }
    /// One factor of the product form (dim 0 or 1); 1.0 for the constant case.
    double component(int dim, double x) const;
    bool is_one() const { return constant_; }

  private:
    WeightFunction() = default;
    bool constant_ = true;
    std::vector<double> g1_, g2_;
};

/// Values on the Fourier grid lambda_i = (2*pi*i1/n, 2*pi*i2/n),
/// 1 <= i1, i2 <= n, row-major at (i1-1)*n + (i2-1).
struct FourierSurface {
    int n = 0;
    std::vector<double> values;

    FourierSurface() = default;
    explicit FourierSurface(int n_) : n(n_), values(static_cast<std::size_t>(n_) * n_, 0.0) {}
    double at(int i1, int i2) const {  // 1-based grid indices
        return values[static_cast<std::size_t>(i1 - 1) * n + (i2 - 1)];
    }
    double& at(int i1, int i2) {
        return values[static_cast<std::size_t>(i1 - 1) * n + (i2 - 1)];
    }
};

/// psi_h(omega): integral of g(x) cos(h . x) over [0,omega1] x [0,omega2],
/// composite midpoint rule on a subdivisions x subdivisions refinement
/// (evaluated in separated form; algebraically identical to the double sum).
double psi_quadrature(Lag h, double omega1, double omega2, const WeightFunction& g,
                      int subdivisions);

/// Discretized kernel psi~_h(omega) = (4 pi^2 / n^2) *
/// sum_{i1<=j1, i2<=j2} g(lambda_i) cos(h . lambda_i), j_i = floor(n omega_i / 2 pi).
double psi_discrete(Lag h, double omega1, double omega2, int n, const WeightFunction& g);

/// Integrated periodogram surface J(lambda_j) = sum_h gamma(h) psi~_h(lambda_j)
/// evaluated on the whole grid via the cosine-series + prefix-sum fast path.
/// Requires max |h_i| < n.
FourierSurface integrated_surface(const LagFunction& gamma, int n, const WeightFunction& g);

/// Truncated model-side integral J(omega) = sum_{||h|| <= lag_cap} gamma(h) psi_h(omega).
double theoretical_integrated(const ModelSpec& spec, const WeightFunction& g, double omega1,
                              double omega2, int lag_cap, int subdivisions);

}  // namespace exgof
