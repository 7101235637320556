#pragma once

#include "exgof/extremal_stats.hpp"
#include "exgof/integrated_periodogram.hpp"

namespace exgof::reference {

// Serial reference implementations of the spectral kernels. These are the
// definitions written out as plain loops; the optimized paths in
// extremal_stats / integrated_periodogram must agree with them (unit and
// acceptance suites check the agreement, the CLI exposes them via --naive).

/// Pair-by-pair empirical extremogram over the given lag set.
LagFunction empirical_extremogram(const ExceedanceField& ex, const std::vector<Lag>& lags);

/// Cosine series evaluated lag by lag at every grid frequency.
std::vector<double> periodogram_grid(const LagFunction& gamma, int n);

/// psi~_h by its literal double sum.
double psi_discrete_loop(Lag h, double omega1, double omega2, int n, const WeightFunction& g);

/// psi_h midpoint quadrature by its literal double sum.
double psi_quadrature_loop(Lag h, double omega1, double omega2, const WeightFunction& g,
                           int subdivisions);

/// Integrated surface as the direct lag sum of gamma(h) * psi~_h(lambda_j).
FourierSurface integrated_surface(const LagFunction& gamma, int n, const WeightFunction& g);

}  // namespace exgof::reference
