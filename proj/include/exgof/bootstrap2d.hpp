#pragma once

#include <vector>

#include "exgof/extremal_stats.hpp"
#include "exgof/integrated_periodogram.hpp"
#include "exgof/rng.hpp"

namespace exgof {

/// Stationary-bootstrap settings. theta is the geometric block parameter;
/// blocks have mean length 1/theta and wrap circularly.
struct BootstrapConfig {
    double theta = 0.0;
    int replicates = 0;  // B
    int r_n = 0;
    RngSeed seed;
};

/// Composition of two independent 1-D stationary resamples:
/// t* = (row_map[t1], col_map[t2]), entries 0-based in {0,...,n-1}.
struct IndexMap2D {
    int n = 0;
    std::vector<int> row_map;
    std::vector<int> col_map;
};

/// One stationary resample of {0,...,n-1}: geometric-length blocks with
/// uniform starts, circular extension, truncated to exactly n entries.
std::vector<int> stationary_resample_1d(int n, double theta, Rng& rng);

/// Row resample then an independent column resample.
IndexMap2D bootstrap_lattice(int n, double theta, Rng& rng);

/// Bootstrapped extremogram gamma*(h) = (m_n/n^2) sum_t P_h(t*), where P_h is
/// the circular product field of `ex` and one shared map is used for every
/// lag of the replicate.
LagFunction bootstrapped_extremogram(const ExceedanceField& ex, const IndexMap2D& map, int r_n);

/// Same, with the product fields precomputed once per lag (shared read-only
/// across replicates).
LagFunction bootstrapped_extremogram(const ExceedanceField& ex,
                                     const std::vector<Lag>& lags,
                                     const std::vector<std::vector<std::uint8_t>>& product_fields,
                                     const IndexMap2D& map);

/// Integrated periodogram of a bootstrapped extremogram (delegates to
/// integrated_surface).
FourierSurface bootstrapped_integrated(const LagFunction& gamma_star, int n,
                                       const WeightFunction& g);

}  // namespace exgof
