#pragma once

#include <complex>
#include <vector>

#include "exgof/lattice.hpp"

namespace exgof {

struct LagFunction;

/// Row-column discrete Fourier transform of an m x m complex array
/// (exponent sign -1 forward, +1 inverse; the inverse applies the 1/m^2
/// factor). O(m^3), OpenMP over rows/columns.
void dft2(std::vector<std::complex<double>>& data, int m, int sign);

/// Non-circular (zero-padded) autocorrelation of an n x n real array:
/// result[h] = sum over t with t, t+h in the lattice of a[t] * a[t+h],
/// for all box lags |h1|, |h2| <= n-1.  Returned as a (2n) x (2n) array with
/// lag h stored at ((h1 mod 2n), (h2 mod 2n)).
std::vector<double> autocorrelation_padded(const std::vector<double>& a, int n);

/// Cosine series of a lag function evaluated on the full Fourier grid
/// lambda_i = (2*pi*i1/n, 2*pi*i2/n), 1 <= i1, i2 <= n:
///   F(lambda_i) = sum_h gamma(h) cos(h . lambda_i).
/// Lags are folded modulo n (exact at grid frequencies) and the grid values
/// come from one row-column transform.  Output is row-major with (i1, i2)
/// stored at (i1-1)*n + (i2-1).
std::vector<double> cosine_series_on_grid(const LagFunction& gamma, int n);

/// In-place 2-D inclusive prefix sum over the 1-based grid layout used by
/// cosine_series_on_grid: out[j1][j2] = sum_{i1<=j1, i2<=j2} in[i1][i2].
/// Row sweep then column sweep; fixed order, no cancellation.
void prefix_sum_2d(std::vector<double>& grid, int n);

}  // namespace exgof
