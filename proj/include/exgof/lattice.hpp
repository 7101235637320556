#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace exgof {

enum class Marginal { raw, unit_frechet };

/// One realization of a random field on the n x n lattice {1,...,n}^2,
/// stored row-major. Values must be finite; unit_frechet-tagged fields are
/// strictly positive by construction.
struct LatticeField {
    int n = 0;
    std::vector<double> values;  // n*n, row-major
    Marginal marginal = Marginal::raw;

    LatticeField() = default;
    LatticeField(int n_, Marginal m = Marginal::raw)
        : n(n_), values(static_cast<std::size_t>(n_) * n_, 0.0), marginal(m) {
        if (n_ < 1) throw std::invalid_argument("LatticeField: n must be >= 1");
    }

    double& at(int r, int c) { return values[static_cast<std::size_t>(r) * n + c]; }
    double at(int r, int c) const { return values[static_cast<std::size_t>(r) * n + c]; }
    std::size_t size() const { return values.size(); }
};

/// Integer lag vector h = (h1, h2).
struct Lag {
    int h1 = 0;
    int h2 = 0;
    friend bool operator==(const Lag&, const Lag&) = default;
    friend auto operator<=>(const Lag&, const Lag&) = default;
};

inline double lag_norm_sq(Lag h) {
    return static_cast<double>(h.h1) * h.h1 + static_cast<double>(h.h2) * h.h2;
}

}  // namespace exgof
