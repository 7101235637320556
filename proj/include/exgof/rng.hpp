#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace exgof {

/// Seed wrapper for reproducible runs. Identical seed + parameters give
/// bit-identical output on every platform.
struct RngSeed {
    std::uint64_t value = 0;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace detail

/// Deterministic random stream. All variate transforms are inverse-CDF or
/// Box-Muller on top of the raw mt19937_64 output, so the sequence does not
/// depend on the standard library's distribution implementations.
class Rng {
  public:
    explicit Rng(RngSeed seed) : engine_(detail::splitmix64(seed.value)) {}

    /// Independent stream for replicate `index`; safe to use from parallel
    /// workers as long as each index is consumed by exactly one worker.
    static Rng derive(RngSeed seed, std::uint64_t index) {
        return Rng(RngSeed{detail::splitmix64(seed.value) ^
                           detail::splitmix64(0x51a2b3c4d5e6f708ULL + index)});
    }

    /// Uniform on the open interval (0,1).
    double uniform() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform on {0, 1, ..., n-1}, unbiased by rejection.
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// Standard normal via Box-Muller (pairs cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Standard exponential.
    double exponential() { return -std::log(uniform()); }

    /// Unit Frechet: -1/log(U).
    double frechet() { return -1.0 / std::log(uniform()); }

    /// Geometric block length with success probability theta:
    /// P(L = l) = theta (1-theta)^(l-1), l >= 1.
    std::uint64_t geometric(double theta) {
        if (theta >= 1.0) return 1;
        const double l = std::ceil(std::log(uniform()) / std::log1p(-theta));
        return l < 1.0 ? 1 : static_cast<std::uint64_t>(l);
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace exgof
