#include "exgof/field_sim.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace exgof {

void validate(const ModelSpec& spec) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, MmaSpec>) {
                if (!(s.phi > 0.0)) throw std::invalid_argument("mma: phi must be > 0");
                if (s.radius < 0) throw std::invalid_argument("mma: radius must be >= 0");
            } else if constexpr (std::is_same_v<T, BrownResnickSpec>) {
                if (!(s.hurst > 0.0 && s.hurst < 1.0))
                    throw std::invalid_argument("brown-resnick: hurst must be in (0,1)");
                if (s.terms < 1) throw std::invalid_argument("brown-resnick: terms must be >= 1");
            } else {
                if (!(s.beta > 0.0 && s.beta <= 2.0))
                    throw std::invalid_argument("brown-resnick variogram: beta must be in (0,2]");
                if (!(s.scale > 0.0))
                    throw std::invalid_argument("brown-resnick variogram: scale must be > 0");
                if (s.terms < 1)
                    throw std::invalid_argument("brown-resnick variogram: terms must be >= 1");
            }
        },
        spec);
}

double mma_weight(Lag s, double phi, int radius) {
    const int l1 = std::abs(s.h1) + std::abs(s.h2);
    return l1 <= radius ? std::pow(phi, l1) : 0.0;
}

double mma_weight_sum(double phi, int radius) {
    double sum = 0.0;
    for (int a = -radius; a <= radius; ++a)
        for (int b = -radius; b <= radius; ++b) sum += mma_weight({a, b}, phi, radius);
    return sum;
}

double fbf_covariance(double s1, double s2, double t1, double t2, double hurst) {
    const double ns = std::hypot(s1, s2);
    const double nt = std::hypot(t1, t2);
    const double nd = std::hypot(s1 - t1, s2 - t2);
    const double p = 2.0 * hurst;
    return 0.5 * (std::pow(ns, p) + std::pow(nt, p) - std::pow(nd, p));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

namespace {

// Variogram-halved argument inside the normal CDF for the BR extremograms.
double br_delta(const ModelSpec& spec, Lag h) {
    if (const auto* br = std::get_if<BrownResnickSpec>(&spec)) {
        const double nh = std::hypot(h.h1, h.h2);
        return 0.5 * std::pow(nh, 2.0 * br->hurst);
    }
    const auto& vg = std::get<BrownResnickVariogramSpec>(spec);
    const double nh = std::hypot(h.h1 / vg.scale, h.h2 / vg.scale);
    return 0.5 * std::pow(nh, vg.beta);
}

}  // namespace

double theoretical_extremogram(const ModelSpec& spec, Lag h) {
    if (const auto* mma = std::get_if<MmaSpec>(&spec)) {
        const int r = mma->radius;
        double overlap = 0.0;
        for (int a = -r; a <= r; ++a)
            for (int b = -r; b <= r; ++b)
                overlap += std::min(mma_weight({a, b}, mma->phi, r),
                                    mma_weight({a + h.h1, b + h.h2}, mma->phi, r));
        return overlap / mma_weight_sum(mma->phi, r);
    }
    return 2.0 * (1.0 - normal_cdf(std::sqrt(br_delta(spec, h))));
}

double spectral_density_from_extremogram(const std::vector<std::pair<Lag, double>>& gamma,
                                         double omega1, double omega2) {
    double f = 0.0;
    for (const auto& [h, v] : gamma) f += v * std::cos(h.h1 * omega1 + h.h2 * omega2);
    return f;
}

std::vector<std::pair<Lag, double>> extremogram_table(const ModelSpec& spec, int lag_cap) {
    std::vector<std::pair<Lag, double>> table;
    const long cap_sq = static_cast<long>(lag_cap) * lag_cap;
    for (int a = -lag_cap; a <= lag_cap; ++a)
        for (int b = -lag_cap; b <= lag_cap; ++b) {
            if (static_cast<long>(a) * a + static_cast<long>(b) * b > cap_sq) continue;
            const double v = theoretical_extremogram(spec, {a, b});
            if (v != 0.0) table.push_back({{a, b}, v});
        }
    return table;
}

double theoretical_spectral_density(const ModelSpec& spec, double omega1, double omega2,
                                    int lag_cap) {
    if (lag_cap < 0) throw std::invalid_argument("theoretical_spectral_density: lag_cap < 0");
    return spectral_density_from_extremogram(extremogram_table(spec, lag_cap), omega1, omega2);
}

// ---------------------------------------------------------------------------
// Simulation
// ---------------------------------------------------------------------------

struct Simulator::Impl {
    ModelSpec spec;
    int n = 0;

    // MMA state
    int radius = 0;
    std::vector<double> weights;  // (2r+1)^2 table

    // Brown-Resnick state
    Eigen::MatrixXd chol;  // lower factor of the grid covariance
    std::vector<double> delta;  // var(W_s)/2 per grid point
    int terms = 0;
};

namespace {

// Covariance of the driving Gaussian field at grid points s, t in {1..n}^2.
double br_cov(const ModelSpec& spec, double s1, double s2, double t1, double t2) {
    if (const auto* br = std::get_if<BrownResnickSpec>(&spec))
        return fbf_covariance(s1, s2, t1, t2, br->hurst);
    const auto& vg = std::get<BrownResnickVariogramSpec>(spec);
    return fbf_covariance(s1 / vg.scale, s2 / vg.scale, t1 / vg.scale, t2 / vg.scale,
                          0.5 * vg.beta);
}

Eigen::MatrixXd build_br_factor(const ModelSpec& spec, int n) {
    const int dim = n * n;
    Eigen::MatrixXd cov(dim, dim);
    double max_diag = 0.0;
    for (int a = 0; a < dim; ++a) {
        const double s1 = a / n + 1, s2 = a % n + 1;
        for (int b = 0; b <= a; ++b) {
            const double t1 = b / n + 1, t2 = b % n + 1;
            const double v = br_cov(spec, s1, s2, t1, t2);
            cov(a, b) = v;
            cov(b, a) = v;
        }
        max_diag = std::max(max_diag, cov(a, a));
    }
    // Jitter levels are relative to the largest variance on the grid.
    for (double level : {0.0, 1e-12, 1e-10, 1e-8}) {
        Eigen::MatrixXd m = cov;
        if (level > 0.0) m.diagonal().array() += level * max_diag;
        Eigen::LLT<Eigen::MatrixXd> llt(m);
        if (llt.info() == Eigen::Success) return llt.matrixL();
    }
    throw std::runtime_error(
        "brown-resnick covariance is not numerically positive semidefinite (bad hurst or grid)");
}

}  // namespace

Simulator::Simulator(ModelSpec spec, int n, SimulatorOptions opts) : impl_(new Impl) {
    validate(spec);
    if (n < 1) throw std::invalid_argument("simulate: n must be >= 1");
    impl_->spec = spec;
    impl_->n = n;

    if (const auto* mma = std::get_if<MmaSpec>(&spec)) {
        impl_->radius = mma->radius;
        const int w = 2 * mma->radius + 1;
        impl_->weights.resize(static_cast<std::size_t>(w) * w);
        for (int a = -mma->radius; a <= mma->radius; ++a)
            for (int b = -mma->radius; b <= mma->radius; ++b)
                impl_->weights[static_cast<std::size_t>(a + mma->radius) * w +
                               (b + mma->radius)] = mma_weight({a, b}, mma->phi, mma->radius);
        return;
    }

    if (n > 128 && !opts.allow_large_grids)
        throw std::invalid_argument(
            "brown-resnick: n > 128 needs SimulatorOptions::allow_large_grids (dense n^2 x n^2 "
            "Cholesky)");
    impl_->terms = std::holds_alternative<BrownResnickSpec>(spec)
                       ? std::get<BrownResnickSpec>(spec).terms
                       : std::get<BrownResnickVariogramSpec>(spec).terms;
    impl_->chol = build_br_factor(spec, n);
    impl_->delta.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n * n; ++a) {
        const double s1 = a / n + 1, s2 = a % n + 1;
        impl_->delta[a] = 0.5 * br_cov(spec, s1, s2, s1, s2);  // var(W_s)/2
    }
}

Simulator::~Simulator() = default;
Simulator::Simulator(Simulator&&) noexcept = default;
Simulator& Simulator::operator=(Simulator&&) noexcept = default;

int Simulator::n() const { return impl_->n; }
const ModelSpec& Simulator::spec() const { return impl_->spec; }

LatticeField Simulator::draw(RngSeed seed) const {
    const int n = impl_->n;
    Rng rng(seed);
    LatticeField field(n, Marginal::raw);

    if (std::holds_alternative<MmaSpec>(impl_->spec)) {
        const int r = impl_->radius;
        const int pn = n + 2 * r;
        std::vector<double> noise(static_cast<std::size_t>(pn) * pn);
        for (auto& z : noise) z = rng.frechet();
        return mma_from_noise(std::get<MmaSpec>(impl_->spec), n, noise);
    }

    const int dim = n * n;
    Eigen::VectorXd z(dim), w(dim);
    double gamma = 0.0;
    std::fill(field.values.begin(), field.values.end(), 0.0);
    for (int j = 0; j < impl_->terms; ++j) {
        gamma += rng.exponential();
        for (int k = 0; k < dim; ++k) z(k) = rng.normal();
        w.noalias() = impl_->chol.triangularView<Eigen::Lower>() * z;
        const double inv_gamma = 1.0 / gamma;
        for (int k = 0; k < dim; ++k) {
            const double x = inv_gamma * std::exp(w(k) - impl_->delta[k]);
            if (x > field.values[k]) field.values[k] = x;
        }
    }
    return field;
}

LatticeField mma_from_noise(const MmaSpec& spec, int n, const std::vector<double>& padded_noise) {
    validate(ModelSpec{spec});
    if (n < 1) throw std::invalid_argument("simulate: n must be >= 1");
    const int r = spec.radius;
    const int pn = n + 2 * r;
    if (padded_noise.size() != static_cast<std::size_t>(pn) * pn)
        throw std::invalid_argument("mma_from_noise: noise must cover the padded lattice");

    const int w = 2 * r + 1;
    std::vector<double> weights(static_cast<std::size_t>(w) * w);
    for (int a = -r; a <= r; ++a)
        for (int b = -r; b <= r; ++b)
            weights[static_cast<std::size_t>(a + r) * w + (b + r)] = mma_weight({a, b}, spec.phi, r);

    LatticeField field(n, Marginal::raw);
#pragma omp parallel for schedule(static)
    for (int t1 = 0; t1 < n; ++t1) {
        for (int t2 = 0; t2 < n; ++t2) {
            double best = 0.0;
            for (int a = -r; a <= r; ++a) {
                const double* noise_row =
                    padded_noise.data() + static_cast<std::size_t>(t1 - a + r) * pn;
                const double* wrow = weights.data() + static_cast<std::size_t>(a + r) * w;
                for (int b = -r; b <= r; ++b) {
                    const double v = wrow[b + r] * noise_row[t2 - b + r];
                    if (v > best) best = v;
                }
            }
            field.at(t1, t2) = best;
        }
    }
    return field;
}

LatticeField simulate_mma(const MmaSpec& spec, int n, RngSeed seed) {
    return Simulator(ModelSpec{spec}, n).draw(seed);
}

LatticeField simulate_brown_resnick(const BrownResnickSpec& spec, int n, RngSeed seed,
                                    SimulatorOptions opts) {
    return Simulator(ModelSpec{spec}, n, opts).draw(seed);
}

LatticeField simulate(const ModelSpec& spec, int n, RngSeed seed, SimulatorOptions opts) {
    return Simulator(spec, n, opts).draw(seed);
}

void to_unit_frechet(std::vector<LatticeField*> fields) {
    std::size_t total = 0;
    for (const auto* f : fields) total += f->values.size();
    if (total < 2) throw std::invalid_argument("to_unit_frechet: need at least 2 pooled values");

    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double*> slot(total);
    {
        std::size_t k = 0;
        for (auto* f : fields)
            for (auto& v : f->values) slot[k++] = &v;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return *slot[a] < *slot[b]; });

    const double denom = static_cast<double>(total) + 1.0;
    for (std::size_t rank = 0; rank < total; ++rank)
        *slot[order[rank]] = -1.0 / std::log((static_cast<double>(rank) + 1.0) / denom);
    for (auto* f : fields) f->marginal = Marginal::unit_frechet;
}

LatticeField to_unit_frechet(const LatticeField& field) {
    LatticeField out = field;
    to_unit_frechet(std::vector<LatticeField*>{&out});
    return out;
}

}  // namespace exgof
