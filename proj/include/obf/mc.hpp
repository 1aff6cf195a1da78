#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "obf/pathloss.hpp"
#include "obf/system.hpp"

namespace obf {

enum class SimMode { Projection, ExplicitBeams };

inline const char* to_string(SimMode m) {
    return m == SimMode::Projection ? "projection" : "explicit";
}

// Counter-based stream derivation: every trial owns an independent engine
// seeded from (master_seed, trial index), so results do not depend on how
// trials are scheduled across workers.
struct SimSeed {
    std::uint64_t master = 1;

    std::uint64_t stream(std::uint64_t trial_index) const {
        // splitmix64 finalizer over master + golden-ratio stride
        std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (trial_index + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine(std::uint64_t trial_index) const {
        return std::mt19937_64(stream(trial_index));
    }
};

struct UserSample {
    double distance;
    double gain;
};

// One Poisson realization of the cell: N ~ Poisson(lambda pi D^2) users,
// each at distance D sqrt(U) (area-uniform placement).  U is drawn from
// (0,1] via 1-u so an exact-origin user, where the unbounded gain law is
// undefined, cannot occur.
inline std::vector<UserSample> drop_users(const SystemConfig& cfg, const PathLossModel& model,
                                          std::mt19937_64& eng) {
    std::poisson_distribution<int> count(cfg.mean_users());
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double d_cell = cfg.radius.value();
    const int n = count(eng);
    std::vector<UserSample> users;
    users.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double u = 1.0 - unit(eng); // (0,1]
        const double d = d_cell * std::sqrt(u);
        users.push_back({d, gain(model, d)});
    }
    return users;
}

namespace detail {

// Per-beam SINRs from i.i.d. unit-mean exponential projection powers:
//   sinr_m = E_m / (1/(rho g) + sum_{k != m} E_k).
// Isotropy of the fading vector makes its squared projections onto any
// orthonormal beam set i.i.d. Exp(1), so this is the fast path.
inline void beam_sinrs_projection(double g, const SystemConfig& cfg, std::mt19937_64& eng,
                                  std::vector<double>& out) {
    const int m = cfg.num_beams;
    out.resize(static_cast<std::size_t>(m));
    std::exponential_distribution<double> exp1(1.0);
    double total = 0.0;
    for (int k = 0; k < m; ++k) {
        out[static_cast<std::size_t>(k)] = exp1(eng);
        total += out[static_cast<std::size_t>(k)];
    }
    const double noise = 1.0 / (cfg.power * g);
    for (int k = 0; k < m; ++k) {
        const double e = out[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(k)] = e / (noise + (total - e));
    }
}

// Orthonormal beam set: modified Gram-Schmidt on an M x M standard complex
// Gaussian matrix (columns are the beams).
inline std::vector<std::complex<double>> random_beams(int m, std::mt19937_64& eng) {
    std::normal_distribution<double> comp(0.0, std::sqrt(0.5));
    std::vector<std::complex<double>> q(static_cast<std::size_t>(m) * m);
    auto col = [&](int k) { return q.begin() + static_cast<std::ptrdiff_t>(k) * m; };
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            col(k)[i] = {comp(eng), comp(eng)};
    for (int k = 0; k < m; ++k) {
        for (int j = 0; j < k; ++j) {
            std::complex<double> proj = 0.0;
            for (int i = 0; i < m; ++i)
                proj += std::conj(col(j)[i]) * col(k)[i];
            for (int i = 0; i < m; ++i)
                col(k)[i] -= proj * col(j)[i];
        }
        double norm = 0.0;
        for (int i = 0; i < m; ++i)
            norm += std::norm(col(k)[i]);
        norm = std::sqrt(norm);
        for (int i = 0; i < m; ++i)
            col(k)[i] /= norm;
    }
    return q;
}

// Literal-model SINRs: fading vector h ~ CN(0, I), projection powers
// |h^T b_k|^2 against an explicit orthonormal beam set.
inline void beam_sinrs_explicit(double g, const SystemConfig& cfg, std::mt19937_64& eng,
                                const std::vector<std::complex<double>>& beams,
                                std::vector<double>& out) {
    const int m = cfg.num_beams;
    out.resize(static_cast<std::size_t>(m));
    std::normal_distribution<double> comp(0.0, std::sqrt(0.5));
    std::vector<std::complex<double>> h(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        h[static_cast<std::size_t>(i)] = {comp(eng), comp(eng)};
    double total = 0.0;
    for (int k = 0; k < m; ++k) {
        std::complex<double> dot = 0.0;
        for (int i = 0; i < m; ++i)
            dot += h[static_cast<std::size_t>(i)] * beams[static_cast<std::size_t>(k) * m + i];
        const double p = std::norm(dot);
        out[static_cast<std::size_t>(k)] = p;
        total += p;
    }
    const double noise = 1.0 / (cfg.power * g);
    for (int k = 0; k < m; ++k) {
        const double p = out[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(k)] = p / (noise + (total - p));
    }
}

} // namespace detail

// Per-beam SINRs for one user with gain g.  Projection mode draws the
// projection powers directly as exponentials; ExplicitBeams draws a fresh
// fading vector and beam set and evaluates the ratio literally (the slow
// cross-validation oracle for Projection).
inline std::vector<double> beam_sinrs(double g, const SystemConfig& cfg, std::mt19937_64& eng,
                                      SimMode mode) {
    if (!(g > 0.0))
        throw std::domain_error("beam_sinrs: gain must be > 0");
    std::vector<double> out;
    if (mode == SimMode::Projection) {
        detail::beam_sinrs_projection(g, cfg, eng, out);
    } else {
        auto beams = detail::random_beams(cfg.num_beams, eng);
        detail::beam_sinrs_explicit(g, cfg, eng, beams, out);
    }
    return out;
}

struct TrialOutcome {
    int num_users = 0;
    double max_sinr_beam1 = 0.0; // 0 for an empty cell
    double rate_beam1 = 0.0;     // log(1 + max_sinr_beam1)
};

// One full scheduling-slot realization: drop users, compute every user's
// per-beam SINRs, and record the per-beam maxima (0 for an empty cell).
// ExplicitBeams draws one beam set per trial, shared by all users, matching
// the model where users measure the same transmitted beams.
inline std::vector<double> trial_beam_maxima(const SystemConfig& cfg, const PathLossModel& model,
                                             const SimSeed& seed, std::uint64_t trial_index,
                                             SimMode mode, int* num_users_out = nullptr) {
    std::mt19937_64 eng = seed.engine(trial_index);
    const int m = cfg.num_beams;
    std::vector<double> maxima(static_cast<std::size_t>(m), 0.0);
    std::vector<double> sinrs;
    std::vector<std::complex<double>> beams;
    if (mode == SimMode::ExplicitBeams)
        beams = detail::random_beams(m, eng);
    auto users = drop_users(cfg, model, eng);
    for (const auto& u : users) {
        if (mode == SimMode::Projection)
            detail::beam_sinrs_projection(u.gain, cfg, eng, sinrs);
        else
            detail::beam_sinrs_explicit(u.gain, cfg, eng, beams, sinrs);
        for (int k = 0; k < m; ++k)
            maxima[static_cast<std::size_t>(k)] = std::max(maxima[static_cast<std::size_t>(k)],
                                                           sinrs[static_cast<std::size_t>(k)]);
    }
    if (num_users_out)
        *num_users_out = static_cast<int>(users.size());
    return maxima;
}

inline TrialOutcome run_single_trial(const SystemConfig& cfg, const PathLossModel& model,
                                     const SimSeed& seed, std::uint64_t trial_index, SimMode mode) {
    int n = 0;
    auto maxima = trial_beam_maxima(cfg, model, seed, trial_index, mode, &n);
    TrialOutcome t;
    t.num_users = n;
    t.max_sinr_beam1 = maxima[0];
    t.rate_beam1 = std::log1p(maxima[0]);
    return t;
}

// Runs `trials` independent realizations and records beam 1 of each (the
// beams are exchangeable; recording one per trial keeps the samples i.i.d.).
// Outcomes land in trial-index order whatever the worker count, so output is
// scheduling-invariant by construction.
inline std::vector<TrialOutcome> run_trials(const SystemConfig& cfg, const PathLossModel& model,
                                            std::uint64_t trials, const SimSeed& seed, SimMode mode,
                                            int workers = 1) {
    if (trials < 1)
        throw std::invalid_argument("run_trials: need at least one trial");
    if (cfg.radius.is_infinite())
        throw std::invalid_argument("run_trials: requires a finite cell radius");
    std::vector<TrialOutcome> outcomes(trials);
    const int n_workers = std::max(1, std::min<int>(workers, static_cast<int>(std::min<std::uint64_t>(trials, 256))));
    if (n_workers == 1) {
        for (std::uint64_t i = 0; i < trials; ++i)
            outcomes[i] = run_single_trial(cfg, model, seed, i, mode);
        return outcomes;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    const std::uint64_t chunk = (trials + static_cast<std::uint64_t>(n_workers) - 1) / n_workers;
    for (int w = 0; w < n_workers; ++w) {
        const std::uint64_t begin = static_cast<std::uint64_t>(w) * chunk;
        const std::uint64_t end = std::min(trials, begin + chunk);
        if (begin >= end)
            break;
        pool.emplace_back([&, begin, end] {
            for (std::uint64_t i = begin; i < end; ++i)
                outcomes[i] = run_single_trial(cfg, model, seed, i, mode);
        });
    }
    for (auto& th : pool)
        th.join();
    return outcomes;
}

} // namespace obf
