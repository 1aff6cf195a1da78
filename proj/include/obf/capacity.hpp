#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "obf/outage.hpp"
#include "obf/pathloss.hpp"
#include "obf/rootfind.hpp"
#include "obf/specfun.hpp"
#include "obf/system.hpp"

namespace obf {

enum class CapacityKind { Unbounded, Bounded };

// Large-cell outage-capacity root equation.  With
//   a = (alpha/2)(M-1),  b = (2 lambda pi / alpha) Gamma(2/alpha) rho^(2/alpha),
//   K = (-b / log eps)^(alpha/2),
// the capacity is log(y*) where y* > 1 solves
//   Unbounded:  y^a (y-1) = K
//   Bounded:    log(y^a (y-1)) + (alpha/(2 rho))(y-1) = log K.
// Both are solved in the log form: it is strictly increasing on (1,inf) and
// stays representable when K is astronomically large (K grows like
// lambda^(alpha/2), so the power form overflows long before lambda = 1e12
// and its residual cannot resolve 1e-9 once K's ulp exceeds it).
struct CapacityEquation {
    double a;
    double b;
    double alpha;
    double rho;
    double epsilon;
    CapacityKind kind;

    CapacityEquation(double lambda, double alpha_, double rho_, int num_beams,
                     double epsilon_, CapacityKind kind_)
        : alpha(alpha_), rho(rho_), epsilon(epsilon_), kind(kind_) {
        if (!(lambda > 0.0))
            throw std::invalid_argument("CapacityEquation: lambda must be > 0");
        if (!(alpha > 2.0))
            throw std::invalid_argument("CapacityEquation: alpha must be > 2");
        if (!(rho > 0.0))
            throw std::invalid_argument("CapacityEquation: rho must be > 0");
        if (num_beams < 1)
            throw std::invalid_argument("CapacityEquation: num_beams must be >= 1");
        if (!(epsilon_ > 0.0 && epsilon_ < 1.0))
            throw std::invalid_argument("CapacityEquation: epsilon must lie in (0,1)");
        a = 0.5 * alpha * (num_beams - 1);
        b = 2.0 * lambda * std::numbers::pi / alpha * complete_gamma(2.0 / alpha)
          * std::pow(rho, 2.0 / alpha);
    }

    // log K = (alpha/2) log(-b / log eps)
    double log_k() const { return 0.5 * alpha * std::log(-b / std::log(epsilon)); }

    double residual_log_form(double y) const {
        double r = a * std::log(y) + std::log(y - 1.0) - log_k();
        if (kind == CapacityKind::Bounded)
            r += 0.5 * alpha / rho * (y - 1.0);
        return r;
    }
};

struct CapacitySolution {
    double y_star = 1.0;
    double capacity_nats = 0.0; // log(y_star)
    double residual = 0.0;
    int iterations = 0;
    double bracket_low = 0.0;
    double bracket_high = 0.0;
    bool outage_floor = false; // finite cell: eps at or below the empty-cell probability
};

namespace detail {

inline CapacitySolution solve_root_equation(const CapacityEquation& eq) {
    auto f = [&](double y) { return eq.residual_log_form(y); };
    // f -> -inf as y -> 1+ and is strictly increasing, so a sign change is
    // guaranteed; shrink the left edge first in case the root sits within
    // 1e-12 of 1 (tiny K), then expand the right edge by doubling.
    double lo = 1.0 + 1e-12;
    while (f(lo) > 0.0 && lo - 1.0 > 4e-16)
        lo = 1.0 + 0.5 * (lo - 1.0);
    auto [blo, bhi] = expand_bracket_up(f, lo, 2.0);
    BisectResult r = bisect(f, blo, bhi);
    if (!r.converged)
        throw std::runtime_error("capacity solve: bisection hit the iteration cap");
    CapacitySolution s;
    s.y_star = r.root;
    s.capacity_nats = std::log(r.root);
    s.residual = std::abs(r.f_root);
    s.iterations = r.iterations;
    s.bracket_low = r.low;
    s.bracket_high = r.high;
    return s;
}

} // namespace detail

inline CapacitySolution solve_capacity_unbounded(const CapacityEquation& eq) {
    if (eq.kind != CapacityKind::Unbounded)
        throw std::invalid_argument("solve_capacity_unbounded: equation kind mismatch");
    return detail::solve_root_equation(eq);
}

inline CapacitySolution solve_capacity_bounded(const CapacityEquation& eq) {
    if (eq.kind != CapacityKind::Bounded)
        throw std::invalid_argument("solve_capacity_bounded: equation kind mismatch");
    return detail::solve_root_equation(eq);
}

// Outage capacity for a finite cell: log(x* + 1) where x* is the smallest
// SINR threshold with F(x*) >= eps, found by bisection on the monotone CDF.
// The Unbounded/Bounded kinds evaluate their closed-form CDFs; GuardZone and
// Shifted fall back to the quadrature CDF.  An infinite radius delegates to
// the root equations (Unbounded/Bounded only).
//
// When eps <= F(0) = exp(-lambda pi D^2) no positive rate is feasible (the
// outage probability can never drop below the empty-cell probability), so
// the capacity is 0 with the outage_floor flag set.
inline CapacitySolution capacity_finite_d(const SystemConfig& cfg, const PathLossModel& model,
                                          double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("capacity_finite_d: epsilon must lie in (0,1)");
    if (cfg.radius.is_infinite()) {
        switch (model.kind) {
            case PathLossKind::Unbounded:
                return solve_capacity_unbounded(CapacityEquation(
                    cfg.lambda, model.alpha, cfg.power, cfg.num_beams, eps, CapacityKind::Unbounded));
            case PathLossKind::Bounded:
                return solve_capacity_bounded(CapacityEquation(
                    cfg.lambda, model.alpha, cfg.power, cfg.num_beams, eps, CapacityKind::Bounded));
            default:
                throw std::invalid_argument("capacity_finite_d: infinite radius supports only the unbounded and bounded models");
        }
    }
    auto cdf = [&](double x) -> double {
        switch (model.kind) {
            case PathLossKind::Unbounded: return outage_unbounded(cfg, model.alpha, x).sinr_cdf_value;
            case PathLossKind::Bounded: return outage_bounded(cfg, model.alpha, x).sinr_cdf_value;
            default: return outage_general(cfg, model, x).sinr_cdf_value;
        }
    };
    const double floor = std::exp(-cfg.mean_users());
    if (eps <= floor) {
        CapacitySolution s;
        s.outage_floor = true;
        s.residual = std::abs(cdf(0.0) - eps);
        return s;
    }
    auto h = [&](double x) { return cdf(x) - eps; };
    auto [blo, bhi] = expand_bracket_up(h, 0.0, 1.0);
    BisectResult r = bisect(h, blo, bhi);
    if (!r.converged)
        throw std::runtime_error("capacity_finite_d: bisection hit the iteration cap");
    CapacitySolution s;
    s.y_star = r.root + 1.0;
    s.capacity_nats = std::log1p(r.root);
    s.residual = std::abs(r.f_root);
    s.iterations = r.iterations;
    s.bracket_low = r.low;
    s.bracket_high = r.high;
    return s;
}

// Doubling diagnostic for the growth of capacity with user intensity.  For
// each grid lambda it reports C(lambda), C(lambda^2) and their gap in three
// readings:
//   - raw gap: converges to log 2 for the bounded law (capacity grows like
//     log log lambda, and squaring lambda doubles log lambda);
//   - per-octave gap (gap / log2 lambda): for the unbounded law with M = 1
//     capacity grows like (alpha/2) log lambda, so each doubling of lambda
//     adds (alpha/2) log 2;
//   - per-e-fold gap (gap / log lambda): for the unbounded law with M > 1
//     the growth rate is capacity ~ log lambda / (M-1) to leading order.
// The statistic/target pair picks the reading that has a finite nonzero
// limit for the given model and beam count.
struct ScalingRow {
    double lambda = 0.0;
    double capacity = 0.0;
    double capacity_at_lambda_sq = 0.0;
    double gap = 0.0;
    double gap_per_octave = 0.0;
    double gap_per_efold = 0.0;
    double statistic = 0.0;
    double target = 0.0;
};

inline std::vector<ScalingRow> scaling_diagnostic(CapacityKind kind, double alpha, double rho,
                                                  int num_beams, double eps,
                                                  const std::vector<double>& lambda_grid) {
    if (lambda_grid.size() < 3)
        throw std::invalid_argument("scaling_diagnostic: need at least 3 grid points");
    for (std::size_t i = 1; i < lambda_grid.size(); ++i)
        if (!(lambda_grid[i] > lambda_grid[i - 1]))
            throw std::invalid_argument("scaling_diagnostic: lambda grid must be strictly increasing");
    std::vector<ScalingRow> rows;
    rows.reserve(lambda_grid.size());
    const double ln2 = std::numbers::ln2;
    for (double lam : lambda_grid) {
        CapacityEquation eq1(lam, alpha, rho, num_beams, eps, kind);
        CapacityEquation eq2(lam * lam, alpha, rho, num_beams, eps, kind);
        ScalingRow row;
        row.lambda = lam;
        row.capacity = detail::solve_root_equation(eq1).capacity_nats;
        row.capacity_at_lambda_sq = detail::solve_root_equation(eq2).capacity_nats;
        row.gap = row.capacity_at_lambda_sq - row.capacity;
        row.gap_per_octave = row.gap / std::log2(lam);
        row.gap_per_efold = row.gap / std::log(lam);
        if (kind == CapacityKind::Bounded) {
            row.statistic = row.gap;
            row.target = ln2;
        } else if (num_beams == 1) {
            row.statistic = row.gap_per_octave;
            row.target = 0.5 * alpha * ln2;
        } else {
            row.statistic = row.gap_per_efold;
            row.target = ln2 / (num_beams - 1);
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace obf
