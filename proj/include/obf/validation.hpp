#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "obf/capacity.hpp"
#include "obf/empirical.hpp"
#include "obf/mc.hpp"
#include "obf/outage.hpp"
#include "obf/pathloss.hpp"
#include "obf/specfun.hpp"
#include "obf/system.hpp"

namespace obf {

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string details;
};

struct ValidationOptions {
    bool quick = false;        // subsampled grids and smaller Monte Carlo runs
    std::uint64_t seed = 2026; // master seed for every stochastic property
    int workers = 1;
};

namespace valdetail {

inline std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c, d);
    return buf;
}

struct Registry {
    std::vector<PropertyResult> results;

    template <class Fn>
    void check(const std::string& name, Fn&& fn) {
        PropertyResult r;
        r.name = name;
        try {
            r.passed = fn(r.details);
        } catch (const std::exception& e) {
            r.passed = false;
            r.details = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

inline std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
        g.push_back(std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))));
    }
    return g;
}

// ---- deterministic properties -------------------------------------------

inline void register_specfun(Registry& reg) {
    reg.check("gamma-recurrence", [](std::string& details) {
        // gamma(s+1,x) = s gamma(s,x) - x^s e^-x
        double worst = 0.0;
        for (double s : {0.4, 0.5, 2.0 / 3.0})
            for (double x : {0.1, 1.0, 10.0}) {
                double lhs = lower_incomplete_gamma(s + 1.0, x);
                double rhs = s * lower_incomplete_gamma(s, x) - std::pow(x, s) * std::exp(-x);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        details = fmt("max recurrence defect %.3g (gate 1e-10)", worst);
        return worst <= 1e-10;
    });
    reg.check("gamma-bounds", [](std::string& details) {
        for (double s : {0.4, 0.5, 2.0 / 3.0, 0.8, 1.0, 2.5})
            for (double x : log_spaced(1e-6, 100.0, 25)) {
                double g = lower_incomplete_gamma(s, x);
                double G = complete_gamma(s);
                if (!(g >= 0.0 && g <= G * (1.0 + 1e-14))) {
                    details = fmt("violated at s=%.3g x=%.3g", s, x);
                    return false;
                }
            }
        details = "0 <= gamma(s,x) <= Gamma(s) on the sample grid";
        return true;
    });
    reg.check("gamma-tail-limit", [](std::string& details) {
        double worst = 0.0;
        for (double s : {0.4, 0.5, 2.0 / 3.0, 1.0})
            worst = std::max(worst, std::abs(lower_incomplete_gamma(s, 50.0) - complete_gamma(s)));
        details = fmt("max |gamma(s,50)-Gamma(s)| = %.3g (gate 1e-10)", worst);
        return worst <= 1e-10;
    });
}

inline void register_pathloss(Registry& reg, const ValidationOptions& opt) {
    auto models = [] {
        return std::vector<PathLossModel>{
            PathLossModel::unbounded(4.0), PathLossModel::unbounded(2.5),
            PathLossModel::bounded(4.0), PathLossModel::bounded(2.5),
            PathLossModel::guard_zone(4.0, 0.5), PathLossModel::shifted(3.0)};
    };
    reg.check("gain-monotone", [&](std::string& details) {
        std::mt19937_64 eng(opt.seed ^ 0x67616d6dull);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (const auto& m : models()) {
            std::vector<double> grid;
            for (int i = 0; i < 200; ++i)
                grid.push_back(1e-3 * std::pow(1e6, u(eng))); // log-uniform in [1e-3, 1e3]
            std::sort(grid.begin(), grid.end());
            for (std::size_t i = 1; i < grid.size(); ++i) {
                if (gain(m, grid[i - 1]) < gain(m, grid[i])) {
                    details = fmt("gain increased between d=%.6g and d=%.6g", grid[i - 1], grid[i]);
                    return false;
                }
            }
        }
        details = "G non-increasing on 200-point random grids, all models";
        return true;
    });
    reg.check("gain-inverse-roundtrip", [](std::string& details) {
        // Strictly decreasing models must invert exactly.  For the bounded
        // model at small d the gain is 1 - d^alpha and the subtraction
        // leaves only ~eps/d^alpha of relative information, so the gate is
        // widened to the conditioning bound there; the others hold 1e-12.
        double worst_margin = 0.0;
        for (const auto& m : {PathLossModel::unbounded(4.0), PathLossModel::unbounded(2.5),
                              PathLossModel::bounded(4.0), PathLossModel::bounded(2.5),
                              PathLossModel::shifted(3.0), PathLossModel::shifted(4.0)})
            for (double d : log_spaced(1e-3, 1e3, 61)) {
                double d2 = generalized_inverse(m, gain(m, d));
                double rel = std::abs(d2 - d) / d;
                double gate = 1e-12;
                if (m.kind == PathLossKind::Bounded) {
                    double cond = 8.0 * std::numeric_limits<double>::epsilon()
                                / (m.alpha * std::pow(d, m.alpha));
                    gate = std::max(gate, cond);
                }
                worst_margin = std::max(worst_margin, rel / gate);
                if (rel > gate) {
                    details = fmt("round trip off by %.3g relative at d=%.3g (gate %.3g)", rel, d, gate);
                    return false;
                }
            }
        details = fmt("worst error/gate ratio %.3g across models and d in [1e-3,1e3]", worst_margin);
        return true;
    });
    reg.check("guard-plateau-inverse", [](std::string& details) {
        auto m = PathLossModel::guard_zone(4.0, 0.5);
        double g0 = gain(m, m.d0);
        bool ok = generalized_inverse(m, g0) == 0.0            // inf over the plateau
               && generalized_inverse(m, gain(m, 0.25)) == 0.0 // inside the plateau G is flat
               && std::abs(generalized_inverse(m, g0 * (1.0 - 1e-9)) - m.d0) < 1e-6
               && generalized_inverse(m, g0 * (1.0 + 1e-9)) == 0.0;
        details = "inverse is 0 on [G(d0), inf) and jumps to d0 just below G(d0)";
        return ok;
    });
    reg.check("pathloss-cdf-shape", [](std::string& details) {
        SystemConfig cfg(1.0, CellRadius::finite(2.0), 2, 1.0);
        for (const auto& m : {PathLossModel::unbounded(4.0), PathLossModel::bounded(4.0),
                              PathLossModel::guard_zone(4.0, 0.5), PathLossModel::shifted(3.0)}) {
            double at_edge = pathloss_cdf(m, cfg, gain(m, cfg.radius.value()));
            if (std::abs(at_edge) > 1e-12) {
                details = fmt("F_G(G(D)) = %.3g, expected 0", at_edge);
                return false;
            }
            if (m.kind != PathLossKind::Unbounded) {
                double at_center = pathloss_cdf(m, cfg, gain(m, 0.0));
                if (std::abs(at_center - 1.0) > 1e-12) {
                    details = fmt("F_G(G(0)) = %.3g, expected 1", at_center);
                    return false;
                }
            }
            double prev = -1.0;
            for (double g : log_spaced(gain(m, cfg.radius.value()) * 0.5, 10.0, 80)) {
                double f = pathloss_cdf(m, cfg, g);
                if (f < prev - 1e-15) {
                    details = fmt("F_G decreased at g=%.3g", g);
                    return false;
                }
                prev = f;
            }
        }
        details = "F_G non-decreasing, 0 at the cell edge gain, 1 at the center gain";
        return true;
    });
}

inline void register_outage(Registry& reg, const ValidationOptions& opt) {
    const std::vector<double> xs = log_spaced(0.1, 10.0, opt.quick ? 5 : 20);
    const std::vector<double> lambdas = opt.quick ? std::vector<double>{1.0}
                                                  : std::vector<double>{0.5, 1.0, 10.0};
    const std::vector<double> radii = opt.quick ? std::vector<double>{1.0, 5.0}
                                                : std::vector<double>{0.5, 1.0, 2.0, 5.0};
    const std::vector<double> alphas = opt.quick ? std::vector<double>{4.0}
                                                 : std::vector<double>{2.5, 4.0};
    const std::vector<int> beams = opt.quick ? std::vector<int>{1, 2} : std::vector<int>{1, 2, 4};

    reg.check("outage-oracle-equivalence", [&](std::string& details) {
        double worst = 0.0;
        long points = 0;
        for (double lam : lambdas)
            for (double d : radii)
                for (double alpha : alphas)
                    for (int m : beams)
                        for (double x : xs) {
                            SystemConfig cfg(lam, CellRadius::finite(d), m, 1.0);
                            double q_ub = outage_general(cfg, PathLossModel::unbounded(alpha), x).sinr_cdf_value;
                            double c_ub = outage_unbounded(cfg, alpha, x).sinr_cdf_value;
                            double q_b = outage_general(cfg, PathLossModel::bounded(alpha), x).sinr_cdf_value;
                            double c_b = outage_bounded(cfg, alpha, x).sinr_cdf_value;
                            worst = std::max({worst, std::abs(q_ub - c_ub), std::abs(q_b - c_b)});
                            points += 2;
                        }
        details = fmt("max |quadrature - closed form| = %.3g over %.0f evaluations (gate 1e-8)",
                      worst, static_cast<double>(points));
        return worst <= 1e-8;
    });
    reg.check("outage-exponent-relation", [&](std::string& details) {
        // log F_b(x) = e^(-x/rho) log F_ub(x), finite and infinite cells
        double worst = 0.0;
        for (double lam : lambdas)
            for (double alpha : alphas)
                for (int m : beams)
                    for (double x : xs) {
                        for (double d : radii) {
                            SystemConfig cfg(lam, CellRadius::finite(d), m, 1.0);
                            double lf_ub = outage_unbounded(cfg, alpha, x).exponent;
                            double lf_b = outage_bounded(cfg, alpha, x).exponent;
                            worst = std::max(worst, std::abs(lf_b - std::exp(-x / cfg.power) * lf_ub));
                        }
                        SystemConfig inf_cfg(lam, CellRadius::infinite(), m, 1.0);
                        double lf_ub = outage_unbounded(inf_cfg, alpha, x).exponent;
                        double lf_b = outage_bounded(inf_cfg, alpha, x).exponent;
                        worst = std::max(worst, std::abs(lf_b - std::exp(-x / inf_cfg.power) * lf_ub));
                    }
        details = fmt("max log-domain defect %.3g (gate 1e-12)", worst);
        return worst <= 1e-12;
    });
    reg.check("outage-monotone", [&](std::string& details) {
        // non-decreasing in x, non-increasing in lambda and D, finite >= infinite
        for (double alpha : alphas)
            for (int m : beams) {
                double prev = -1.0;
                for (double x : xs) {
                    SystemConfig cfg(1.0, CellRadius::finite(1.0), m, 1.0);
                    double f = outage_unbounded(cfg, alpha, x).sinr_cdf_value;
                    if (f < prev - 1e-14) {
                        details = fmt("F decreased in x at x=%.3g", x);
                        return false;
                    }
                    prev = f;
                }
                for (double x : {0.5, 2.0}) {
                    double prev_lam = 2.0;
                    for (double lam : {0.5, 1.0, 10.0}) {
                        SystemConfig cfg(lam, CellRadius::finite(1.0), m, 1.0);
                        double f = outage_unbounded(cfg, alpha, x).sinr_cdf_value;
                        if (f > prev_lam + 1e-14) {
                            details = fmt("F increased in lambda at lambda=%.3g", lam);
                            return false;
                        }
                        prev_lam = f;
                    }
                    double prev_d = 2.0;
                    SystemConfig inf_cfg(1.0, CellRadius::infinite(), m, 1.0);
                    double f_inf = outage_unbounded(inf_cfg, alpha, x).sinr_cdf_value;
                    for (double d : {0.5, 1.0, 2.0, 5.0}) {
                        SystemConfig cfg(1.0, CellRadius::finite(d), m, 1.0);
                        double f = outage_unbounded(cfg, alpha, x).sinr_cdf_value;
                        if (f > prev_d + 1e-14) {
                            details = fmt("F increased in D at D=%.3g", d);
                            return false;
                        }
                        if (f < f_inf - 1e-14) {
                            details = fmt("finite-cell F fell below the infinite-cell value at D=%.3g", d);
                            return false;
                        }
                        prev_d = f;
                    }
                }
            }
        details = "F non-decreasing in x, non-increasing in lambda and D, finite >= infinite";
        return true;
    });
    reg.check("outage-bounded-dominates", [&](std::string& details) {
        for (double lam : lambdas)
            for (double d : radii)
                for (double alpha : alphas)
                    for (double x : xs) {
                        SystemConfig cfg(lam, CellRadius::finite(d), 2, 1.0);
                        double f_ub = outage_unbounded(cfg, alpha, x).sinr_cdf_value;
                        double f_b = outage_bounded(cfg, alpha, x).sinr_cdf_value;
                        if (f_b < f_ub - 1e-14) {
                            details = fmt("F_b < F_ub at x=%.3g, D=%.3g", x, d);
                            return false;
                        }
                    }
        details = "bounded-model outage dominates unbounded-model outage pointwise";
        return true;
    });
    reg.check("outage-empty-cell", [](std::string& details) {
        // At x=0 every variant equals the empty-cell probability, and a
        // vanishing intensity forces outage probability 1.
        SystemConfig cfg(1.0, CellRadius::finite(1.0), 2, 1.0);
        double expect = std::exp(-cfg.mean_users());
        double worst = std::abs(outage_general(cfg, PathLossModel::unbounded(4.0), 0.0).sinr_cdf_value - expect);
        worst = std::max(worst, std::abs(outage_unbounded(cfg, 4.0, 0.0).sinr_cdf_value - expect));
        worst = std::max(worst, std::abs(outage_bounded(cfg, 4.0, 0.0).sinr_cdf_value - expect));
        SystemConfig thin(1e-12, CellRadius::finite(1.0), 2, 1.0);
        worst = std::max(worst, std::abs(outage_unbounded(thin, 4.0, 1.0).sinr_cdf_value - 1.0));
        details = fmt("max defect %.3g (gate 1e-9)", worst);
        return worst <= 1e-9;
    });
}

inline void register_capacity(Registry& reg, const ValidationOptions& opt) {
    reg.check("capacity-residuals", [&](std::string& details) {
        std::vector<double> lambdas = opt.quick ? std::vector<double>{0.1, 100.0, 1e6, 1e12}
                                                : log_spaced(0.1, 1e12, 14);
        double worst = 0.0;
        for (double lam : lambdas)
            for (int m : {1, 2, 4})
                for (double alpha : {2.5, 4.0})
                    for (double eps : {0.01, 0.1}) {
                        for (auto kind : {CapacityKind::Unbounded, CapacityKind::Bounded}) {
                            CapacityEquation eq(lam, alpha, 1.0, m, eps, kind);
                            CapacitySolution s = kind == CapacityKind::Unbounded
                                                     ? solve_capacity_unbounded(eq)
                                                     : solve_capacity_bounded(eq);
                            worst = std::max(worst, s.residual);
                            // the final bracket must still straddle the root
                            if (s.bracket_low != s.bracket_high &&
                                !(eq.residual_log_form(s.bracket_low) <= 0.0 &&
                                  eq.residual_log_form(s.bracket_high) >= 0.0)) {
                                details = "final bracket lost the sign change";
                                return false;
                            }
                            if (!(s.y_star > 1.0)) {
                                details = fmt("root %.17g not above 1", s.y_star);
                                return false;
                            }
                        }
                    }
        details = fmt("max |residual| = %.3g across the solver grid (gate 1e-9)", worst);
        return worst <= 1e-9;
    });
    reg.check("capacity-m1-closed-form", [](std::string& details) {
        // With one beam the root equation is linear: y* = 1 + K.
        double worst = 0.0;
        for (double lam : {0.1, 1.0, 10.0, 100.0})
            for (double alpha : {2.5, 3.0, 4.0})
                for (double eps : {0.01, 0.1, 0.5}) {
                    CapacityEquation eq(lam, alpha, 1.0, 1, eps, CapacityKind::Unbounded);
                    double k = std::exp(eq.log_k());
                    double closed = std::log1p(k);
                    double solved = solve_capacity_unbounded(eq).capacity_nats;
                    worst = std::max(worst, std::abs(solved - closed));
                }
        details = fmt("max |solver - closed form| = %.3g (gate 1e-9)", worst);
        return worst <= 1e-9;
    });
    reg.check("capacity-monotone", [](std::string& details) {
        for (auto kind : {CapacityKind::Unbounded, CapacityKind::Bounded}) {
            double prev = -1.0;
            for (double lam : {0.1, 1.0, 10.0, 100.0, 1e4}) {
                double c = (kind == CapacityKind::Unbounded
                                ? solve_capacity_unbounded(CapacityEquation(lam, 4.0, 1.0, 2, 0.1, kind))
                                : solve_capacity_bounded(CapacityEquation(lam, 4.0, 1.0, 2, 0.1, kind)))
                               .capacity_nats;
                if (c <= prev) {
                    details = fmt("capacity not increasing in lambda at %.3g", lam);
                    return false;
                }
                prev = c;
            }
            prev = -1.0;
            for (double eps : {0.01, 0.1, 0.5, 0.99}) {
                double c = (kind == CapacityKind::Unbounded
                                ? solve_capacity_unbounded(CapacityEquation(10.0, 4.0, 1.0, 2, eps, kind))
                                : solve_capacity_bounded(CapacityEquation(10.0, 4.0, 1.0, 2, eps, kind)))
                               .capacity_nats;
                if (c <= prev) {
                    details = fmt("capacity not increasing in eps at %.3g", eps);
                    return false;
                }
                prev = c;
            }
        }
        details = "capacity strictly increasing in lambda and in eps, both models";
        return true;
    });
    reg.check("capacity-bounded-below-unbounded", [](std::string& details) {
        for (double lam : {0.1, 1.0, 10.0, 1e4})
            for (double alpha : {2.5, 4.0})
                for (double eps : {0.01, 0.1}) {
                    double ub = solve_capacity_unbounded(CapacityEquation(lam, alpha, 1.0, 2, eps, CapacityKind::Unbounded)).capacity_nats;
                    double b = solve_capacity_bounded(CapacityEquation(lam, alpha, 1.0, 2, eps, CapacityKind::Bounded)).capacity_nats;
                    if (!(b <= ub)) {
                        details = fmt("bounded capacity %.6g above unbounded %.6g", b, ub);
                        return false;
                    }
                }
        details = "bounded capacity <= unbounded capacity across the grid";
        return true;
    });
    reg.check("capacity-finite-cell-delegation", [](std::string& details) {
        SystemConfig inf_cfg(10.0, CellRadius::infinite(), 2, 1.0);
        double worst = 0.0;
        for (auto kind : {CapacityKind::Unbounded, CapacityKind::Bounded}) {
            auto model = kind == CapacityKind::Unbounded ? PathLossModel::unbounded(4.0)
                                                         : PathLossModel::bounded(4.0);
            double via_dispatch = capacity_finite_d(inf_cfg, model, 0.1).capacity_nats;
            CapacityEquation eq(10.0, 4.0, 1.0, 2, 0.1, kind);
            double direct = (kind == CapacityKind::Unbounded ? solve_capacity_unbounded(eq)
                                                             : solve_capacity_bounded(eq))
                                .capacity_nats;
            worst = std::max(worst, std::abs(via_dispatch - direct));
        }
        details = fmt("max |dispatch - direct| = %.3g (gate 1e-12)", worst);
        return worst <= 1e-12;
    });
    reg.check("capacity-finite-cell-convergence", [](std::string& details) {
        // Growing the cell radius reproduces the infinite-cell capacity; the
        // unbounded law converges faster than the bounded one.
        double worst_rel5 = 0.0;
        double gap_ub = 0.0, gap_b = 0.0;
        for (auto kind : {CapacityKind::Unbounded, CapacityKind::Bounded}) {
            auto model = kind == CapacityKind::Unbounded ? PathLossModel::unbounded(4.0)
                                                         : PathLossModel::bounded(4.0);
            CapacityEquation eq(10.0, 4.0, 1.0, 2, 0.1, kind);
            double asym = (kind == CapacityKind::Unbounded ? solve_capacity_unbounded(eq)
                                                           : solve_capacity_bounded(eq))
                              .capacity_nats;
            SystemConfig cfg5(10.0, CellRadius::finite(5.0), 2, 1.0);
            SystemConfig cfg2(10.0, CellRadius::finite(2.0), 2, 1.0);
            double c5 = capacity_finite_d(cfg5, model, 0.1).capacity_nats;
            double c2 = capacity_finite_d(cfg2, model, 0.1).capacity_nats;
            double rel5 = std::abs(c5 - asym) / asym;
            double rel2 = std::abs(c2 - asym) / asym;
            if (rel5 > 0.01) {
                details = fmt("D=5 capacity off by %.3g relative (gate 1%%)", rel5);
                return false;
            }
            worst_rel5 = std::max(worst_rel5, rel5);
            if (kind == CapacityKind::Unbounded)
                gap_ub = rel2;
            else
                gap_b = rel2;
        }
        if (gap_ub > 0.05 || gap_b > 0.05) {
            details = fmt("D=2 relative gaps %.3g / %.3g exceed 5%%", gap_ub, gap_b);
            return false;
        }
        if (gap_ub > gap_b) {
            details = fmt("unbounded gap %.3g above bounded gap %.3g at D=2", gap_ub, gap_b);
            return false;
        }
        details = fmt("D=2 gaps: unbounded %.3g <= bounded %.3g; D=5 within %.3g relative", gap_ub, gap_b, worst_rel5);
        return true;
    });
    reg.check("capacity-outage-floor", [](std::string& details) {
        // eps at or below the empty-cell probability is infeasible
        SystemConfig cfg(1.0, CellRadius::finite(0.5), 2, 1.0);
        double floor = std::exp(-cfg.mean_users());
        auto s = capacity_finite_d(cfg, PathLossModel::unbounded(4.0), floor * 0.5);
        auto s2 = capacity_finite_d(cfg, PathLossModel::unbounded(4.0), floor * 1.5);
        bool ok = s.outage_floor && s.capacity_nats == 0.0 && !s2.outage_floor && s2.capacity_nats > 0.0;
        details = fmt("floor %.3g: below flagged with capacity 0, above unflagged", floor);
        return ok;
    });
    reg.check("capacity-scaling", [](std::string& details) {
        auto ub1 = scaling_diagnostic(CapacityKind::Unbounded, 4.0, 1.0, 1, 0.1, {1e2, 1e3, 1e4});
        auto ub2 = scaling_diagnostic(CapacityKind::Unbounded, 4.0, 1.0, 2, 0.1, {1e2, 1e4, 1e6});
        auto b2 = scaling_diagnostic(CapacityKind::Bounded, 4.0, 1.0, 2, 0.1, {1e2, 1e4, 1e6});
        double r1 = std::abs(ub1.back().statistic - ub1.back().target) / ub1.back().target;
        double r2 = std::abs(ub2.back().statistic - ub2.back().target) / ub2.back().target;
        double r3 = std::abs(b2.back().statistic - b2.back().target) / b2.back().target;
        details = fmt("relative errors: unbounded M=1 %.3g (gate 5%%), M=2 %.3g (10%%), bounded %.3g (25%%)", r1, r2, r3);
        return r1 <= 0.05 && r2 <= 0.10 && r3 <= 0.25;
    });
    reg.check("capacity-alpha-crossover", [](std::string& details) {
        // at small intensity a higher path-loss exponent hurts; at large
        // intensity it helps
        auto cap = [](double lam, double alpha) {
            return solve_capacity_unbounded(CapacityEquation(lam, alpha, 1.0, 2, 0.01, CapacityKind::Unbounded)).capacity_nats;
        };
        double lo3 = cap(0.1, 3.0), lo4 = cap(0.1, 4.0);
        double hi3 = cap(100.0, 3.0), hi4 = cap(100.0, 4.0);
        details = fmt("lambda=0.1: %.4g -> %.4g; lambda=100: %.4g -> %.4g", lo3, lo4, hi3, hi4);
        return lo3 > lo4 && hi4 > hi3;
    });
}

// ---- stochastic properties ----------------------------------------------

inline void register_mc(Registry& reg, const ValidationOptions& opt) {
    const std::uint64_t n_fixed = opt.quick ? 20000 : 100000;  // fixed-gain draws
    const std::uint64_t n_trials = opt.quick ? 20000 : 100000; // full trials

    reg.check("mc-determinism", [&](std::string& details) {
        SystemConfig cfg(1.0, CellRadius::finite(1.0), 2, 1.0);
        auto model = PathLossModel::unbounded(4.0);
        SimSeed seed{opt.seed};
        auto a = run_trials(cfg, model, 2000, seed, SimMode::Projection, 1);
        auto b = run_trials(cfg, model, 2000, seed, SimMode::Projection, 3);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].rate_beam1 != b[i].rate_beam1 || a[i].num_users != b[i].num_users) {
                details = fmt("trial %.0f differs between worker counts", static_cast<double>(i));
                return false;
            }
        details = "2000 trials bit-identical with 1 and 3 workers";
        return true;
    });
    reg.check("mc-poisson-count", [&](std::string& details) {
        // lambda pi D^2 = 4; sample mean and variance must match
        SystemConfig cfg(4.0 / std::numbers::pi, CellRadius::finite(1.0), 2, 1.0);
        auto model = PathLossModel::bounded(4.0);
        SimSeed seed{opt.seed ^ 0x706f69ull};
        double sum = 0.0, sumsq = 0.0;
        const std::uint64_t n = n_trials;
        for (std::uint64_t i = 0; i < n; ++i) {
            std::mt19937_64 eng = seed.engine(i);
            auto users = drop_users(cfg, model, eng);
            double c = static_cast<double>(users.size());
            sum += c;
            sumsq += c * c;
        }
        double mean = sum / static_cast<double>(n);
        double var = sumsq / static_cast<double>(n) - mean * mean;
        details = fmt("mean %.4f (gate 4 +- 0.05), variance %.4f (gate 4 +- 0.15)", mean, var);
        return std::abs(mean - 4.0) <= 0.05 && std::abs(var - 4.0) <= 0.15;
    });
    reg.check("mc-uniform-placement", [&](std::string& details) {
        // pooled d^2/D^2 must be uniform on [0,1]
        SystemConfig cfg(4.0 / std::numbers::pi, CellRadius::finite(1.0), 2, 1.0);
        auto model = PathLossModel::bounded(4.0);
        SimSeed seed{opt.seed ^ 0x756e69ull};
        std::vector<double> pooled;
        pooled.reserve(n_fixed + 64);
        for (std::uint64_t i = 0; pooled.size() < n_fixed; ++i) {
            std::mt19937_64 eng = seed.engine(i);
            for (const auto& u : drop_users(cfg, model, eng))
                pooled.push_back(u.distance * u.distance);
        }
        EmpiricalCdf cdf(std::move(pooled));
        double d = cdf.ks_distance([](double t) { return std::clamp(t, 0.0, 1.0); });
        double gate = std::max(0.01, ks_band_99(cdf.size()));
        details = fmt("KS distance to uniform %.4f over %.0f users (gate %.4f)", d,
                      static_cast<double>(cdf.size()), gate);
        return d <= gate;
    });
    reg.check("mc-projection-exponential", [&](std::string& details) {
        // single beam: sinr/(rho g) is unit exponential
        SystemConfig cfg(1.0, CellRadius::finite(1.0), 1, 2.0);
        SimSeed seed{opt.seed ^ 0x657870ull};
        const double g = 0.7;
        std::vector<double> scaled;
        scaled.reserve(n_fixed);
        std::mt19937_64 eng = seed.engine(0);
        for (std::uint64_t i = 0; i < n_fixed; ++i)
            scaled.push_back(beam_sinrs(g, cfg, eng, SimMode::Projection)[0] / (cfg.power * g));
        EmpiricalCdf cdf(std::move(scaled));
        double d = cdf.ks_distance([](double x) { return 1.0 - std::exp(-x); });
        double gate = std::max(0.01, ks_band_99(cdf.size()));
        details = fmt("KS distance to Exp(1) %.4f (gate %.4f)", d, gate);
        return d <= gate;
    });
    reg.check("mc-conditional-cdf-point", [&](std::string& details) {
        // two beams, g=1, rho=1: P(sinr <= 1) = 1 - e^-1/2
        SystemConfig cfg(1.0, CellRadius::finite(1.0), 2, 1.0);
        SimSeed seed{opt.seed ^ 0x636474ull};
        std::mt19937_64 eng = seed.engine(0);
        const std::uint64_t n = 100000;
        std::uint64_t hits = 0;
        for (std::uint64_t i = 0; i < n; ++i)
            if (beam_sinrs(1.0, cfg, eng, SimMode::Projection)[0] <= 1.0)
                ++hits;
        double p = static_cast<double>(hits) / static_cast<double>(n);
        double expect = conditional_sinr_cdf(cfg, 1.0, 1.0);
        details = fmt("empirical %.5f vs analytic %.5f (gate +- 0.005)", p, expect);
        return std::abs(p - expect) <= 0.005;
    });
    reg.check("mc-projection-vs-explicit", [&](std::string& details) {
        // the fast path and the literal-model path draw from the same law
        SystemConfig cfg(1.0, CellRadius::finite(1.0), 2, 1.0);
        SimSeed seed{opt.seed ^ 0x707665ull};
        std::mt19937_64 eng1 = seed.engine(1), eng2 = seed.engine(2);
        std::vector<double> proj, expl;
        proj.reserve(n_fixed);
        expl.reserve(n_fixed);
        for (std::uint64_t i = 0; i < n_fixed; ++i) {
            proj.push_back(beam_sinrs(1.0, cfg, eng1, SimMode::Projection)[0]);
            expl.push_back(beam_sinrs(1.0, cfg, eng2, SimMode::ExplicitBeams)[0]);
        }
        EmpiricalCdf ca(std::move(proj)), cb(std::move(expl));
        double d = ks_two_sample(ca, cb);
        double gate = 1.63 * std::sqrt(2.0 / static_cast<double>(n_fixed));
        details = fmt("two-sample KS %.4f over %.0f draws each (99%% gate %.4f)", d,
                      static_cast<double>(n_fixed), gate);
        return d <= gate;
    });
    reg.check("mc-beam-symmetry", [&](std::string& details) {
        // literal mode: beam 1 and beam 2 max-SINR marginals coincide
        SystemConfig cfg(1.0, CellRadius::finite(1.0), 2, 1.0);
        auto model = PathLossModel::unbounded(4.0);
        SimSeed seed{opt.seed ^ 0x73796dull};
        const std::uint64_t n = opt.quick ? 10000 : 50000;
        std::vector<double> b1, b2;
        b1.reserve(n);
        b2.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i) {
            auto mx = trial_beam_maxima(cfg, model, seed, i, SimMode::ExplicitBeams);
            b1.push_back(mx[0]);
            b2.push_back(mx[1]);
        }
        EmpiricalCdf ca(std::move(b1)), cb(std::move(b2));
        double d = ks_two_sample(ca, cb);
        double gate = 1.63 * std::sqrt(2.0 / static_cast<double>(n));
        details = fmt("two-sample KS %.4f over %.0f trials (99%% gate %.4f)", d,
                      static_cast<double>(n), gate);
        return d <= gate;
    });
    reg.check("mc-ks-analytic", [&](std::string& details) {
        // empirical beam-1 rate CDF against the closed-form CDF
        double worst = 0.0, worst_gate = 1.0;
        SimSeed seed{opt.seed ^ 0x6b73ull};
        for (bool bounded : {false, true}) {
            SystemConfig cfg(1.0, CellRadius::finite(1.0), 2, 1.0);
            auto model = bounded ? PathLossModel::bounded(4.0) : PathLossModel::unbounded(4.0);
            auto outcomes = run_trials(cfg, model, n_trials, seed, SimMode::Projection, opt.workers);
            std::vector<double> rates;
            rates.reserve(outcomes.size());
            for (const auto& t : outcomes)
                rates.push_back(t.rate_beam1);
            EmpiricalCdf cdf(std::move(rates));
            auto analytic = [&](double r) {
                double x = std::expm1(r);
                return bounded ? outage_bounded(cfg, 4.0, x).sinr_cdf_value
                               : outage_unbounded(cfg, 4.0, x).sinr_cdf_value;
            };
            // the rate law has one atom: rate 0 with the empty-cell mass
            auto analytic_left = [&](double r) { return r == 0.0 ? 0.0 : analytic(r); };
            double d = cdf.ks_distance(analytic, analytic_left);
            double gate = ks_band_99(cdf.size());
            worst = std::max(worst, d);
            worst_gate = gate;
        }
        details = fmt("worst KS %.5f over %.0f trials per model (99%% gate %.5f)", worst,
                      static_cast<double>(n_trials), worst_gate);
        return worst <= worst_gate;
    });
    reg.check("mc-empty-cell-fraction", [&](std::string& details) {
        SystemConfig cfg(1.0, CellRadius::finite(1.0), 2, 1.0);
        auto model = PathLossModel::unbounded(4.0);
        SimSeed seed{opt.seed ^ 0x656d70ull};
        auto outcomes = run_trials(cfg, model, n_trials, seed, SimMode::Projection, opt.workers);
        std::uint64_t empty = 0;
        for (const auto& t : outcomes)
            if (t.num_users == 0)
                ++empty;
        double frac = static_cast<double>(empty) / static_cast<double>(outcomes.size());
        double expect = std::exp(-cfg.mean_users());
        details = fmt("empty fraction %.5f vs exp(-pi) = %.5f (gate +- 0.005)", frac, expect);
        return std::abs(frac - expect) <= 0.005;
    });
    reg.check("mc-empirical-capacity", [&](std::string& details) {
        // eps-quantile of simulated rates against the analytic inversion
        const double lam = opt.quick ? 1.0 : 10.0;
        const double radius = opt.quick ? 1.0 : 5.0;
        SystemConfig cfg(lam, CellRadius::finite(radius), 2, 1.0);
        auto model = PathLossModel::unbounded(4.0);
        SimSeed seed{opt.seed ^ 0x717561ull};
        auto outcomes = run_trials(cfg, model, n_trials, seed, SimMode::Projection, opt.workers);
        std::vector<double> rates;
        rates.reserve(outcomes.size());
        for (const auto& t : outcomes)
            rates.push_back(t.rate_beam1);
        EmpiricalCdf cdf(std::move(rates));
        double emp = empirical_outage_capacity(cdf, 0.1);
        double ana = capacity_finite_d(cfg, model, 0.1).capacity_nats;
        double rel = std::abs(emp - ana) / ana;
        details = fmt("empirical %.5f vs analytic %.5f, relative error %.3g (gate 3%%)", emp, ana, rel);
        return rel <= 0.03;
    });
    reg.check("mc-extreme-gain", [&](std::string& details) {
        // a user essentially at the origin: enormous gain, finite SINR
        SystemConfig cfg(1.0, CellRadius::finite(1.0), 2, 1.0);
        auto model = PathLossModel::unbounded(4.0);
        double g = gain(model, 1e-12);
        SimSeed seed{opt.seed ^ 0x686f74ull};
        std::mt19937_64 eng = seed.engine(0);
        for (int i = 0; i < 1000; ++i) {
            auto sinrs = beam_sinrs(g, cfg, eng, SimMode::Projection);
            for (double s : sinrs)
                if (!std::isfinite(s) || s < 0.0) {
                    details = fmt("non-finite or negative SINR %.3g at gain %.3g", s, g);
                    return false;
                }
        }
        details = fmt("gain %.3g yields finite SINRs across 1000 draws", g);
        return true;
    });
    reg.check("quantile-monotone", [&](std::string& details) {
        SystemConfig cfg(1.0, CellRadius::finite(1.0), 2, 1.0);
        SimSeed seed{opt.seed ^ 0x6d6f6eull};
        auto outcomes = run_trials(cfg, PathLossModel::bounded(4.0), 5000, seed, SimMode::Projection, 1);
        std::vector<double> rates;
        for (const auto& t : outcomes)
            rates.push_back(t.rate_beam1);
        EmpiricalCdf cdf(std::move(rates));
        double prev = -1.0;
        for (double q : {0.05, 0.1, 0.3, 0.5, 0.8, 0.95}) {
            double v = cdf.quantile(q);
            if (v < prev) {
                details = fmt("quantile decreased at q=%.2f", q);
                return false;
            }
            prev = v;
        }
        details = "quantiles non-decreasing in the level";
        return true;
    });
}

} // namespace valdetail

// Full invariant suite.  Deterministic grid properties first, then the
// seeded Monte Carlo properties; `quick` shrinks grids and trial counts.
inline std::vector<PropertyResult> run_validation(const ValidationOptions& opt = {}) {
    valdetail::Registry reg;
    valdetail::register_specfun(reg);
    valdetail::register_pathloss(reg, opt);
    valdetail::register_outage(reg, opt);
    valdetail::register_capacity(reg, opt);
    valdetail::register_mc(reg, opt);
    return reg.results;
}

} // namespace obf
