#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "obf/system.hpp"

namespace obf {

enum class PathLossKind { Unbounded, Bounded, GuardZone, Shifted };

inline const char* to_string(PathLossKind k) {
    switch (k) {
        case PathLossKind::Unbounded: return "unbounded";
        case PathLossKind::Bounded: return "bounded";
        case PathLossKind::GuardZone: return "guard";
        case PathLossKind::Shifted: return "shifted";
    }
    return "?";
}

// Distance -> gain law G(d).  Four concrete models:
//   Unbounded  G(d) = d^-a           (diverges at d -> 0)
//   Bounded    G(d) = (1+d^a)^-1
//   GuardZone  G(d) = max(d0,d)^-a   (flat inside the guard distance)
//   Shifted    G(d) = (1+d)^-a
// The exponent must exceed 2 so that large-cell integrals of the gain stay
// finite; smaller exponents are rejected outright.
struct PathLossModel {
    PathLossKind kind;
    double alpha;
    double d0; // guard distance, GuardZone only

    static PathLossModel unbounded(double alpha) { return PathLossModel(PathLossKind::Unbounded, alpha, 0.0); }
    static PathLossModel bounded(double alpha) { return PathLossModel(PathLossKind::Bounded, alpha, 0.0); }
    static PathLossModel guard_zone(double alpha, double d0) {
        if (!(d0 >= 0.0) || !std::isfinite(d0))
            throw std::invalid_argument("PathLossModel: guard distance must be finite and >= 0, got " + std::to_string(d0));
        return PathLossModel(PathLossKind::GuardZone, alpha, d0);
    }
    static PathLossModel shifted(double alpha) { return PathLossModel(PathLossKind::Shifted, alpha, 0.0); }

  private:
    PathLossModel(PathLossKind kind_, double alpha_, double d0_) : kind(kind_), alpha(alpha_), d0(d0_) {
        if (!(alpha > 2.0) || !std::isfinite(alpha))
            throw std::invalid_argument("PathLossModel: alpha must be finite and > 2, got " + std::to_string(alpha));
    }
};

// G(d).  Unbounded at d=0 is a genuine singularity and is rejected.
inline double gain(const PathLossModel& m, double d) {
    if (!(d >= 0.0))
        throw std::domain_error("gain: distance must be >= 0, got " + std::to_string(d));
    switch (m.kind) {
        case PathLossKind::Unbounded:
            if (d == 0.0)
                throw std::domain_error("gain: unbounded model is singular at d = 0");
            return std::pow(d, -m.alpha);
        case PathLossKind::Bounded:
            return 1.0 / (1.0 + std::pow(d, m.alpha));
        case PathLossKind::GuardZone:
            return std::pow(std::max(m.d0, d), -m.alpha);
        case PathLossKind::Shifted:
            // exp/log1p form keeps the relative error ulp-level for d << 1,
            // matching the inverse below so round trips survive at d ~ 1e-3
            return std::exp(-m.alpha * std::log1p(d));
    }
    throw std::logic_error("gain: unreachable");
}

// 1/G(d), continuous at d = 0 for every model (0 for Unbounded).  This is
// the form integrands use, so the unbounded origin needs no special-casing.
inline double attenuation(const PathLossModel& m, double d) {
    switch (m.kind) {
        case PathLossKind::Unbounded:
            return std::pow(d, m.alpha);
        case PathLossKind::Bounded:
            return 1.0 + std::pow(d, m.alpha);
        case PathLossKind::GuardZone:
            return std::pow(std::max(m.d0, d), m.alpha);
        case PathLossKind::Shifted:
            return std::exp(m.alpha * std::log1p(d));
    }
    throw std::logic_error("attenuation: unreachable");
}

// Generalized inverse inf{d >= 0 : G(d) <= g}.  On a plateau (GuardZone
// with g >= G(d0), or any model with g >= G(0+)) the infimum is 0; that is
// the documented semantic for every flat region.
inline double generalized_inverse(const PathLossModel& m, double g) {
    if (!(g > 0.0))
        throw std::domain_error("generalized_inverse: gain must be > 0, got " + std::to_string(g));
    switch (m.kind) {
        case PathLossKind::Unbounded:
            return std::pow(g, -1.0 / m.alpha);
        case PathLossKind::Bounded: {
            if (g >= 1.0)
                return 0.0;
            return std::pow(1.0 / g - 1.0, 1.0 / m.alpha);
        }
        case PathLossKind::GuardZone: {
            double d = std::pow(g, -1.0 / m.alpha);
            return d <= m.d0 ? 0.0 : d;
        }
        case PathLossKind::Shifted: {
            if (g >= 1.0)
                return 0.0;
            // d = g^(-1/a) - 1 via expm1 so tiny d keeps full precision
            return std::expm1(-std::log(g) / m.alpha);
        }
    }
    throw std::logic_error("generalized_inverse: unreachable");
}

// CDF of the gain seen by a user placed uniformly in the disk of radius D:
// F(g) = 1 - (G^-1(g)/D)^2, clamped to [0,1].
inline double pathloss_cdf(const PathLossModel& m, const SystemConfig& cfg, double g) {
    if (cfg.radius.is_infinite())
        throw std::invalid_argument("pathloss_cdf: requires a finite cell radius");
    double ratio = generalized_inverse(m, g) / cfg.radius.value();
    double f = 1.0 - ratio * ratio;
    if (f < 0.0) return 0.0;
    if (f > 1.0) return 1.0;
    return f;
}

} // namespace obf
