#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "obf/pathloss.hpp"
#include "obf/quadrature.hpp"
#include "obf/specfun.hpp"
#include "obf/system.hpp"

namespace obf {

enum class OutageMethod {
    Quadrature,
    ClosedFormUnbounded,
    ClosedFormBounded,
    LargeSystemUnbounded,
    LargeSystemBounded,
};

inline const char* to_string(OutageMethod m) {
    switch (m) {
        case OutageMethod::Quadrature: return "quadrature";
        case OutageMethod::ClosedFormUnbounded: return "closed-form-unbounded";
        case OutageMethod::ClosedFormBounded: return "closed-form-bounded";
        case OutageMethod::LargeSystemUnbounded: return "large-system-unbounded";
        case OutageMethod::LargeSystemBounded: return "large-system-bounded";
    }
    return "?";
}

// Outage evaluation: the CDF of the best-user SINR on a beam (equivalently
// the CDF of the beam rate at the matching threshold).  The exponent field
// retains log F so log-domain identities can be tested without re-taking
// logs of numbers near 0 or 1.
struct OutageResult {
    double sinr_cdf_value = 0.0;
    double rate_cdf_value = 0.0; // equal to sinr_cdf_value by construction
    double exponent = 0.0;       // log of the CDF value (<= 0)
    OutageMethod method = OutageMethod::Quadrature;
};

// SINR CDF for one user at fixed gain g:
//   F(x | g) = 1 - e^(-x/(g rho)) / (x+1)^(M-1).
// The interference from the other M-1 beams contributes the power-law
// factor; the noise term contributes the exponential.
inline double conditional_sinr_cdf(const SystemConfig& cfg, double g, double x) {
    if (!(g > 0.0))
        throw std::domain_error("conditional_sinr_cdf: gain must be > 0");
    if (!(x >= 0.0))
        throw std::domain_error("conditional_sinr_cdf: threshold must be >= 0");
    double v = 1.0 - std::exp(-x / (g * cfg.power)) * std::pow(x + 1.0, -(cfg.num_beams - 1));
    if (v < 0.0) return 0.0;
    if (v > 1.0) return 1.0;
    return v;
}

namespace detail {

inline OutageResult result_from_exponent(double exponent, OutageMethod method) {
    OutageResult r;
    r.exponent = exponent;
    r.sinr_cdf_value = std::exp(exponent);
    r.rate_cdf_value = r.sinr_cdf_value;
    r.method = method;
    return r;
}

// Shared factor of the closed forms:
//   (2 lambda pi / alpha) (rho/x)^(2/alpha) gamma(2/alpha, u) / (x+1)^(M-1)
// with u = x D^alpha / rho, or the complete-gamma tail for infinite D.
// Accumulated in the log-free product domain: each factor is moderate, only
// the final exp can underflow, which is the intended behaviour.
inline double closed_form_magnitude(const SystemConfig& cfg, double alpha, double x,
                                    bool infinite_radius) {
    const double s = 2.0 / alpha;
    double gamma_term;
    if (infinite_radius) {
        gamma_term = complete_gamma(s);
    } else {
        const double d = cfg.radius.value();
        const double u = x * std::pow(d, alpha) / cfg.power;
        gamma_term = lower_incomplete_gamma(s, u);
    }
    return 2.0 * cfg.lambda * std::numbers::pi / alpha
         * std::pow(cfg.power / x, s)
         * gamma_term
         * std::pow(x + 1.0, -(cfg.num_beams - 1));
}

} // namespace detail

// Outage probability for any path-loss model on a finite cell:
//   F(x) = exp( -lambda pi / (x+1)^(M-1) * I ),
//   I = integral_0^(D^2) exp(-x * A(sqrt(t)) / rho) dt,  A = 1/G.
// The integrand is written with the attenuation A so the unbounded model's
// gain singularity at the origin never appears (A(0) = 0 there).  The
// integral tolerance is tightened by the prefactor so the CDF itself is
// accurate to ~1e-9 in absolute terms.
inline OutageResult outage_general(const SystemConfig& cfg, const PathLossModel& model, double x) {
    if (cfg.radius.is_infinite())
        throw std::invalid_argument("outage_general: requires a finite cell radius");
    if (!(x >= 0.0))
        throw std::domain_error("outage_general: threshold must be >= 0");
    const double d = cfg.radius.value();
    const double d2 = d * d;
    const double prefactor = cfg.lambda * std::numbers::pi
                           * std::pow(x + 1.0, -(cfg.num_beams - 1));
    const double tol = 1e-9 / std::max(1.0, prefactor);
    auto integrand = [&](double t) {
        return std::exp(-x * attenuation(model, std::sqrt(t)) / cfg.power);
    };
    QuadResult q;
    if (model.kind == PathLossKind::GuardZone && model.d0 > 0.0 && model.d0 < d) {
        // A has a kink where the guard plateau ends; split there
        q = integrate_adaptive_split(integrand, 0.0, d2, {model.d0 * model.d0}, tol);
    } else {
        q = integrate_adaptive(integrand, 0.0, d2, tol);
    }
    if (!q.converged)
        throw std::runtime_error("outage_general: quadrature did not reach tolerance; achieved error estimate "
                                 + std::to_string(q.error_estimate));
    return detail::result_from_exponent(-prefactor * q.value, OutageMethod::Quadrature);
}

// Closed form for G(d) = d^-alpha:
//   F(x) = exp( -(2 lambda pi / alpha) (rho/x)^(2/alpha)
//               gamma(2/alpha, x D^alpha / rho) / (x+1)^(M-1) )
// and the infinite-radius version with Gamma(2/alpha) in place of the
// incomplete gamma.  x = 0 makes the closed form indeterminate; its limit
// is the empty-cell probability exp(-lambda pi D^2) (0 for infinite D) and
// is returned directly.
inline OutageResult outage_unbounded(const SystemConfig& cfg, double alpha, double x) {
    if (!(alpha > 2.0))
        throw std::invalid_argument("outage_unbounded: alpha must be > 2");
    if (!(x >= 0.0))
        throw std::domain_error("outage_unbounded: threshold must be >= 0");
    const bool inf_d = cfg.radius.is_infinite();
    const OutageMethod method = inf_d ? OutageMethod::LargeSystemUnbounded
                                      : OutageMethod::ClosedFormUnbounded;
    if (x == 0.0) {
        if (inf_d) {
            OutageResult r;
            r.exponent = -std::numeric_limits<double>::infinity();
            r.sinr_cdf_value = 0.0;
            r.rate_cdf_value = 0.0;
            r.method = method;
            return r;
        }
        return detail::result_from_exponent(-cfg.mean_users(), method);
    }
    return detail::result_from_exponent(-detail::closed_form_magnitude(cfg, alpha, x, inf_d), method);
}

// Closed form for G(d) = (1+d^alpha)^-1: identical to the unbounded
// exponent scaled by e^(-x/rho) (the extra "+1" in the attenuation factors
// out of the integral exactly).
inline OutageResult outage_bounded(const SystemConfig& cfg, double alpha, double x) {
    if (!(alpha > 2.0))
        throw std::invalid_argument("outage_bounded: alpha must be > 2");
    if (!(x >= 0.0))
        throw std::domain_error("outage_bounded: threshold must be >= 0");
    const bool inf_d = cfg.radius.is_infinite();
    const OutageMethod method = inf_d ? OutageMethod::LargeSystemBounded
                                      : OutageMethod::ClosedFormBounded;
    if (x == 0.0) {
        if (inf_d) {
            OutageResult r;
            r.exponent = -std::numeric_limits<double>::infinity();
            r.sinr_cdf_value = 0.0;
            r.rate_cdf_value = 0.0;
            r.method = method;
            return r;
        }
        return detail::result_from_exponent(-cfg.mean_users(), method);
    }
    const double magnitude = detail::closed_form_magnitude(cfg, alpha, x, inf_d)
                           * std::exp(-x / cfg.power);
    return detail::result_from_exponent(-magnitude, method);
}

// Rate-domain wrappers: the outage probability at rate threshold x is the
// SINR CDF at e^x - 1.
inline OutageResult rate_outage(const SystemConfig& cfg, const PathLossModel& model, double rate) {
    if (!(rate >= 0.0))
        throw std::domain_error("rate_outage: rate must be >= 0");
    return outage_general(cfg, model, std::expm1(rate));
}

inline OutageResult rate_outage_unbounded(const SystemConfig& cfg, double alpha, double rate) {
    if (!(rate >= 0.0))
        throw std::domain_error("rate_outage_unbounded: rate must be >= 0");
    return outage_unbounded(cfg, alpha, std::expm1(rate));
}

inline OutageResult rate_outage_bounded(const SystemConfig& cfg, double alpha, double rate) {
    if (!(rate >= 0.0))
        throw std::domain_error("rate_outage_bounded: rate must be >= 0");
    return outage_bounded(cfg, alpha, std::expm1(rate));
}

} // namespace obf
