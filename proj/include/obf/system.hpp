#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace obf {

// Cell radius; either a positive finite value or the distinguished
// "infinite" configuration that selects large-system formulas explicitly
// (never by magnitude threshold).
class CellRadius {
  public:
    static CellRadius finite(double d) {
        if (!(d > 0.0) || !std::isfinite(d))
            throw std::invalid_argument("CellRadius: radius must be finite and > 0, got " + std::to_string(d));
        return CellRadius(d);
    }
    static CellRadius infinite() { return CellRadius(std::numeric_limits<double>::infinity()); }

    bool is_infinite() const { return std::isinf(d_); }
    // Finite value accessor; misuse on an infinite radius is a logic error.
    double value() const {
        if (is_infinite())
            throw std::logic_error("CellRadius: value() called on infinite radius");
        return d_;
    }

  private:
    explicit CellRadius(double d) : d_(d) {}
    double d_;
};

// Cell and transmission parameters: user intensity (per unit area), cell
// radius, beam/antenna count, and per-beam transmit power (linear scale).
struct SystemConfig {
    double lambda;
    CellRadius radius;
    int num_beams;
    double power;

    SystemConfig(double lambda_, CellRadius radius_, int num_beams_, double power_)
        : lambda(lambda_), radius(radius_), num_beams(num_beams_), power(power_) {
        if (!(lambda > 0.0) || !std::isfinite(lambda))
            throw std::invalid_argument("SystemConfig: lambda must be finite and > 0, got " + std::to_string(lambda));
        if (num_beams < 1)
            throw std::invalid_argument("SystemConfig: num_beams must be >= 1, got " + std::to_string(num_beams));
        if (!(power > 0.0) || !std::isfinite(power))
            throw std::invalid_argument("SystemConfig: power must be finite and > 0, got " + std::to_string(power));
    }

    // Mean user count lambda*pi*D^2 (finite radius only).
    double mean_users() const {
        return lambda * std::numbers::pi * radius.value() * radius.value();
    }
};

// A rate threshold (nats/s/Hz) paired with the outage tolerance.
struct OutageQuery {
    double target_rate;
    double epsilon;

    OutageQuery(double target_rate_, double epsilon_)
        : target_rate(target_rate_), epsilon(epsilon_) {
        if (!(target_rate >= 0.0) || !std::isfinite(target_rate))
            throw std::invalid_argument("OutageQuery: target rate must be finite and >= 0, got " + std::to_string(target_rate));
        if (!(epsilon > 0.0 && epsilon < 1.0))
            throw std::invalid_argument("OutageQuery: epsilon must lie in (0,1), got " + std::to_string(epsilon));
    }
};

} // namespace obf
