#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace obf {

// Complete gamma function for shape parameters in (0, 10].
// Wraps the standard library implementation, which is correctly rounded to
// well below the 1e-13 relative accuracy we need in this range.
inline double complete_gamma(double s) {
    if (!(s > 0.0) || s > 10.0)
        throw std::domain_error("complete_gamma: shape must be in (0, 10], got " + std::to_string(s));
    return std::tgamma(s);
}

namespace detail {

// Power-series for the regularized P(s,x) = gamma(s,x)/Gamma(s), valid and
// fast for x < s+1:  P(s,x) = x^s e^-x / Gamma(s+1) * sum_k x^k / ((s+1)...(s+k)).
inline double lower_gamma_series(double s, double x) {
    double term = 1.0 / s;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= x / (s + k);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-17)
            break;
    }
    // gamma(s,x) = x^s e^-x * sum; evaluate the prefactor in log form so
    // large x (or tiny x with small s) cannot underflow prematurely.
    return sum * std::exp(s * std::log(x) - x);
}

// Modified Lentz continued fraction for the upper tail Q(s,x)*Gamma(s),
// valid for x >= s+1:  Gamma(s,x) = x^s e^-x / (x+1-s- 1(1-s)/(x+3-s- ...)).
inline double upper_gamma_cf(double s, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16)
            break;
    }
    return h * std::exp(s * std::log(x) - x);
}

} // namespace detail

// Lower incomplete gamma function gamma(s,x) = integral_0^x t^(s-1) e^-t dt,
// relative error <= 1e-12 for s in (0, 10], x >= 0.  Series below the
// switchover x = s+1, continued fraction (via the upper tail) above it.
inline double lower_incomplete_gamma(double s, double x) {
    if (!(s > 0.0) || s > 10.0)
        throw std::domain_error("lower_incomplete_gamma: shape must be in (0, 10], got " + std::to_string(s));
    if (x < 0.0)
        throw std::domain_error("lower_incomplete_gamma: x must be >= 0, got " + std::to_string(x));
    if (x == 0.0)
        return 0.0;
    if (x < s + 1.0)
        return detail::lower_gamma_series(s, x);
    double g = complete_gamma(s) - detail::upper_gamma_cf(s, x);
    return g < 0.0 ? 0.0 : g;
}

} // namespace obf
