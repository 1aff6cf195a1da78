#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace obf {

struct BisectResult {
    double root = 0.0;
    double f_root = 0.0;
    int iterations = 0;
    double low = 0.0;   // final bracket
    double high = 0.0;
    bool converged = false;
};

// Bisection on a bracketing interval [lo, hi] with f(lo) <= 0 <= f(hi).
// Runs until the bracket collapses to adjacent doubles (or the iteration
// cap), so the returned root is as tight as the floating-point grid allows;
// scalar solves here are cheap and downstream comparisons need ulp-level
// agreement between independently computed capacities.
template <class F>
BisectResult bisect(const F& f, double lo, double hi, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo > 0.0 || fhi < 0.0)
        throw std::invalid_argument("bisect: interval does not bracket a root");
    BisectResult r;
    if (flo == 0.0) {
        r.root = lo; r.f_root = 0.0; r.low = lo; r.high = lo; r.converged = true;
        return r;
    }
    if (fhi == 0.0) {
        r.root = hi; r.f_root = 0.0; r.low = hi; r.high = hi; r.converged = true;
        return r;
    }
    for (int i = 0; i < max_iter; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) { // bracket collapsed to adjacent doubles
            break;
        }
        double fm = f(mid);
        ++r.iterations;
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if (fm < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    r.converged = r.iterations < max_iter;
    double flo2 = std::abs(f(lo)), fhi2 = std::abs(f(hi));
    r.root = flo2 <= fhi2 ? lo : hi;
    r.f_root = f(r.root);
    r.low = lo;
    r.high = hi;
    return r;
}

// Expands [lo, hi] upward by doubling (hi - lo) growth until f(hi) >= 0.
// Assumes f increasing with f(lo) <= 0 somewhere reachable; throws if the
// bracket cannot be established within max_doublings.
template <class F>
std::pair<double, double> expand_bracket_up(const F& f, double lo, double hi,
                                            int max_doublings = 200) {
    if (!(hi > lo))
        throw std::invalid_argument("expand_bracket_up: need hi > lo");
    for (int i = 0; i < max_doublings; ++i) {
        if (f(hi) >= 0.0)
            return {lo, hi};
        double width = hi - lo;
        lo = hi;
        hi += 2.0 * width;
    }
    throw std::runtime_error("expand_bracket_up: no sign change found");
}

} // namespace obf
