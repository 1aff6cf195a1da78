#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace obf {

// Sorted sample set with quantile and Kolmogorov-Smirnov accessors.
class EmpiricalCdf {
  public:
    explicit EmpiricalCdf(std::vector<double> samples) : samples_(std::move(samples)) {
        if (samples_.empty())
            throw std::invalid_argument("EmpiricalCdf: need at least one sample");
        std::sort(samples_.begin(), samples_.end());
    }

    const std::vector<double>& samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }

    // Fraction of samples <= x.
    double value_at(double x) const {
        auto it = std::upper_bound(samples_.begin(), samples_.end(), x);
        return static_cast<double>(it - samples_.begin()) / static_cast<double>(samples_.size());
    }

    // Lower order statistic convention: the ceil(q*n)-th smallest sample.
    double quantile(double q) const {
        if (!(q > 0.0 && q < 1.0))
            throw std::invalid_argument("EmpiricalCdf: quantile level must lie in (0,1)");
        const double n = static_cast<double>(samples_.size());
        std::size_t k = static_cast<std::size_t>(std::ceil(q * n));
        if (k < 1) k = 1;
        if (k > samples_.size()) k = samples_.size();
        return samples_[k - 1];
    }

    // One-sample KS distance sup_x |F_hat(x) - F(x)| against a reference CDF
    // F (right-continuous).  Tied samples are treated as one jump, and the
    // pre-jump gap uses the reference's left limit, so references with atoms
    // (e.g. a point mass at rate 0 from empty cells) are compared correctly.
    template <class F, class FLeft>
    double ks_distance(const F& reference_cdf, const FLeft& reference_cdf_left_limit) const {
        const double n = static_cast<double>(samples_.size());
        double d = 0.0;
        std::size_t i = 0;
        while (i < samples_.size()) {
            std::size_t j = i + 1;
            while (j < samples_.size() && samples_[j] == samples_[i])
                ++j;
            d = std::max(d, reference_cdf_left_limit(samples_[i]) - static_cast<double>(i) / n);
            d = std::max(d, static_cast<double>(j) / n - reference_cdf(samples_[i]));
            i = j;
        }
        return d;
    }

    // Convenience for atom-free references: the left limit equals the value.
    template <class F>
    double ks_distance(const F& reference_cdf) const {
        return ks_distance(reference_cdf, reference_cdf);
    }

  private:
    std::vector<double> samples_;
};

// Two-sample KS distance (max gap between the two empirical CDFs).
inline double ks_two_sample(const EmpiricalCdf& a, const EmpiricalCdf& b) {
    const auto& xa = a.samples();
    const auto& xb = b.samples();
    const double na = static_cast<double>(xa.size());
    const double nb = static_cast<double>(xb.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < xa.size() && j < xb.size()) {
        const double x = std::min(xa[i], xb[j]);
        while (i < xa.size() && xa[i] <= x) ++i;
        while (j < xb.size() && xb[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

// 99% acceptance band for the one-sample KS statistic.
inline double ks_band_99(std::size_t n) {
    return 1.63 / std::sqrt(static_cast<double>(n));
}

// Empirical outage capacity: the eps-quantile of the rate samples.  Needs a
// meaningful sample size to say anything about a tail quantile.
inline double empirical_outage_capacity(const EmpiricalCdf& cdf, double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("empirical_outage_capacity: epsilon must lie in (0,1)");
    if (cdf.size() < 1000)
        throw std::invalid_argument("empirical_outage_capacity: need at least 1000 trials");
    return cdf.quantile(eps);
}

} // namespace obf
