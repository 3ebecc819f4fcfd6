#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace sdelab {

// Levels of the quantiles reported by summarize().
inline constexpr std::array<double, 5> kQuantileLevels = {0.005, 0.025, 0.5, 0.975, 0.995};

struct MonteCarloSummary {
    long n_samples = 0;   // retained + excluded
    long n_excluded = 0;  // stopped / collapsed samples, never silently resampled
    double mean = 0.0;
    double variance = 0.0;  // unbiased
    double std_error = 0.0; // sqrt(variance / retained)
    std::array<double, 5> quantiles{};

    long retained() const { return n_samples - n_excluded; }
};

// Moments by compensated summation over the sorted samples (sorting makes the
// result exactly permutation-invariant), quantiles by linear interpolation.
// Needs at least two retained samples.
MonteCarloSummary summarize(std::span<const double> samples, long n_excluded = 0);

struct KsResult {
    double statistic = 0.0;
    double p_value = 0.0;
    double n_effective = 0.0;
};

// One-sample Kolmogorov-Smirnov against N(mu, sigma^2).
KsResult ks_test_normal(std::span<const double> samples, double mu, double sigma);

// Against a lognormal: log-transform, then the normal test (exact change of
// variables). All samples must be positive.
KsResult ks_test_lognormal(std::span<const double> samples, double mu, double sigma);

// Two-sample test; the p-value uses the effective count n1*n2/(n1+n2).
KsResult ks_test_two_sample(std::span<const double> a, std::span<const double> b);

// Gaussian kernel density estimate. Default bandwidth
// 0.9 * min(std, IQR/1.34) * n^(-1/5).
class GaussianKde {
public:
    GaussianKde(std::vector<double> samples, double bandwidth);
    double operator()(double x) const;
    double bandwidth() const { return bandwidth_; }

private:
    std::vector<double> samples_;
    double bandwidth_;
};

GaussianKde gaussian_kde(std::span<const double> samples,
                         std::optional<double> bandwidth = std::nullopt);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Wilson score interval for a binomial proportion.
Interval wilson_ci(long successes, long n, double level = 0.95);

double median(std::span<const double> samples);

} // namespace sdelab
