#include "sdelab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sdelab/special.hpp"

namespace sdelab {
namespace {

// Neumaier-compensated sum.
double comp_sum(std::span<const double> v) {
    double sum = 0.0, comp = 0.0;
    for (double x : v) {
        double t = sum + x;
        comp += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

double quantile_sorted(std::span<const double> sorted, double q) {
    double pos = q * static_cast<double>(sorted.size() - 1);
    std::size_t i = static_cast<std::size_t>(pos);
    if (i + 1 >= sorted.size()) return sorted.back();
    double frac = pos - static_cast<double>(i);
    return sorted[i] + frac * (sorted[i + 1] - sorted[i]);
}

KsResult ks_one_sample_uniformized(std::span<const double> cdf_values_sorted) {
    std::size_t n = cdf_values_sorted.size();
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double f = cdf_values_sorted[i];
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    KsResult r;
    r.statistic = d;
    r.n_effective = static_cast<double>(n);
    r.p_value = ks_asymptotic_pvalue(d, r.n_effective);
    return r;
}

} // namespace

MonteCarloSummary summarize(std::span<const double> samples, long n_excluded) {
    if (samples.size() < 2)
        throw std::invalid_argument("summarize: need at least 2 samples");
    std::vector<double> s(samples.begin(), samples.end());
    std::sort(s.begin(), s.end());

    MonteCarloSummary out;
    out.n_excluded = n_excluded;
    out.n_samples = static_cast<long>(s.size()) + n_excluded;
    double n = static_cast<double>(s.size());
    out.mean = comp_sum(s) / n;

    std::vector<double> dev2(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        double d = s[i] - out.mean;
        dev2[i] = d * d;
    }
    out.variance = comp_sum(dev2) / (n - 1.0);
    out.std_error = std::sqrt(out.variance / n);
    for (std::size_t q = 0; q < kQuantileLevels.size(); ++q)
        out.quantiles[q] = quantile_sorted(s, kQuantileLevels[q]);
    return out;
}

KsResult ks_test_normal(std::span<const double> samples, double mu, double sigma) {
    if (samples.size() < 35)
        throw std::invalid_argument("ks_test: need at least 35 samples");
    if (!(sigma > 0.0)) throw std::invalid_argument("ks_test: sigma must be > 0");
    std::vector<double> f(samples.size());
    std::vector<double> s(samples.begin(), samples.end());
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) f[i] = normal_cdf((s[i] - mu) / sigma);
    return ks_one_sample_uniformized(f);
}

KsResult ks_test_lognormal(std::span<const double> samples, double mu, double sigma) {
    std::vector<double> logs(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!(samples[i] > 0.0))
            throw std::invalid_argument("ks_test_lognormal: samples must be positive");
        logs[i] = std::log(samples[i]);
    }
    return ks_test_normal(logs, mu, sigma);
}

KsResult ks_test_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 35 || b.size() < 35)
        throw std::invalid_argument("ks_test: need at least 35 samples per side");
    std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    double na = static_cast<double>(x.size()), nb = static_cast<double>(y.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        double v = std::min(x[i], y[j]);
        while (i < x.size() && x[i] <= v) ++i;
        while (j < y.size() && y[j] <= v) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    KsResult r;
    r.statistic = d;
    r.n_effective = na * nb / (na + nb);
    r.p_value = ks_asymptotic_pvalue(d, r.n_effective);
    return r;
}

GaussianKde::GaussianKde(std::vector<double> samples, double bandwidth)
    : samples_(std::move(samples)), bandwidth_(bandwidth) {}

double GaussianKde::operator()(double x) const {
    constexpr double inv_sqrt_2pi = 0.3989422804014326779;
    double acc = 0.0;
    for (double s : samples_) {
        double u = (x - s) / bandwidth_;
        acc += std::exp(-0.5 * u * u);
    }
    return acc * inv_sqrt_2pi / (bandwidth_ * static_cast<double>(samples_.size()));
}

GaussianKde gaussian_kde(std::span<const double> samples, std::optional<double> bandwidth) {
    if (samples.size() < 2)
        throw std::invalid_argument("gaussian_kde: need at least 2 samples");
    double bw;
    if (bandwidth) {
        bw = *bandwidth;
        if (!(bw > 0.0)) throw std::invalid_argument("gaussian_kde: bandwidth must be > 0");
    } else {
        MonteCarloSummary s = summarize(samples);
        if (s.variance == 0.0)
            throw std::invalid_argument("gaussian_kde: zero-variance samples");
        std::vector<double> sorted(samples.begin(), samples.end());
        std::sort(sorted.begin(), sorted.end());
        double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
        double sd = std::sqrt(s.variance);
        double spread = iqr > 0.0 ? std::min(sd, iqr / 1.34) : sd;
        bw = 0.9 * spread * std::pow(static_cast<double>(samples.size()), -0.2);
    }
    return GaussianKde(std::vector<double>(samples.begin(), samples.end()), bw);
}

Interval wilson_ci(long successes, long n, double level) {
    if (n <= 0 || successes < 0 || successes > n)
        throw std::invalid_argument("wilson_ci: bad counts");
    if (!(level > 0.0 && level < 1.0))
        throw std::invalid_argument("wilson_ci: level must be in (0,1)");
    double z = normal_quantile(0.5 + level / 2.0);
    double nn = static_cast<double>(n);
    double p = static_cast<double>(successes) / nn;
    double z2 = z * z;
    double denom = 1.0 + z2 / nn;
    double center = (p + z2 / (2.0 * nn)) / denom;
    double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double median(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("median: empty");
    std::vector<double> s(samples.begin(), samples.end());
    std::sort(s.begin(), s.end());
    return quantile_sorted(s, 0.5);
}

} // namespace sdelab
