#include "sdelab/theory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sdelab {
namespace theory {
namespace {

void check_interval(double s, double t) {
    if (!(0.0 <= s && s <= t))
        throw std::invalid_argument("theory: need 0 <= s <= t");
}

} // namespace

double relu_log_growth_mean(int n, double s, double t, MeanVariant v) {
    if (n < 1) throw std::invalid_argument("relu_log_growth_mean: n >= 1");
    check_interval(s, t);
    double q = 1.0 - std::exp2(-n);
    double coef = v == MeanVariant::main ? 1.0 / (4.0 * q) : q / 4.0;
    return (coef - 1.0 / n) * (t - s);
}

double relu_log_growth_var_bound(int n, double s, double t, std::span<const double> p2_samples) {
    if (n < 2) throw std::invalid_argument("relu_log_growth_var_bound: n >= 2");
    check_interval(s, t);
    if (t == s) return 0.0;
    if (p2_samples.size() < 2)
        throw std::invalid_argument("relu_log_growth_var_bound: need >= 2 curve samples");
    double p1 = 0.5 * (1.0 - std::exp2(-n));
    std::vector<double> integrand(p2_samples.size());
    for (std::size_t i = 0; i < p2_samples.size(); ++i) {
        double p2 = p2_samples[i];
        if (!(p2 >= 0.0 && p2 <= 1.0))
            throw std::invalid_argument("relu_log_growth_var_bound: p2 values must be in [0,1]");
        integrand[i] = 0.25 * ((p2 - p1 * p1) + (p1 - p2) / n);
    }
    double h = (t - s) / static_cast<double>(p2_samples.size() - 1);
    double gamma = 0.0;
    for (std::size_t i = 0; i + 1 < integrand.size(); ++i)
        gamma += 0.5 * h * (integrand[i] + integrand[i + 1]);
    gamma = std::max(gamma, 0.0);
    double root = 1.0 / std::sqrt(static_cast<double>(n)) + std::sqrt(gamma);
    return root * root * (t - s);
}

double piecewise_mean_drift(double alpha, double beta, int n) {
    if (n < 1) throw std::invalid_argument("piecewise_mean_drift: n >= 1");
    if (alpha == 0.0 && beta == 0.0)
        throw std::domain_error("piecewise_mean_drift: (alpha, beta) = (0, 0)");
    double q = 1.0 - std::exp2(-n);
    if (alpha == 0.0) return beta * beta * q / 4.0 - 1.0 / n;
    if (beta == 0.0) return alpha * alpha * q / 4.0 - 1.0 / n;
    return (alpha * alpha + beta * beta) / 4.0 - 1.0 / n;
}

double collapse_prob_init(int n) {
    if (n < 1) throw std::invalid_argument("collapse_prob_init: n >= 1");
    return std::exp2(-n);
}

double sequential_limit_variance(double t, LimitOrder order, LimitVariant v) {
    if (!(t >= 0.0)) throw std::invalid_argument("sequential_limit_variance: t >= 0");
    if (v == LimitVariant::reconciled) return std::exp(t / 2.0);
    return order == LimitOrder::depth_then_width ? std::exp(t / 2.0) : std::exp(t);
}

double sequential_limit_norm_ratio(double t, LimitOrder order, LimitVariant v) {
    if (!(t >= 0.0)) throw std::invalid_argument("sequential_limit_norm_ratio: t >= 0");
    if (v == LimitVariant::reconciled) return std::exp(t / 4.0);
    return order == LimitOrder::depth_then_width ? std::exp(t / 4.0) : std::exp(t / 2.0);
}

double ou_rate(double alpha) { return std::numbers::pi * alpha * alpha / 4.0; }

OuParams ou_marginal_params(double g_x0, double alpha, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("ou_marginal_params: t >= 0");
    double a = ou_rate(alpha);
    OuParams p;
    p.mean = g_x0 * std::exp(-a * t);
    p.variance = 2.0 * a * (1.0 - std::exp(-2.0 * a * t));
    return p;
}

} // namespace theory
} // namespace sdelab
