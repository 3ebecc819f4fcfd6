#pragma once

#include <span>
#include <string>
#include <vector>

namespace sdelab {
namespace theory {

// Two published forms of the ReLU mean log-growth coefficient differ in
// whether the 1 - 2^{-n} factor is inverted; both are exposed and the
// regime-change experiment adjudicates empirically. `main` is the library
// default: it alone matches the drift computation
// E mu = (n/4)(1 - 2^{-n})^{-1} - 1 and the sign flip between widths 3 and 4.
enum class MeanVariant { main, appendix };

enum class LimitOrder { depth_then_width, width_then_depth };

// `as_stated` keeps the two sequential-limit displays (exp(t/2) vs exp(t)
// variance, exp(t/4) vs exp(t/2) norm ratio); `reconciled` applies the
// variance recursion q' = q/2 implied by N(0, 1/n) weights to both orders.
// The limit-order experiment measures which one holds.
enum class LimitVariant { as_stated, reconciled };

// Mean of log(|phi(X_t)| / |phi(X_s)|) conditional on no collapse, ReLU.
double relu_log_growth_mean(int n, double s, double t, MeanVariant v);

// Variance bound (n^{-1/2} + Gamma^{1/2})^2 (t - s) where Gamma integrates
// (p2(u) - p1^2) + n^{-1}(p1 - p2(u)) over [s, t] with p1 = (1 - 2^{-n})/2
// and p2(u) = E phi'(X^1_u) phi'(X^2_u) supplied as uniformly spaced samples.
double relu_log_growth_var_bound(int n, double s, double t, std::span<const double> p2_samples);

// Mean log-growth per unit time for phi(z) = alpha relu(z) + beta relu(-z).
// Three regimes: alpha = 0, beta = 0, both nonzero.
double piecewise_mean_drift(double alpha, double beta, int n);

// Probability that the initial post-activations vanish: 2^{-n}.
double collapse_prob_init(int n);

// Variance multiplier on d^{-1} |x|^2 for a coordinate of the pre-activation
// at time t, by order of the sequential limits.
double sequential_limit_variance(double t, LimitOrder order, LimitVariant v);

// Limiting post-activation norm ratio |phi(X_t)| / |phi(X_0)|.
double sequential_limit_norm_ratio(double t, LimitOrder order,
                                   LimitVariant v = LimitVariant::as_stated);

struct OuParams {
    double mean = 0.0;
    double variance = 0.0;
};

// Marginal law of g(X_t) for the exotic activation: mean g(x0) e^{-a t},
// variance 2a (1 - e^{-2 a t}), with rate a = pi alpha^2 / 4. For alpha = 1
// the variance factor 2a equals pi/2.
OuParams ou_marginal_params(double g_x0, double alpha, double t);

double ou_rate(double alpha);

} // namespace theory

// A closed-form target attached to an experiment report.
struct TheoryPrediction {
    std::string label;
    std::string kind;  // mean | variance | variance_bound | probability | density_params
    std::vector<double> values;
    std::string source;  // plain-language statement of the law being tested
};

} // namespace sdelab
