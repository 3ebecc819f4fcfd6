#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sdelab {

enum class ActivationKind {
    relu,
    piecewise_linear,  // alpha*relu(z) + beta*relu(-z)
    linear,            // alpha*z + beta
    smooth_relu,       // (1/m) (log(1 + exp(m z)) - log 2); derivative is the logistic map
    exotic,            // exp(erfi_inv(alpha*z + beta)^2)
    tanh,
    gelu,
    swish,
};

// Value/derivative pair for one activation, plus the parameters that define
// it. Pure and freely shareable.
struct ActivationSpec {
    ActivationKind kind = ActivationKind::relu;
    double alpha = 0.0;  // m for smooth_relu
    double beta = 0.0;

    static ActivationSpec relu() { return {ActivationKind::relu, 0.0, 0.0}; }
    static ActivationSpec piecewise(double alpha, double beta) {
        return {ActivationKind::piecewise_linear, alpha, beta};
    }
    static ActivationSpec identity() { return piecewise(1.0, -1.0); }
    static ActivationSpec linear(double alpha, double beta) {
        return {ActivationKind::linear, alpha, beta};
    }
    static ActivationSpec smooth_relu(double m) { return {ActivationKind::smooth_relu, m, 0.0}; }
    static ActivationSpec exotic(double alpha, double beta) {
        return {ActivationKind::exotic, alpha, beta};
    }
    static ActivationSpec tanh() { return {ActivationKind::tanh, 0.0, 0.0}; }
    static ActivationSpec gelu() { return {ActivationKind::gelu, 0.0, 0.0}; }
    static ActivationSpec swish() { return {ActivationKind::swish, 0.0, 0.0}; }

    double value(double z) const;

    // Kink convention: relu and piecewise report derivative 0 at z == 0
    // exactly (the indicator events {z > 0}, {z < 0} used by the norm
    // theory).
    double deriv(double z) const;

    // True when the activation maps a half-line to exact zeros, so the
    // collapse event {phi(Y) = 0} has positive probability. relu, and
    // piecewise with exactly one nonzero coefficient.
    bool hard_zero() const;

    // Only locally Lipschitz (the exotic kind); the SDE integrator applies
    // its stopped-process radius to these.
    bool locally_lipschitz_only() const { return kind == ActivationKind::exotic; }

    // Coordinatewise application.
    void apply(std::span<const double> in, std::span<double> out) const;
    std::vector<double> apply(const std::vector<double>& v) const;

    // Canonical CLI spelling, e.g. "piecewise:1:-1".
    std::string name() const;
};

// Parse a CLI activation spec: relu | identity | piecewise:a:b | linear:a:b |
// smooth_relu:m | exotic:a:b | tanh | gelu | swish.
ActivationSpec parse_activation(std::string_view text);

// The transform pair of the Ornstein-Uhlenbeck construction:
//   exotic_phi(a,b,y) = exp(erfi_inv(a y + b)^2)   (the activation itself)
//   exotic_g(a,b,y)   = a sqrt(pi) erfi_inv(a y + b)
// g is strictly increasing in y and g(X) follows mean-reverting OU dynamics
// when X solves the exotic-activation SDE.
double exotic_phi(double alpha, double beta, double y);
double exotic_g(double alpha, double beta, double y);

// Power transform (alpha y + beta)^gamma of the geometric-Brownian
// construction; requires a positive base.
double gbm_transform_g(double alpha, double beta, double gamma, double y);

} // namespace sdelab
