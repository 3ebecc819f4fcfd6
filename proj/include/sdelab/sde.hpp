#pragma once

#include <span>
#include <vector>

#include "sdelab/activation.hpp"
#include "sdelab/path.hpp"
#include "sdelab/rng.hpp"

namespace sdelab {

// Euler-Maruyama integration of dX = n^{-1/2} |phi(X)| dB and its multi-input
// block generalization, plus exact samplers for the closed-form limits.
struct SdeConfig {
    int dim = 1;               // state dimension n
    int steps_per_unit = 1000; // delta = 1 / steps_per_unit
    double t_end = 1.0;
    ActivationSpec activation = ActivationSpec::relu();

    // Stopped-process radius for activations that are only locally Lipschitz
    // (the exotic kind): a path leaving |X| < radius is frozen, flagged and
    // excluded from statistics. Ignored for globally Lipschitz activations;
    // <= 0 disables stopping entirely.
    double radius = 10.0;

    int grid_steps() const;
};

// One Euler path: X_{k+1} = X_k + n^{-1/2} |phi(X_k)| sqrt(delta) zeta_k,
// zeta_k iid N(0, I_n), drawn coordinate-wise from `stream`.
Path euler_path(const SdeConfig& cfg, std::span<const double> x0, RngStream stream);

// k coupled paths driven by the block covariance Gram(phi) (x) I_n: per step
// the k x k Gram of the post-activations is factored (PSD Cholesky) and
// applied to a k*n standard Gaussian drawn input-major, so k = 1 reproduces
// euler_path bit-for-bit on the same stream.
std::vector<Path> euler_path_multi(const SdeConfig& cfg,
                                   const std::vector<std::vector<double>>& x0s,
                                   RngStream stream);

// Exact geometric Brownian motion sample:
// X_t = x0 * exp((a - sigma^2/2) t + sigma B_t), x0 > 0.
double gbm_exact(double x0, double a, double sigma, double t, RngStream& stream);

// Exact Ornstein-Uhlenbeck sample:
// N(x0 e^{-a t} + b (1 - e^{-a t}), sigma^2/(2a) (1 - e^{-2 a t})), a > 0.
double ou_exact(double x0, double a, double b, double sigma, double t, RngStream& stream);

struct MckeanCheck {
    std::vector<double> times;
    std::vector<double> empirical_var;  // Var of the first coordinate across samples
    std::vector<double> theory_var;     // d^{-1} |x|^2 exp(t/2)
    long n_samples = 0;
};

// Coordinate-variance check of the wide-limit marginal law against
// d^{-1} |x|^2 exp(t/2) on a five-point time grid. ReLU only.
MckeanCheck mckean_marginal_check(int width, int input_dim, std::span<const double> x,
                                  int steps, long n_samples, RngStream stream,
                                  int threads = 1);

} // namespace sdelab
