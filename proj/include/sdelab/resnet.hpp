#pragma once

#include <span>
#include <vector>

#include "sdelab/activation.hpp"
#include "sdelab/path.hpp"
#include "sdelab/rng.hpp"
#include "sdelab/stats.hpp"

namespace sdelab {

// A residual network draw: Y_0 = W_in x, then
//   Y_l = Y_{l-1} + c * W_l phi(Y_{l-1}),  c = 1/sqrt(L) when scaled
// with W_in entries N(0, 1/d) and W_l entries N(0, 1/n). Weights are sampled
// on the fly from per-layer child streams and never stored (gradient_norms
// is the exception): stream.child("win") feeds W_in row-major and
// stream.child("w", l) feeds W_l row-major, so a fixed (seed, path) pins the
// whole draw.
struct NetworkConfig {
    int width = 1;      // n
    int depth = 1;      // L
    int input_dim = 1;  // d
    ActivationSpec activation = ActivationSpec::relu();
    bool scaled = true;
};

// Forward pass from input x (nonzero). radius > 0 freezes and flags the path
// once |Y_l| leaves the ball of that radius; 0 disables stopping.
Path forward(const NetworkConfig& cfg, std::span<const double> x, RngStream stream,
             double radius = 0.0);

// Forward pass from a pinned initial state (the conditioned experiments fix
// Y_0 instead of drawing W_in). Does not consume the "win" child stream.
Path forward_from(const NetworkConfig& cfg, std::span<const double> y0, RngStream stream,
                  double radius = 0.0);

// k >= 1 forward passes sharing one weight draw per layer.
std::vector<Path> forward_multi(const NetworkConfig& cfg,
                                const std::vector<std::vector<double>>& inputs,
                                RngStream stream);

// Per-layer cosine correlation between two paths of equal shape; layers where
// either norm vanishes report NaN rather than failing.
std::vector<double> layer_correlations(const Path& a, const Path& b);

struct CollapseEstimate {
    long n_samples = 0;
    long collapses = 0;
    double estimate = 0.0;
    Interval ci;  // Wilson 95%
};

// Monte Carlo probability of {exists l <= L : phi(Y_l) = 0}. The event is an
// exact floating-point zero test; only hard-zero activations (ReLU family)
// are supported. depth = 0 estimates the initial event alone.
CollapseEstimate collapse_probability(const NetworkConfig& cfg, std::span<const double> x,
                                      long n_samples, RngStream stream, int threads = 1);

// Norms of the back-propagated gradient, last layer first:
//   g_{l-1} = g_l + c * phi'(Y_{l-1}) o (W_l^T g_l)
// normalized by |g_L|. Returns L+1 values for g_L .. g_0. Retains the weight
// draw for one pass (L * n^2 reals).
std::vector<double> gradient_norms(const NetworkConfig& cfg, std::span<const double> x,
                                   std::span<const double> terminal_gradient, RngStream stream);

} // namespace sdelab
