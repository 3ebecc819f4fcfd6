#include "sdelab/resnet.hpp"

#include <cmath>
#include <stdexcept>

#include "sdelab/linalg.hpp"
#include "sdelab/parallel.hpp"

namespace sdelab {
namespace {

void check_config(const NetworkConfig& cfg) {
    if (cfg.width < 1 || cfg.depth < 0 || cfg.input_dim < 1)
        throw std::invalid_argument("NetworkConfig: width, input_dim >= 1 and depth >= 0");
}

bool all_zero(std::span<const double> v) {
    for (double x : v)
        if (x != 0.0) return false;
    return true;
}

std::vector<double> input_layer(const NetworkConfig& cfg, std::span<const double> x,
                                RngStream& win_stream) {
    if (static_cast<int>(x.size()) != cfg.input_dim)
        throw std::invalid_argument("forward: input dimension mismatch");
    if (all_zero(x)) throw std::invalid_argument("forward: x must be nonzero");
    double sd = std::sqrt(1.0 / cfg.input_dim);
    std::vector<double> y0(cfg.width, 0.0);
    for (int i = 0; i < cfg.width; ++i) {
        double s = 0.0;
        for (int j = 0; j < cfg.input_dim; ++j) s += sd * win_stream.next_gauss() * x[j];
        y0[i] = s;
    }
    return y0;
}

// Core multi-input forward; the single-input entry points are the k = 1
// case, so "k = 1 degenerates to forward" holds by construction.
std::vector<Path> forward_core(const NetworkConfig& cfg,
                               std::vector<std::vector<double>> starts, RngStream& stream,
                               double radius) {
    const int n = cfg.width;
    const std::size_t k = starts.size();
    const double block_scale =
        cfg.scaled && cfg.depth > 0 ? 1.0 / std::sqrt(static_cast<double>(cfg.depth)) : 1.0;
    const double wl_sd = std::sqrt(1.0 / n);
    const double radius2 = radius > 0.0 ? radius * radius : 0.0;

    std::vector<Path> paths(k);
    for (std::size_t p = 0; p < k; ++p) {
        paths[p].states.reserve(cfg.depth + 1);
        paths[p].states.push_back(std::move(starts[p]));
        if (all_zero(cfg.activation.apply(paths[p].states[0])))
            paths[p].first_collapse_index = 0;
        if (radius2 > 0.0 && squared_norm(paths[p].states[0]) >= radius2) {
            paths[p].stopped = true;
            paths[p].stop_index = 0;
        }
    }

    std::vector<std::vector<double>> post(k);
    std::vector<double> row(n);
    for (int l = 1; l <= cfg.depth; ++l) {
        for (std::size_t p = 0; p < k; ++p) post[p] = cfg.activation.apply(paths[p].states.back());
        RngStream wl = stream.child("w", static_cast<std::uint64_t>(l));
        for (std::size_t p = 0; p < k; ++p) paths[p].states.push_back(paths[p].states.back());
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) row[j] = wl_sd * wl.next_gauss();
            for (std::size_t p = 0; p < k; ++p) {
                Path& path = paths[p];
                if (path.stopped && path.stop_index < l) continue;
                path.states.back()[i] += block_scale * dot(row, post[p]);
            }
        }
        for (std::size_t p = 0; p < k; ++p) {
            Path& path = paths[p];
            if (path.stopped && path.stop_index < l) continue;
            if (path.first_collapse_index < 0 &&
                all_zero(cfg.activation.apply(path.states.back())))
                path.first_collapse_index = l;
            if (radius2 > 0.0 && !path.stopped && squared_norm(path.states.back()) >= radius2) {
                path.stopped = true;
                path.stop_index = l;
            }
        }
    }
    return paths;
}

} // namespace

Path forward(const NetworkConfig& cfg, std::span<const double> x, RngStream stream,
             double radius) {
    check_config(cfg);
    RngStream win = stream.child("win");
    std::vector<std::vector<double>> starts;
    starts.push_back(input_layer(cfg, x, win));
    auto paths = forward_core(cfg, std::move(starts), stream, radius);
    return std::move(paths[0]);
}

Path forward_from(const NetworkConfig& cfg, std::span<const double> y0, RngStream stream,
                  double radius) {
    check_config(cfg);
    if (static_cast<int>(y0.size()) != cfg.width)
        throw std::invalid_argument("forward_from: initial state dimension mismatch");
    std::vector<std::vector<double>> starts;
    starts.emplace_back(y0.begin(), y0.end());
    auto paths = forward_core(cfg, std::move(starts), stream, radius);
    return std::move(paths[0]);
}

std::vector<Path> forward_multi(const NetworkConfig& cfg,
                                const std::vector<std::vector<double>>& inputs,
                                RngStream stream) {
    check_config(cfg);
    if (inputs.empty()) throw std::invalid_argument("forward_multi: need at least one input");
    RngStream win = stream.child("win");
    std::vector<std::vector<double>> starts;
    starts.reserve(inputs.size());
    // One W_in draw shared by every input: sample rows once, apply to all.
    double sd = std::sqrt(1.0 / cfg.input_dim);
    for (const auto& x : inputs) {
        if (static_cast<int>(x.size()) != cfg.input_dim)
            throw std::invalid_argument("forward_multi: input dimension mismatch");
        if (all_zero(x)) throw std::invalid_argument("forward_multi: inputs must be nonzero");
        starts.emplace_back(cfg.width, 0.0);
    }
    std::vector<double> wrow(cfg.input_dim);
    for (int i = 0; i < cfg.width; ++i) {
        for (int j = 0; j < cfg.input_dim; ++j) wrow[j] = sd * win.next_gauss();
        for (std::size_t p = 0; p < inputs.size(); ++p) starts[p][i] = dot(wrow, inputs[p]);
    }
    return forward_core(cfg, std::move(starts), stream, 0.0);
}

std::vector<double> layer_correlations(const Path& a, const Path& b) {
    if (a.states.size() != b.states.size())
        throw std::invalid_argument("layer_correlations: paths differ in length");
    std::vector<double> c(a.states.size());
    for (std::size_t l = 0; l < a.states.size(); ++l) {
        double na = norm(a.states[l]), nb = norm(b.states[l]);
        c[l] = (na == 0.0 || nb == 0.0) ? std::nan("")
                                        : dot(a.states[l], b.states[l]) / (na * nb);
    }
    return c;
}

CollapseEstimate collapse_probability(const NetworkConfig& cfg, std::span<const double> x,
                                      long n_samples, RngStream stream, int threads) {
    check_config(cfg);
    if (n_samples < 1) throw std::invalid_argument("collapse_probability: n_samples >= 1");
    if (!cfg.activation.hard_zero())
        throw std::invalid_argument(
            "collapse_probability: only hard-zero (ReLU-family) activations have a collapse "
            "event with positive probability");
    std::vector<double> xcopy(x.begin(), x.end());
    std::vector<unsigned char> hit(n_samples, 0);
    parallel_for(n_samples, threads, [&](long i) {
        Path p = forward(cfg, xcopy, stream.child("sample", static_cast<std::uint64_t>(i)));
        hit[i] = p.collapsed() ? 1 : 0;
    });
    CollapseEstimate est;
    est.n_samples = n_samples;
    for (long i = 0; i < n_samples; ++i) est.collapses += hit[i];
    est.estimate = static_cast<double>(est.collapses) / static_cast<double>(n_samples);
    est.ci = wilson_ci(est.collapses, n_samples, 0.95);
    return est;
}

std::vector<double> gradient_norms(const NetworkConfig& cfg, std::span<const double> x,
                                   std::span<const double> terminal_gradient, RngStream stream) {
    check_config(cfg);
    if (static_cast<int>(terminal_gradient.size()) != cfg.width)
        throw std::invalid_argument("gradient_norms: terminal gradient dimension mismatch");
    if (all_zero(terminal_gradient))
        throw std::invalid_argument("gradient_norms: terminal gradient must be nonzero");

    const int n = cfg.width;
    const int L = cfg.depth;
    const double block_scale = cfg.scaled && L > 0 ? 1.0 / std::sqrt(static_cast<double>(L)) : 1.0;

    // Forward pass, retaining states and the weight draw for this sample.
    RngStream win = stream.child("win");
    std::vector<std::vector<double>> states;
    states.push_back(input_layer(cfg, x, win));
    std::vector<DenseMatrix> weights;
    weights.reserve(L);
    for (int l = 1; l <= L; ++l) {
        RngStream wl = stream.child("w", static_cast<std::uint64_t>(l));
        weights.push_back(gauss_matrix(wl, n, n, 1.0 / n));
        std::vector<double> post = cfg.activation.apply(states.back());
        std::vector<double> next = states.back();
        const DenseMatrix& w = weights.back();
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += w(i, j) * post[j];
            next[i] += block_scale * s;
        }
        states.push_back(std::move(next));
    }

    std::vector<double> g(terminal_gradient.begin(), terminal_gradient.end());
    double gl_norm = norm(g);
    std::vector<double> norms;
    norms.reserve(L + 1);
    norms.push_back(1.0);
    for (int l = L; l >= 1; --l) {
        const DenseMatrix& w = weights[l - 1];
        const std::vector<double>& y = states[l - 1];
        std::vector<double> wtg(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) wtg[j] += w(i, j) * g[i];
        for (int j = 0; j < n; ++j) g[j] += block_scale * cfg.activation.deriv(y[j]) * wtg[j];
        norms.push_back(norm(g) / gl_norm);
    }
    return norms;
}

} // namespace sdelab
