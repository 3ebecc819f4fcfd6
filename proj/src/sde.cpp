#include "sdelab/sde.hpp"

#include <cmath>
#include <stdexcept>

#include "sdelab/linalg.hpp"
#include "sdelab/parallel.hpp"
#include "sdelab/stats.hpp"

namespace sdelab {
namespace {

void check_cfg(const SdeConfig& cfg) {
    if (cfg.dim < 1) throw std::invalid_argument("SdeConfig: dim >= 1");
    if (cfg.steps_per_unit < 1) throw std::invalid_argument("SdeConfig: steps_per_unit >= 1");
    if (!(cfg.t_end > 0.0)) throw std::invalid_argument("SdeConfig: t_end > 0");
}

void check_finite(std::span<const double> x0) {
    for (double v : x0)
        if (!std::isfinite(v)) throw std::invalid_argument("euler_path: x0 must be finite");
}

bool all_zero(std::span<const double> v) {
    for (double x : v)
        if (x != 0.0) return false;
    return true;
}

} // namespace

int SdeConfig::grid_steps() const {
    return static_cast<int>(std::lround(t_end * steps_per_unit));
}

Path euler_path(const SdeConfig& cfg, std::span<const double> x0, RngStream stream) {
    check_cfg(cfg);
    check_finite(x0);
    if (static_cast<int>(x0.size()) != cfg.dim)
        throw std::invalid_argument("euler_path: x0 dimension mismatch");

    const int n = cfg.dim;
    const int steps = cfg.grid_steps();
    const double dt = 1.0 / cfg.steps_per_unit;
    const double sqrt_dt_over_n = std::sqrt(dt / n);
    const bool stopping = cfg.radius > 0.0 && cfg.activation.locally_lipschitz_only();
    const double radius2 = cfg.radius * cfg.radius;

    Path path;
    path.states.reserve(steps + 1);
    path.states.emplace_back(x0.begin(), x0.end());
    std::vector<double> post(n);
    cfg.activation.apply(path.states[0], post);
    if (all_zero(post)) path.first_collapse_index = 0;
    if (stopping && squared_norm(path.states[0]) >= radius2) {
        path.stopped = true;
        path.stop_index = 0;
    }

    for (int k = 1; k <= steps; ++k) {
        std::vector<double> x = path.states.back();
        if (!path.stopped) {
            cfg.activation.apply(x, post);
            double vol = std::sqrt(squared_norm(post));
            double scale = sqrt_dt_over_n * vol;
            for (int c = 0; c < n; ++c) x[c] += scale * stream.next_gauss();
            if (path.first_collapse_index < 0) {
                cfg.activation.apply(x, post);
                if (all_zero(post)) path.first_collapse_index = k;
            }
            if (stopping && squared_norm(x) >= radius2) {
                path.stopped = true;
                path.stop_index = k;
            }
        }
        path.states.push_back(std::move(x));
    }
    return path;
}

std::vector<Path> euler_path_multi(const SdeConfig& cfg,
                                   const std::vector<std::vector<double>>& x0s,
                                   RngStream stream) {
    check_cfg(cfg);
    if (x0s.empty()) throw std::invalid_argument("euler_path_multi: need at least one start");
    const int n = cfg.dim;
    const std::size_t k = x0s.size();
    for (const auto& x0 : x0s) {
        check_finite(x0);
        if (static_cast<int>(x0.size()) != n)
            throw std::invalid_argument("euler_path_multi: x0 dimension mismatch");
    }

    const int steps = cfg.grid_steps();
    const double dt = 1.0 / cfg.steps_per_unit;
    const double sqrt_dt_over_n = std::sqrt(dt / n);
    const bool stopping = cfg.radius > 0.0 && cfg.activation.locally_lipschitz_only();
    const double radius2 = cfg.radius * cfg.radius;

    std::vector<Path> paths(k);
    std::vector<std::vector<double>> post(k, std::vector<double>(n));
    for (std::size_t p = 0; p < k; ++p) {
        paths[p].states.reserve(steps + 1);
        paths[p].states.emplace_back(x0s[p].begin(), x0s[p].end());
        cfg.activation.apply(paths[p].states[0], post[p]);
        if (all_zero(post[p])) paths[p].first_collapse_index = 0;
        if (stopping && squared_norm(paths[p].states[0]) >= radius2) {
            paths[p].stopped = true;
            paths[p].stop_index = 0;
        }
    }

    std::vector<std::vector<double>> noise(k, std::vector<double>(n));
    for (int step = 1; step <= steps; ++step) {
        for (std::size_t p = 0; p < k; ++p)
            cfg.activation.apply(paths[p].states.back(), post[p]);

        DenseMatrix gram(static_cast<int>(k), static_cast<int>(k));
        double max_diag = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                double v = dot(post[i], post[j]);
                gram(static_cast<int>(i), static_cast<int>(j)) = v;
                gram(static_cast<int>(j), static_cast<int>(i)) = v;
            }
            max_diag = std::max(max_diag, gram(static_cast<int>(i), static_cast<int>(i)));
        }
        // k = 1 cannot produce a negative pivot, and a zero tolerance keeps
        // the single-input stepper bit-identical to euler_path.
        double tol = k == 1 ? 0.0 : 1e-12 * std::max(1.0, max_diag);
        DenseMatrix f = cholesky_psd(gram, tol);

        // Input-major draw: block p holds the n coordinates of input p.
        for (std::size_t p = 0; p < k; ++p)
            for (int c = 0; c < n; ++c) noise[p][c] = stream.next_gauss();

        for (std::size_t p = 0; p < k; ++p) {
            std::vector<double> x = paths[p].states.back();
            if (!paths[p].stopped) {
                for (std::size_t j = 0; j <= p; ++j) {
                    double coef = sqrt_dt_over_n * f(static_cast<int>(p), static_cast<int>(j));
                    for (int c = 0; c < n; ++c) x[c] += coef * noise[j][c];
                }
                if (paths[p].first_collapse_index < 0) {
                    cfg.activation.apply(x, post[p]);
                    if (all_zero(post[p])) paths[p].first_collapse_index = step;
                }
                if (stopping && squared_norm(x) >= radius2) {
                    paths[p].stopped = true;
                    paths[p].stop_index = step;
                }
            }
            paths[p].states.push_back(std::move(x));
        }
    }
    return paths;
}

double gbm_exact(double x0, double a, double sigma, double t, RngStream& stream) {
    if (!(x0 > 0.0)) throw std::domain_error("gbm_exact: x0 must be > 0");
    if (!(t >= 0.0)) throw std::domain_error("gbm_exact: t must be >= 0");
    if (t == 0.0) return x0;
    double drift = (a - 0.5 * sigma * sigma) * t;
    return x0 * std::exp(drift + sigma * std::sqrt(t) * stream.next_gauss());
}

double ou_exact(double x0, double a, double b, double sigma, double t, RngStream& stream) {
    if (!(a > 0.0)) throw std::domain_error("ou_exact: a must be > 0");
    if (!(t >= 0.0)) throw std::domain_error("ou_exact: t must be >= 0");
    if (t == 0.0) return x0;
    double decay = std::exp(-a * t);
    double mean = x0 * decay + b * (1.0 - decay);
    double var = sigma * sigma / (2.0 * a) * (1.0 - decay * decay);
    return mean + std::sqrt(var) * stream.next_gauss();
}

MckeanCheck mckean_marginal_check(int width, int input_dim, std::span<const double> x,
                                  int steps, long n_samples, RngStream stream, int threads) {
    if (width < 1 || input_dim < 1) throw std::invalid_argument("mckean: width, input_dim >= 1");
    if (static_cast<int>(x.size()) != input_dim)
        throw std::invalid_argument("mckean: input dimension mismatch");
    if (n_samples < 2) throw std::invalid_argument("mckean: n_samples >= 2");

    SdeConfig cfg;
    cfg.dim = width;
    cfg.steps_per_unit = steps;
    cfg.t_end = 1.0;
    cfg.activation = ActivationSpec::relu();

    MckeanCheck out;
    out.times = {0.0, 0.25, 0.5, 0.75, 1.0};
    out.n_samples = n_samples;
    std::vector<int> grid_index;
    for (double t : out.times) grid_index.push_back(static_cast<int>(std::lround(t * steps)));

    double x_norm2 = squared_norm(x);
    std::vector<std::vector<double>> coord(out.times.size(),
                                           std::vector<double>(n_samples, 0.0));
    std::vector<double> xcopy(x.begin(), x.end());
    parallel_for(n_samples, threads, [&](long s) {
        RngStream sample = stream.child("sample", static_cast<std::uint64_t>(s));
        RngStream win = sample.child("win");
        std::vector<double> x0(width, 0.0);
        double sd = std::sqrt(1.0 / input_dim);
        for (int i = 0; i < width; ++i) {
            double acc = 0.0;
            for (int j = 0; j < input_dim; ++j) acc += sd * win.next_gauss() * xcopy[j];
            x0[i] = acc;
        }
        Path p = euler_path(cfg, x0, sample.child("noise"));
        for (std::size_t g = 0; g < grid_index.size(); ++g)
            coord[g][s] = p.states[grid_index[g]][0];
    });

    for (std::size_t g = 0; g < out.times.size(); ++g) {
        MonteCarloSummary s = summarize(coord[g]);
        out.empirical_var.push_back(s.variance);
        out.theory_var.push_back(x_norm2 / input_dim * std::exp(out.times[g] / 2.0));
    }
    return out;
}

} // namespace sdelab
