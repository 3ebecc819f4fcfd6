#include "sdelab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "sdelab/linalg.hpp"
#include "sdelab/parallel.hpp"
#include "sdelab/report.hpp"
#include "sdelab/resnet.hpp"
#include "sdelab/sde.hpp"
#include "sdelab/special.hpp"
#include "sdelab/stats.hpp"
#include "sdelab/theory.hpp"

namespace sdelab {
namespace {

using nlohmann::json;

int pick(int v, int def) { return v > 0 ? v : def; }
long pick(long v, long def) { return v > 0 ? v : def; }
int pick_depth(int v, int def) { return v >= 0 ? v : def; }

int resolve_threads(int t) {
    if (t > 0) return t;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<double> ones(int d) { return std::vector<double>(d, 1.0); }

struct Runner {
    const ExperimentSpec& spec;
    json report;
    json& checks;
    bool all_pass = true;
    std::filesystem::path csv_path, json_path;

    explicit Runner(const ExperimentSpec& s)
        : spec(s),
          report({{"schema", 1},
                  {"experiment", s.name},
                  {"seed", s.seed},
                  {"generated_at", utc_timestamp()},
                  {"parameters", json::object()},
                  {"predictions", json::array()},
                  {"results", json::object()},
                  {"checks", json::array()}}),
          checks(report["checks"]) {
        csv_path = s.out_dir / (s.name + ".csv");
        json_path = s.out_dir / (s.name + ".report.json");
    }

    void check(const std::string& name, bool pass, double observed, const std::string& detail) {
        add_check(checks, all_pass, name, pass, observed, detail);
    }

    void predict(const TheoryPrediction& p) { report["predictions"].push_back(to_json(p)); }

    ExperimentResult finish() {
        report["pass"] = all_pass;
        write_json_report(json_path, report);
        ExperimentResult r;
        r.report = std::move(report);
        r.pass = all_pass;
        r.csv_path = csv_path;
        r.json_path = json_path;
        return r;
    }
};

ActivationSpec resolve_activation(const ExperimentSpec& spec, const std::string& def) {
    return parse_activation(spec.activation.empty() ? def : spec.activation);
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Experiments with a published-coefficient ambiguity accept
// --variant main|appendix; everything else rejects the flag.
theory::MeanVariant resolve_mean_variant(const ExperimentSpec& spec) {
    if (spec.variant.empty() || spec.variant == "main") return theory::MeanVariant::main;
    if (spec.variant == "appendix") return theory::MeanVariant::appendix;
    throw std::invalid_argument(spec.name + ": --variant must be main or appendix");
}

void reject_variant(const ExperimentSpec& spec) {
    require(spec.variant.empty(),
            spec.name + ": --variant is not applicable to this experiment");
}

// log(|phi(Y_L)| / |phi(Y_0)|) across forward draws from x = ones(d);
// collapsed draws are excluded and counted, never resampled.
struct RatioSamples {
    std::vector<double> values;  // retained, in sample order
    long excluded = 0;
};

RatioSamples post_norm_log_ratios(const NetworkConfig& cfg, long samples,
                                  const RngStream& stream, int threads) {
    std::vector<double> x = ones(cfg.input_dim);
    std::vector<double> raw(samples);
    parallel_for(samples, threads, [&](long i) {
        Path p = forward(cfg, x, stream.child("sample", static_cast<std::uint64_t>(i)));
        if (p.collapsed()) {
            raw[i] = std::nan("");
            return;
        }
        std::vector<double> p0 = cfg.activation.apply(p.states.front());
        std::vector<double> pL = cfg.activation.apply(p.states.back());
        raw[i] = std::log(norm(pL) / norm(p0));
    });
    RatioSamples out;
    out.values.reserve(raw.size());
    for (double v : raw) {
        if (std::isnan(v))
            ++out.excluded;
        else
            out.values.push_back(v);
    }
    return out;
}

double fit_slope(std::span<const double> x, std::span<const double> y) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= x.size();
    my /= x.size();
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
    }
    return num / den;
}

// ---------------------------------------------------------------------------
// gbm-hist: width-1 ReLU network and Euler endpoint vs the log-normal law.

ExperimentResult run_gbm_hist(const ExperimentSpec& spec) {
    Runner r(spec);
    int width = pick(spec.width, 1);
    int depth = pick_depth(spec.depth, 100);
    long samples = pick(spec.samples, 5000L);
    int steps = pick(spec.steps, 1000);
    int threads = resolve_threads(spec.threads);
    ActivationSpec act = resolve_activation(spec, "relu");
    require(width == 1, "gbm-hist: the log-normal law is the width-1 case (use --width 1)");
    require(act.kind == ActivationKind::relu, "gbm-hist: requires the relu activation");
    reject_variant(spec);

    r.report["parameters"] = {{"width", width},       {"depth", depth},
                              {"samples", samples},   {"steps", steps},
                              {"activation", act.name()}, {"threads", threads},
                              {"y0", 1.0},            {"out", spec.out_dir.string()}};

    const double mean_target = -0.5, sd_target = 1.0;
    r.predict({"log_final_mean", "mean", {mean_target},
               "width-1 relu limit: given a positive start the state is x0*exp(-t/2 + B_t), "
               "so the terminal log-state at t=1 has mean -1/2"});
    r.predict({"log_final_density", "density_params", {mean_target, sd_target},
               "terminal log-state is N(-1/2, 1); the same law must hold for the Euler scheme "
               "of dX = |relu(X)| dB"});

    NetworkConfig cfg{width, depth, 1, act, true};
    std::vector<double> y0{1.0};
    RngStream root(spec.seed);
    RngStream net_stream = root.child("gbm-hist");

    std::vector<double> net_raw(samples);
    parallel_for(samples, threads, [&](long i) {
        Path p = forward_from(cfg, y0, net_stream.child("sample", static_cast<std::uint64_t>(i)));
        net_raw[i] = p.collapsed() ? std::nan("") : std::log(p.back()[0]);
    });

    SdeConfig sde_cfg{1, steps, 1.0, act, spec.radius > 0.0 ? spec.radius : 10.0};
    RngStream sde_stream = root.child("gbm-hist-sde");
    std::vector<double> sde_raw(samples);
    parallel_for(samples, threads, [&](long i) {
        Path p = euler_path(sde_cfg, y0, sde_stream.child("sample", static_cast<std::uint64_t>(i)));
        double xT = p.back()[0];
        sde_raw[i] = xT > 0.0 ? std::log(xT) : std::nan("");
    });

    CsvWriter csv(r.csv_path, spec.name, {"sample_id", "scheme", "layer", "norm", "log_norm_ratio"});
    auto emit = [&](const std::vector<double>& raw, const std::string& scheme, int last) {
        for (long i = 0; i < samples; ++i) {
            if (std::isnan(raw[i])) continue;
            csv.cell(i);
            csv.cell(scheme);
            csv.cell(last);
            csv.cell(std::exp(raw[i]));
            csv.cell(raw[i]);
            csv.end_row();
        }
    };
    emit(net_raw, "resnet", depth);
    emit(sde_raw, "euler", sde_cfg.grid_steps());

    auto reduce = [&](const std::vector<double>& raw, const std::string& key) {
        std::vector<double> vals;
        long excluded = 0;
        for (double v : raw) {
            if (std::isnan(v))
                ++excluded;
            else
                vals.push_back(v);
        }
        MonteCarloSummary s = summarize(vals, excluded);
        KsResult ks = ks_test_normal(vals, mean_target, sd_target);
        json jr = to_json(s);
        jr["ks"] = to_json(ks);
        GaussianKde kde = gaussian_kde(vals);
        jr["kde"] = {{"bandwidth", kde.bandwidth()}};
        r.report["results"][key] = jr;
        return std::pair<MonteCarloSummary, KsResult>(s, ks);
    };
    auto [net_summary, net_ks] = reduce(net_raw, "resnet");
    auto [sde_summary, sde_ks] = reduce(sde_raw, "euler");

    r.check("resnet-log-mean-within-3-stderr",
            std::fabs(net_summary.mean - mean_target) <= 3.0 * net_summary.std_error,
            net_summary.mean, "mean log Y_L vs -1/2, tolerance 3*stderr");
    r.check("resnet-ks-p-above-0.01", net_ks.p_value > 0.01, net_ks.p_value,
            "KS of log Y_L against N(-1/2, 1)");
    r.check("euler-ks-p-above-0.01", sde_ks.p_value > 0.01, sde_ks.p_value,
            "KS of the Euler endpoint log X_1 against N(-1/2, 1)");
    return r.finish();
}

// ---------------------------------------------------------------------------
// ou-hist: exotic activation, g(Y_L) vs the mean-reverting OU marginal,
// plus the decay-rate adjudication (pi/4 vs pi/3).

ExperimentResult run_ou_hist(const ExperimentSpec& spec) {
    Runner r(spec);
    int width = pick(spec.width, 1);
    int depth = pick_depth(spec.depth, 100);
    long samples = pick(spec.samples, 5000L);
    int threads = resolve_threads(spec.threads);
    ActivationSpec act = resolve_activation(spec, "exotic:1:0");
    require(width == 1, "ou-hist: the OU law is the width-1 case (use --width 1)");
    require(act.kind == ActivationKind::exotic, "ou-hist: requires the exotic activation");
    reject_variant(spec);
    const double alpha = act.alpha, beta = act.beta;

    r.report["parameters"] = {{"width", width},   {"depth", depth},
                              {"samples", samples}, {"activation", act.name()},
                              {"threads", threads}, {"y0", 1.0},
                              {"out", spec.out_dir.string()}};

    const double g0 = exotic_g(alpha, beta, 1.0);
    theory::OuParams marginal = theory::ou_marginal_params(g0, alpha, 1.0);
    r.predict({"g_final_density", "density_params", {marginal.mean, marginal.variance},
               "g(X_t) = alpha*sqrt(pi)*erfi_inv(alpha x + beta) is a mean-reverting OU process "
               "with rate a = pi*alpha^2/4; at t=1 it is N(g(x0) e^{-a}, 2a(1 - e^{-2a}))"});

    NetworkConfig cfg{width, depth, 1, act, true};
    std::vector<double> y0{1.0};
    RngStream stream = RngStream(spec.seed).child("ou-hist");

    std::vector<std::vector<double>> g_layers(samples);
    std::vector<double> y_final(samples);
    parallel_for(samples, threads, [&](long i) {
        Path p = forward_from(cfg, y0, stream.child("sample", static_cast<std::uint64_t>(i)));
        std::vector<double> g(p.states.size());
        for (std::size_t l = 0; l < p.states.size(); ++l)
            g[l] = exotic_g(alpha, beta, p.states[l][0]);
        g_layers[i] = std::move(g);
        y_final[i] = p.back()[0];
    });

    std::vector<double> g_final(samples);
    for (long i = 0; i < samples; ++i) g_final[i] = g_layers[i].back();

    // Layer means of g, then a least-squares fit of the decay rate
    // from log(mean g(Y_l)) = const - rate * l/L.
    std::vector<double> mean_curve(depth + 1, 0.0);
    for (long i = 0; i < samples; ++i)
        for (int l = 0; l <= depth; ++l) mean_curve[l] += g_layers[i][l];
    for (double& m : mean_curve) m /= static_cast<double>(samples);
    std::vector<double> ts, logs;
    for (int l = 0; l <= depth; ++l) {
        if (mean_curve[l] > 0.0) {
            ts.push_back(static_cast<double>(l) / depth);
            logs.push_back(std::log(mean_curve[l]));
        }
    }
    double fitted_rate = -fit_slope(ts, logs);
    auto matches = [&](double c) { return std::fabs(fitted_rate - c) <= 0.15 * c; };
    bool m4 = matches(std::numbers::pi / 4.0), m3 = matches(std::numbers::pi / 3.0);
    std::string verdict = m4 && m3 ? "both" : m4 ? "pi/4" : m3 ? "pi/3" : "neither";

    MonteCarloSummary s = summarize(g_final);
    KsResult ks = ks_test_normal(g_final, marginal.mean, std::sqrt(marginal.variance));
    json jr = to_json(s);
    jr["ks"] = to_json(ks);
    r.report["results"]["g_final"] = jr;
    r.report["results"]["mean_decay"] = {{"fitted_rate", fitted_rate},
                                         {"rate_pi_over_4", std::numbers::pi / 4.0},
                                         {"rate_pi_over_3", std::numbers::pi / 3.0},
                                         {"matches_pi_over_4", m4},
                                         {"matches_pi_over_3", m3},
                                         {"matched", verdict}};

    CsvWriter csv(r.csv_path, spec.name, {"sample_id", "layer", "y_final", "g_final"});
    for (long i = 0; i < samples; ++i) {
        csv.cell(i);
        csv.cell(depth);
        csv.cell(y_final[i]);
        csv.cell(g_final[i]);
        csv.end_row();
    }

    r.check("g-final-ks-p-above-0.01", ks.p_value > 0.01, ks.p_value,
            "KS of g(Y_L) against the OU marginal");
    r.check("decay-rate-adjudication-recorded", verdict != "neither", fitted_rate,
            "fitted mean-decay rate matches pi/4 or pi/3 within 15% (verdict: " + verdict + ")");
    return r.finish();
}

// ---------------------------------------------------------------------------
// collapse-prob

ExperimentResult run_collapse_prob(const ExperimentSpec& spec) {
    Runner r(spec);
    long samples = pick(spec.samples, 20000L);
    int threads = resolve_threads(spec.threads);
    int input_dim = pick(spec.input_dim, 1);
    ActivationSpec act = resolve_activation(spec, "relu");
    require(act.hard_zero(),
            "collapse-prob: the collapse event needs a hard-zero (relu-family) activation");
    reject_variant(spec);

    bool single_point = spec.width > 0 || spec.depth >= 0;
    std::vector<int> init_widths = spec.widths.empty() ? std::vector<int>{1, 2, 3, 4} : spec.widths;
    std::vector<int> depth_grid =
        spec.depths.empty() ? std::vector<int>{2, 8, 32, 128} : spec.depths;
    int grid_width = 2;

    r.report["parameters"] = {{"samples", samples},
                              {"activation", act.name()},
                              {"input_dim", input_dim},
                              {"threads", threads},
                              {"mode", single_point ? "single" : "grid"},
                              {"out", spec.out_dir.string()}};

    std::vector<double> x = ones(input_dim);
    RngStream stream = RngStream(spec.seed).child("collapse-prob");
    CsvWriter csv(r.csv_path, spec.name,
                  {"part", "width", "depth", "n_samples", "collapses", "estimate", "wilson_lo",
                   "wilson_hi", "theory_init"});
    json rows = json::array();

    auto run_point = [&](const std::string& part, int n, int L) {
        NetworkConfig cfg{n, L, input_dim, act, true};
        CollapseEstimate est = collapse_probability(
            cfg, x, samples, stream.child(part).child("w", n).child("d", L), threads);
        double theory_init = theory::collapse_prob_init(n);
        csv.cell(part);
        csv.cell(n);
        csv.cell(L);
        csv.cell(est.n_samples);
        csv.cell(est.collapses);
        csv.cell(est.estimate);
        csv.cell(est.ci.lo);
        csv.cell(est.ci.hi);
        csv.cell(theory_init);
        csv.end_row();
        rows.push_back({{"part", part},
                        {"width", n},
                        {"depth", L},
                        {"estimate", est.estimate},
                        {"wilson_lo", est.ci.lo},
                        {"wilson_hi", est.ci.hi},
                        {"collapses", est.collapses},
                        {"theory_init", theory_init}});
        return est;
    };

    if (single_point) {
        int n = pick(spec.width, 2);
        int L = pick_depth(spec.depth, 0);
        CollapseEstimate est = run_point("single", n, L);
        double p0 = theory::collapse_prob_init(n);
        r.predict({"collapse_prob_init", "probability", {p0},
                   "the initial post-activations vanish with probability 2^{-n}; the collapse "
                   "probability decreases toward this value as depth grows"});
        if (L == 0)
            r.check("estimate-covers-2^-n", est.ci.lo <= p0 && p0 <= est.ci.hi, est.estimate,
                    "Wilson 95% interval must contain 2^{-n} at depth 0");
    } else {
        r.predict({"collapse_prob_init", "probability",
                   {theory::collapse_prob_init(1), theory::collapse_prob_init(2),
                    theory::collapse_prob_init(3), theory::collapse_prob_init(4)},
                   "depth-0 collapse probability is exactly 2^{-n}"});
        for (int n : init_widths) {
            CollapseEstimate est = run_point("init", n, 0);
            double p0 = theory::collapse_prob_init(n);
            r.check("init-covers-2^-n-width-" + std::to_string(n),
                    est.ci.lo <= p0 && p0 <= est.ci.hi, est.estimate,
                    "Wilson 95% interval contains 2^{-n} at depth 0");
        }
        std::vector<CollapseEstimate> by_depth;
        for (int L : depth_grid) by_depth.push_back(run_point("depth", grid_width, L));
        for (std::size_t k = 0; k + 1 < by_depth.size(); ++k) {
            bool ok = by_depth[k + 1].ci.lo <= by_depth[k].ci.hi;
            r.check("nonincreasing-depth-" + std::to_string(depth_grid[k]) + "-to-" +
                        std::to_string(depth_grid[k + 1]),
                    ok, by_depth[k + 1].estimate,
                    "estimate may not rise significantly with depth (CI overlap rule)");
        }
    }
    r.report["results"]["points"] = rows;
    return r.finish();
}

// ---------------------------------------------------------------------------
// quasi-gbm-hist: mean log growth of |phi(Y_L)| vs the two published
// coefficient variants; conditional on non-collapse.

ExperimentResult run_quasi_gbm_hist(const ExperimentSpec& spec) {
    Runner r(spec);
    std::vector<int> widths = spec.widths.empty() ? std::vector<int>{2, 3, 4, 5, 6} : spec.widths;
    int depth = pick_depth(spec.depth, 100);
    long samples = pick(spec.samples, 5000L);
    int threads = resolve_threads(spec.threads);
    ActivationSpec act = resolve_activation(spec, "relu");
    require(act.kind == ActivationKind::relu, "quasi-gbm-hist: requires the relu activation");
    theory::MeanVariant variant = resolve_mean_variant(spec);
    const char* variant_name = variant == theory::MeanVariant::main ? "main" : "appendix";

    r.report["parameters"] = {{"widths", widths},       {"depth", depth},
                              {"samples", samples},     {"activation", act.name()},
                              {"threads", threads},     {"variant", variant_name},
                              {"out", spec.out_dir.string()}};

    RngStream stream = RngStream(spec.seed).child("quasi-gbm-hist");
    CsvWriter csv(r.csv_path, spec.name,
                  {"width", "sample_id", "log_norm_ratio", "sqrt_n_log_norm_ratio"});
    json per_width = json::array();

    bool appendix_rejected = false;
    for (int n : widths) {
        NetworkConfig cfg{n, depth, 1, act, true};
        RatioSamples rs = post_norm_log_ratios(cfg, samples, stream.child("width", n), threads);
        MonteCarloSummary s = summarize(rs.values, rs.excluded);
        double main_pred = theory::relu_log_growth_mean(n, 0.0, 1.0, theory::MeanVariant::main);
        double app_pred = theory::relu_log_growth_mean(n, 0.0, 1.0, theory::MeanVariant::appendix);
        for (std::size_t i = 0; i < rs.values.size(); ++i) {
            csv.cell(n);
            csv.cell(static_cast<long>(i));
            csv.cell(rs.values[i]);
            csv.cell(std::sqrt(static_cast<double>(n)) * rs.values[i]);
            csv.end_row();
        }
        json jr = to_json(s);
        jr["prediction_main"] = main_pred;
        jr["prediction_appendix"] = app_pred;
        jr["width"] = n;
        per_width.push_back(jr);

        double target = variant == theory::MeanVariant::main ? main_pred : app_pred;
        if (n == 2 || n == 3 || n == 4 || n == 6)
            r.check(std::string("mean-matches-") + variant_name + "-width-" + std::to_string(n),
                    std::fabs(s.mean - target) <= 3.0 * s.std_error, s.mean,
                    "mean log growth within 3*stderr of the selected coefficient variant");
        if ((n == 4 || n == 5) && std::fabs(s.mean - app_pred) > 3.0 * s.std_error)
            appendix_rejected = true;
    }
    r.report["results"]["per_width"] = per_width;
    r.predict({"mean_log_growth_main", "mean", {},
               "mean log growth coefficient ((1-2^{-n})^{-1}/4 - 1/n), the variant consistent "
               "with the drift expectation (n/4)(1-2^{-n})^{-1} - 1"});
    if (variant == theory::MeanVariant::main)
        r.check("appendix-variant-rejected-at-width-4-or-5", appendix_rejected, 0.0,
                "((1-2^-n)/4 - 1/n) must fall outside 3*stderr for some n in {4,5}");
    return r.finish();
}

// ---------------------------------------------------------------------------
// log-growth-paths: a handful of per-layer log growth paths plus the drift
// line (plotting-oriented).

ExperimentResult run_log_growth_paths(const ExperimentSpec& spec) {
    Runner r(spec);
    int n = pick(spec.width, 4);
    int depth = pick_depth(spec.depth, 100);
    long samples = pick(spec.samples, 30L);
    int threads = resolve_threads(spec.threads);
    ActivationSpec act = resolve_activation(spec, "relu");
    require(act.kind == ActivationKind::relu, "log-growth-paths: requires the relu activation");
    theory::MeanVariant variant = resolve_mean_variant(spec);

    r.report["parameters"] = {{"width", n},         {"depth", depth},
                              {"samples", samples}, {"activation", act.name()},
                              {"threads", threads},
                              {"variant", variant == theory::MeanVariant::main ? "main" : "appendix"},
                              {"out", spec.out_dir.string()}};
    double drift = theory::relu_log_growth_mean(n, 0.0, 1.0, variant);
    r.predict({"mean_log_growth", "mean", {drift},
               "mean of log(|phi(Y_l)|/|phi(Y_0)|) grows linearly in l/L with coefficient "
               "((1-2^{-n})^{-1}/4 - 1/n)"});

    NetworkConfig cfg{n, depth, 1, act, true};
    std::vector<double> x = ones(1);
    RngStream stream = RngStream(spec.seed).child("log-growth-paths");
    std::vector<Path> paths(samples);
    parallel_for(samples, threads, [&](long i) {
        paths[i] = forward(cfg, x, stream.child("sample", static_cast<std::uint64_t>(i)));
    });

    CsvWriter csv(r.csv_path, spec.name, {"sample_id", "layer", "norm", "log_norm_ratio"});
    std::vector<double> finals;
    long excluded = 0;
    for (long i = 0; i < samples; ++i) {
        if (paths[i].collapsed()) {
            ++excluded;
            continue;
        }
        double n0 = norm(act.apply(paths[i].states.front()));
        for (int l = 0; l <= depth; ++l) {
            double nl = norm(act.apply(paths[i].states[l]));
            csv.cell(i);
            csv.cell(l);
            csv.cell(nl);
            csv.cell(std::log(nl / n0));
            csv.end_row();
        }
        finals.push_back(std::log(norm(act.apply(paths[i].states.back())) / n0));
    }
    MonteCarloSummary s = summarize(finals, excluded);
    r.report["results"]["final_log_ratio"] = to_json(s);
    r.check("final-mean-within-3-stderr", std::fabs(s.mean - drift) <= 3.0 * s.std_error, s.mean,
            "mean final log growth vs the drift line");
    return r.finish();
}

// ---------------------------------------------------------------------------
// correlation-paths

ExperimentResult run_correlation_paths(const ExperimentSpec& spec) {
    Runner r(spec);
    int n = pick(spec.width, 20);
    int depth = pick_depth(spec.depth, 200);
    long pairs = pick(spec.samples, 10L);
    int threads = resolve_threads(spec.threads);
    ActivationSpec act = resolve_activation(spec, "relu");
    reject_variant(spec);

    r.report["parameters"] = {{"width", n},        {"depth", depth},
                              {"pairs", pairs},    {"activation", act.name()},
                              {"threads", threads}, {"input_dim", 2},
                              {"out", spec.out_dir.string()}};
    r.predict({"correlation_range", "probability", {-1.0, 1.0},
               "two-input correlation paths stay in [-1, 1] and, under the 1/sqrt(L) block "
               "scaling, do not converge to a degenerate value within the run"});

    NetworkConfig cfg{n, depth, 2, act, true};
    RngStream stream = RngStream(spec.seed).child("correlation-paths");
    CsvWriter csv(r.csv_path, spec.name, {"pair_id", "input_cos", "layer", "correlation"});

    bool in_range = true, nondegenerate = true, identical_ok = true;
    double worst = 0.0;
    json rows = json::array();
    std::vector<std::vector<double>> all_corr(pairs);
    parallel_for(pairs, threads, [&](long j) {
        double theta = std::numbers::pi * static_cast<double>(j) / static_cast<double>(pairs);
        std::vector<std::vector<double>> inputs{{1.0, 0.0}, {std::cos(theta), std::sin(theta)}};
        std::vector<Path> p = forward_multi(cfg, inputs, stream.child("pair", j));
        all_corr[j] = layer_correlations(p[0], p[1]);
    });
    for (long j = 0; j < pairs; ++j) {
        double theta = std::numbers::pi * static_cast<double>(j) / static_cast<double>(pairs);
        const std::vector<double>& c = all_corr[j];
        for (int l = 0; l <= depth; ++l) {
            csv.cell(j);
            csv.cell(std::cos(theta));
            csv.cell(l);
            csv.cell(c[l]);
            csv.end_row();
            if (!std::isnan(c[l])) {
                worst = std::max(worst, std::fabs(c[l]));
                if (std::fabs(c[l]) > 1.0 + 1e-9) in_range = false;
            }
        }
        if (j == 0) {
            for (double v : c)
                if (std::fabs(v - 1.0) > 1e-12) identical_ok = false;
        } else if (std::fabs(c[0]) <= 0.99 && std::fabs(c[depth]) > 0.999) {
            nondegenerate = false;
        }
        rows.push_back({{"pair", j}, {"c0", c[0]}, {"c_final", c[depth]}});
    }
    r.report["results"]["pairs"] = rows;
    r.check("correlations-within-unit-interval", in_range, worst,
            "|c_l| <= 1 at every layer (Cauchy-Schwarz)");
    r.check("identical-inputs-give-unit-correlation", identical_ok, 1.0,
            "pair 0 feeds the same input twice; its correlation path must be exactly 1");
    r.check("no-degenerate-convergence", nondegenerate, 0.0,
            "pairs starting with |c_0| <= 0.99 must not end beyond |c| = 0.999");
    return r.finish();
}

// ---------------------------------------------------------------------------
// gradient-norms

ExperimentResult run_gradient_norms(const ExperimentSpec& spec) {
    Runner r(spec);
    int n = pick(spec.width, 10);
    int depth = pick_depth(spec.depth, 100);
    long draws = pick(spec.samples, 10L);
    int threads = resolve_threads(spec.threads);
    ActivationSpec act = resolve_activation(spec, "relu");
    reject_variant(spec);

    r.report["parameters"] = {{"width", n},       {"depth", depth},
                              {"samples", draws}, {"activation", act.name()},
                              {"threads", threads}, {"out", spec.out_dir.string()}};
    r.predict({"gradient_ratio_scaled", "variance_bound", {10.0},
               "with 1/sqrt(L) block scaling the back-propagated gradient norm stays bounded; "
               "without it the ratio |g_0|/|g_L| explodes"});

    std::vector<double> x = ones(1);
    std::vector<double> terminal = ones(n);
    RngStream stream = RngStream(spec.seed).child("gradient-norms");
    CsvWriter csv(r.csv_path, spec.name, {"variant", "sample_id", "layer", "grad_norm"});

    json results = json::object();
    double median_scaled = 0.0, median_unscaled = 0.0;
    for (bool scaled : {true, false}) {
        NetworkConfig cfg{n, depth, 1, act, scaled};
        std::string label = scaled ? "scaled" : "unscaled";
        std::vector<std::vector<double>> norms(draws);
        parallel_for(draws, threads, [&](long i) {
            norms[i] = gradient_norms(cfg, x, terminal,
                                      stream.child(label).child("sample", static_cast<std::uint64_t>(i)));
        });
        std::vector<double> ratios(draws);
        for (long i = 0; i < draws; ++i) {
            ratios[i] = norms[i].back();
            for (int k = 0; k <= depth; ++k) {
                csv.cell(label);
                csv.cell(i);
                csv.cell(depth - k);
                csv.cell(norms[i][k]);
                csv.end_row();
            }
        }
        double med = median(ratios);
        (scaled ? median_scaled : median_unscaled) = med;
        results[label] = {{"median_ratio", med}, {"ratios", ratios}};
    }
    r.report["results"] = results;
    r.check("scaled-median-ratio-below-10", median_scaled < 10.0, median_scaled,
            "median |g_0|/|g_L| over draws, scaled network");
    r.check("unscaled-median-ratio-above-1e3", median_unscaled > 1e3, median_unscaled,
            "median |g_0|/|g_L| over draws, unscaled network");
    return r.finish();
}

// ---------------------------------------------------------------------------
// regime-change

ExperimentResult run_regime_change(const ExperimentSpec& spec) {
    Runner r(spec);
    std::vector<int> widths =
        spec.widths.empty() ? std::vector<int>{1, 2, 3, 4, 6, 20} : spec.widths;
    int depth = pick_depth(spec.depth, 100);
    // The width-4 drift is 1/60, so resolving its sign at 3*stderr needs
    // stderr < 1/180: about 8.4k samples at sd ~ 0.5. The default leaves a
    // comfortable margin and still runs in seconds.
    long samples = pick(spec.samples, 40000L);
    int threads = resolve_threads(spec.threads);
    ActivationSpec act = resolve_activation(spec, "relu");
    require(act.kind == ActivationKind::relu, "regime-change: requires the relu activation");
    reject_variant(spec);

    r.report["parameters"] = {{"widths", widths},   {"depth", depth},
                              {"samples", samples}, {"activation", act.name()},
                              {"threads", threads}, {"out", spec.out_dir.string()}};
    r.predict({"sign_change", "mean", {3.0, 4.0},
               "the mean log growth of |phi(Y_L)| flips sign between widths 3 and 4 under the "
               "main coefficient ((1-2^{-n})^{-1}/4 - 1/n)"});

    RngStream stream = RngStream(spec.seed).child("regime-change");
    CsvWriter csv(r.csv_path, spec.name,
                  {"width", "n_samples", "n_excluded", "mean", "std_error", "prediction_main",
                   "prediction_appendix"});
    json per_width = json::array();
    for (int n : widths) {
        NetworkConfig cfg{n, depth, 1, act, true};
        RatioSamples rs = post_norm_log_ratios(cfg, samples, stream.child("width", n), threads);
        MonteCarloSummary s = summarize(rs.values, rs.excluded);
        double main_pred = theory::relu_log_growth_mean(n, 0.0, 1.0, theory::MeanVariant::main);
        double app_pred = theory::relu_log_growth_mean(n, 0.0, 1.0, theory::MeanVariant::appendix);
        csv.cell(n);
        csv.cell(s.n_samples);
        csv.cell(s.n_excluded);
        csv.cell(s.mean);
        csv.cell(s.std_error);
        csv.cell(main_pred);
        csv.cell(app_pred);
        csv.end_row();
        json jr = to_json(s);
        jr["width"] = n;
        jr["prediction_main"] = main_pred;
        jr["prediction_appendix"] = app_pred;
        per_width.push_back(jr);
        if (n <= 3)
            r.check("negative-growth-width-" + std::to_string(n),
                    s.mean + 3.0 * s.std_error < 0.0, s.mean,
                    "mean log growth significantly negative (3*stderr)");
        else
            r.check("positive-growth-width-" + std::to_string(n),
                    s.mean - 3.0 * s.std_error > 0.0, s.mean,
                    "mean log growth significantly positive (3*stderr)");
    }
    r.report["results"]["per_width"] = per_width;
    return r.finish();
}

// ---------------------------------------------------------------------------
// identity-norm

ExperimentResult run_identity_norm(const ExperimentSpec& spec) {
    Runner r(spec);
    std::vector<int> widths = spec.widths.empty() ? std::vector<int>{2, 5, 20} : spec.widths;
    int depth = pick_depth(spec.depth, 100);
    long samples = pick(spec.samples, 5000L);
    int threads = resolve_threads(spec.threads);
    ActivationSpec act = resolve_activation(spec, "piecewise:1:-1");
    require(act.kind == ActivationKind::piecewise_linear && act.alpha == 1.0 && act.beta == -1.0,
            "identity-norm: fixed to the identity activation piecewise:1:-1");
    reject_variant(spec);

    r.report["parameters"] = {{"widths", widths},   {"depth", depth},
                              {"samples", samples}, {"activation", act.name()},
                              {"threads", threads}, {"out", spec.out_dir.string()}};
    r.predict({"identity_log_growth", "mean", {},
               "with the identity activation the norm satisfies log(|Y_t|/|Y_0|) with "
               "deterministic drift (1/2 - 1/n) t"});

    RngStream stream = RngStream(spec.seed).child("identity-norm");
    CsvWriter csv(r.csv_path, spec.name, {"width", "sample_id", "log_norm_ratio"});
    json per_width = json::array();
    for (int n : widths) {
        NetworkConfig cfg{n, depth, 1, act, true};
        RatioSamples rs = post_norm_log_ratios(cfg, samples, stream.child("width", n), threads);
        MonteCarloSummary s = summarize(rs.values, rs.excluded);
        double pred = theory::piecewise_mean_drift(1.0, -1.0, n);
        for (std::size_t i = 0; i < rs.values.size(); ++i) {
            csv.cell(n);
            csv.cell(static_cast<long>(i));
            csv.cell(rs.values[i]);
            csv.end_row();
        }
        json jr = to_json(s);
        jr["width"] = n;
        jr["prediction"] = pred;
        per_width.push_back(jr);
        r.check("mean-matches-width-" + std::to_string(n),
                std::fabs(s.mean - pred) <= 3.0 * s.std_error, s.mean,
                "mean log(|Y_L|/|Y_0|) within 3*stderr of 1/2 - 1/n");
    }
    r.report["results"]["per_width"] = per_width;
    return r.finish();
}

// ---------------------------------------------------------------------------
// euler-order: strong order 1/2 by coupled refinement against a 4x finer
// grid sharing the same Brownian increments.

ExperimentResult run_euler_order(const ExperimentSpec& spec) {
    Runner r(spec);
    int dims = pick(spec.width, 4);
    long samples = pick(spec.samples, 400L);
    int threads = resolve_threads(spec.threads);
    std::vector<int> steps_list =
        spec.steps_list.empty() ? std::vector<int>{64, 256, 1024} : spec.steps_list;
    ActivationSpec act = resolve_activation(spec, "relu");
    reject_variant(spec);
    std::sort(steps_list.begin(), steps_list.end());
    require(steps_list.size() >= 2, "euler-order: need at least two step counts");

    int finest = steps_list.back() * 4;
    r.report["parameters"] = {{"dims", dims},
                              {"samples", samples},
                              {"steps", steps_list},
                              {"finest", finest},
                              {"activation", act.name()},
                              {"threads", threads},
                              {"out", spec.out_dir.string()}};
    r.predict({"strong_order", "mean", {0.5},
               "the Euler scheme of dX = n^{-1/2}|phi(X)| dB has strong error "
               "E sup_t |X^delta - X|^2 = O(delta), so the RMS sup-error scales like delta^(1/2)"});

    for (int m : steps_list)
        require(m >= 1 && finest % m == 0,
                "euler-order: step counts must divide the finest grid");

    RngStream stream = RngStream(spec.seed).child("euler-order");
    std::vector<int> all_res = steps_list;
    all_res.push_back(finest);
    for (std::size_t i = 0; i + 1 < all_res.size(); ++i)
        require(all_res[i + 1] % all_res[i] == 0 && all_res[i + 1] > all_res[i],
                "euler-order: each step count must divide the next");
    const std::size_t n_res = all_res.size();

    // sup-squared distances between resolution i and resolution i+1 (4x finer),
    // accumulated per sample.
    std::vector<std::vector<double>> sup2(n_res - 1, std::vector<double>(samples, 0.0));
    parallel_for(samples, threads, [&](long s) {
        RngStream sample = stream.child("sample", static_cast<std::uint64_t>(s));
        RngStream win = sample.child("win");
        std::vector<double> x0(dims);
        for (int i = 0; i < dims; ++i) x0[i] = win.next_gauss();

        RngStream noise = sample.child("noise");
        std::vector<double> fine(static_cast<std::size_t>(finest) * dims);
        double sqrt_dtf = std::sqrt(1.0 / finest);
        for (double& v : fine) v = sqrt_dtf * noise.next_gauss();

        // Integrate each resolution from the shared increments.
        std::vector<std::vector<std::vector<double>>> grids(n_res);
        std::vector<double> post(dims);
        for (std::size_t ri = 0; ri < n_res; ++ri) {
            int m = all_res[ri];
            int block = finest / m;
            std::vector<std::vector<double>> g;
            g.reserve(m + 1);
            g.push_back(x0);
            std::vector<double> x = x0;
            for (int k = 0; k < m; ++k) {
                act.apply(x, post);
                double vol = std::sqrt(squared_norm(post)) / std::sqrt(static_cast<double>(dims));
                for (int c = 0; c < dims; ++c) {
                    double db = 0.0;
                    for (int b = 0; b < block; ++b)
                        db += fine[(static_cast<std::size_t>(k) * block + b) * dims + c];
                    x[c] += vol * db;
                }
                g.push_back(x);
            }
            grids[ri] = std::move(g);
        }
        for (std::size_t ri = 0; ri + 1 < n_res; ++ri) {
            int m = all_res[ri];
            int ratio = all_res[ri + 1] / m;
            double worst = 0.0;
            for (int k = 0; k <= m; ++k) {
                double d2 = 0.0;
                for (int c = 0; c < dims; ++c) {
                    double d = grids[ri][k][c] - grids[ri + 1][static_cast<std::size_t>(k) * ratio][c];
                    d2 += d * d;
                }
                worst = std::max(worst, d2);
            }
            sup2[ri][s] = worst;
        }
    });

    CsvWriter csv(r.csv_path, spec.name, {"delta", "rms_sup_error", "n_samples"});
    std::vector<double> log_delta, log_err;
    json rows = json::array();
    for (std::size_t ri = 0; ri + 1 < n_res; ++ri) {
        double delta = 1.0 / all_res[ri];
        double mean2 = 0.0;
        for (double v : sup2[ri]) mean2 += v;
        mean2 /= static_cast<double>(samples);
        double rms = std::sqrt(mean2);
        csv.cell(delta);
        csv.cell(rms);
        csv.cell(samples);
        csv.end_row();
        rows.push_back({{"delta", delta}, {"rms_sup_error", rms}});
        log_delta.push_back(std::log(delta));
        log_err.push_back(std::log(rms));
    }
    double slope = fit_slope(log_delta, log_err);
    r.report["results"] = {{"errors", rows}, {"slope", slope}};
    r.check("slope-within-0.35-0.65", slope >= 0.35 && slope <= 0.65, slope,
            "log-log slope of the coupled-refinement RMS sup-error vs 0.5 +/- 0.15");
    return r.finish();
}

// ---------------------------------------------------------------------------
// mckean-variance

ExperimentResult run_mckean_variance(const ExperimentSpec& spec) {
    Runner r(spec);
    int width = pick(spec.width, 200);
    int input_dim = pick(spec.input_dim, 4);
    int steps = pick(spec.steps, 1000);
    long samples = pick(spec.samples, 2000L);
    int threads = resolve_threads(spec.threads);
    ActivationSpec act = resolve_activation(spec, "relu");
    require(act.kind == ActivationKind::relu, "mckean-variance: requires the relu activation");
    reject_variant(spec);

    r.report["parameters"] = {{"width", width},     {"input_dim", input_dim},
                              {"steps", steps},     {"samples", samples},
                              {"activation", act.name()}, {"threads", threads},
                              {"out", spec.out_dir.string()}};

    std::vector<double> x = ones(input_dim);
    double target = squared_norm(x) / input_dim * std::exp(0.5);
    r.predict({"coordinate_variance_t1", "variance", {target},
               "in the wide limit each coordinate follows the mean-field SDE and is "
               "N(0, d^{-1}|x|^2 e^{t/2}); the finite-width coupling error is O(1/n)"});

    MckeanCheck mc = mckean_marginal_check(width, input_dim, x, steps, samples,
                                           RngStream(spec.seed).child("mckean-variance"), threads);
    CsvWriter csv(r.csv_path, spec.name, {"t", "var_empirical", "var_theory", "n_samples"});
    json rows = json::array();
    for (std::size_t g = 0; g < mc.times.size(); ++g) {
        csv.cell(mc.times[g]);
        csv.cell(mc.empirical_var[g]);
        csv.cell(mc.theory_var[g]);
        csv.cell(samples);
        csv.end_row();
        rows.push_back({{"t", mc.times[g]},
                        {"var_empirical", mc.empirical_var[g]},
                        {"var_theory", mc.theory_var[g]}});
    }
    r.report["results"]["grid"] = rows;
    double rel = mc.empirical_var.back() / mc.theory_var.back() - 1.0;
    r.check("variance-at-t1-within-10-percent", std::fabs(rel) <= 0.10,
            mc.empirical_var.back(), "empirical Var(X_1^1) vs d^{-1}|x|^2 e^{1/2}");
    return r.finish();
}

// ---------------------------------------------------------------------------
// limit-order

ExperimentResult run_limit_order(const ExperimentSpec& spec) {
    Runner r(spec);
    int threads = resolve_threads(spec.threads);
    ActivationSpec act = resolve_activation(spec, "relu");
    require(act.kind == ActivationKind::relu, "limit-order: requires the relu activation");
    require(spec.variant.empty() || spec.variant == "as-stated" || spec.variant == "reconciled",
            "limit-order: --variant must be as-stated or reconciled");
    std::string reading = spec.variant.empty() ? "as-stated" : spec.variant;

    int a_width = pick(spec.width, 100);
    int a_depth = pick_depth(spec.depth, 1000);
    long a_samples = pick(spec.samples, 200L);
    int b_width = spec.widths.size() == 2 ? spec.widths[1] : 2000;
    int b_depth = spec.depths.size() == 2 ? spec.depths[1] : 200;
    long b_samples = 20;

    r.report["parameters"] = {{"a_width", a_width},     {"a_depth", a_depth},
                              {"a_samples", a_samples}, {"b_width", b_width},
                              {"b_depth", b_depth},     {"b_samples", b_samples},
                              {"activation", act.name()}, {"threads", threads},
                              {"variant", reading},     {"out", spec.out_dir.string()}};

    using theory::LimitOrder;
    using theory::LimitVariant;
    double ratio_dtw = std::log(theory::sequential_limit_norm_ratio(
        1.0, LimitOrder::depth_then_width, LimitVariant::as_stated));
    double ratio_wtd = std::log(theory::sequential_limit_norm_ratio(
        1.0, LimitOrder::width_then_depth, LimitVariant::as_stated));
    double ratio_rec = std::log(theory::sequential_limit_norm_ratio(
        1.0, LimitOrder::width_then_depth, LimitVariant::reconciled));
    r.predict({"log_ratio_depth_then_width", "mean", {ratio_dtw},
               "depth-then-width: log of the post-activation norm ratio converges to t/4"});
    r.predict({"log_ratio_width_then_depth", "mean", {ratio_wtd, ratio_rec},
               "width-then-depth: exp(t/2) as stated vs exp(t/4) from the variance recursion "
               "q' = q/2 under N(0, 1/n) weights; the proxy below adjudicates"});

    RngStream stream = RngStream(spec.seed).child("limit-order");
    CsvWriter csv(r.csv_path, spec.name,
                  {"part", "width", "depth", "sample_id", "log_norm_ratio"});

    auto run_part = [&](const std::string& part, int n, int depth, long samples) {
        NetworkConfig cfg{n, depth, 1, act, true};
        RatioSamples rs = post_norm_log_ratios(cfg, samples, stream.child(part), threads);
        for (std::size_t i = 0; i < rs.values.size(); ++i) {
            csv.cell(part);
            csv.cell(n);
            csv.cell(depth);
            csv.cell(static_cast<long>(i));
            csv.cell(rs.values[i]);
            csv.end_row();
        }
        MonteCarloSummary s = summarize(rs.values, rs.excluded);
        json jr = to_json(s);
        jr["width"] = n;
        jr["depth"] = depth;
        r.report["results"][part] = jr;
        return s;
    };

    MonteCarloSummary a = run_part("depth-then-width", a_width, a_depth, a_samples);
    r.check("a-mean-within-3-stderr-of-0.25", std::fabs(a.mean - ratio_dtw) <= 3.0 * a.std_error,
            a.mean, "depth-then-width mean log norm ratio vs t/4 at t=1");

    MonteCarloSummary b = run_part("width-then-depth", b_width, b_depth, b_samples);
    r.check("b-stderr-below-0.02", b.std_error < 0.02, b.std_error,
            "the wide proxy must resolve the 0.25 vs 0.5 gap");
    bool match_rec = std::fabs(b.mean - ratio_rec) <= 3.0 * b.std_error;
    bool match_stated = std::fabs(b.mean - ratio_wtd) <= 3.0 * b.std_error;
    std::string verdict = match_rec && match_stated ? "both"
                          : match_rec              ? "reconciled"
                          : match_stated           ? "as_stated"
                                                   : "neither";
    r.report["results"]["adjudication"] = {{"b_mean", b.mean},
                                           {"target_reconciled", ratio_rec},
                                           {"target_as_stated", ratio_wtd},
                                           {"matched", verdict}};
    r.check("b-verdict-recorded", verdict != "neither", b.mean,
            "width-then-depth proxy matches one of the limit variants (verdict: " + verdict + ")");
    return r.finish();
}

using RunFn = ExperimentResult (*)(const ExperimentSpec&);

struct Entry {
    ExperimentInfo info;
    RunFn run;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {{"gbm-hist",
          "width-1 relu histograms: log of the terminal state, network and Euler scheme",
          "terminal law x0*exp(-t/2 + B_t): mean -1/2 and KS against N(-1/2, 1)"},
         run_gbm_hist},
        {{"ou-hist", "exotic-activation histograms of g(Y_L) plus mean-decay-rate fit",
          "g(X_t) is mean-reverting OU with rate pi*alpha^2/4; adjudicates pi/4 vs pi/3 decay"},
         run_ou_hist},
        {{"collapse-prob", "collapse probability across widths and depths",
          "depth-0 event has probability 2^{-n}; the probability shrinks as depth grows"},
         run_collapse_prob},
        {{"quasi-gbm-hist", "post-activation norm log growth per width, conditioned on survival",
          "quasi-GBM mean ((1-2^{-n})^{-1}/4 - 1/n) t and rejection of the uninverted variant"},
         run_quasi_gbm_hist},
        {{"log-growth-paths", "per-layer log growth paths with the drift line",
          "log |phi(Y_l)| grows linearly in l/L at the quasi-GBM drift"},
         run_log_growth_paths},
        {{"correlation-paths", "two-input correlation paths across layers",
          "correlations stay in [-1,1] and do not degenerate under 1/sqrt(L) scaling"},
         run_correlation_paths},
        {{"gradient-norms", "back-propagated gradient norms, scaled vs unscaled",
          "1/sqrt(L) scaling keeps |g_0|/|g_L| bounded; without it the ratio explodes"},
         run_gradient_norms},
        {{"regime-change", "sign of the mean log growth as width crosses 3 to 4",
          "negative mean growth for n <= 3, positive for n >= 4"},
         run_regime_change},
        {{"identity-norm", "norm growth under the identity activation",
          "log(|Y_L|/|Y_0|) has deterministic drift (1/2 - 1/n)"},
         run_identity_norm},
        {{"euler-order", "strong convergence order of the Euler scheme",
          "coupled-refinement RMS sup-error scales like delta^(1/2)"},
         run_euler_order},
        {{"mckean-variance", "wide-network coordinate variance vs the mean-field law",
          "Var(X_t^1) -> d^{-1}|x|^2 e^{t/2} with O(1/n) coupling error"},
         run_mckean_variance},
        {{"limit-order", "order of the sequential infinite limits",
          "depth-then-width log ratio t/4; width-then-depth proxy vs t/4 (reconciled) and t/2"},
         run_limit_order},
    };
    return table;
}

} // namespace

const std::vector<ExperimentInfo>& experiment_catalog() {
    static const std::vector<ExperimentInfo> infos = [] {
        std::vector<ExperimentInfo> v;
        for (const Entry& e : entries()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

std::string catalog_text() {
    std::string out;
    for (const ExperimentInfo& e : experiment_catalog()) {
        out += e.name;
        out += "\n    ";
        out += e.summary;
        out += "\n    verifies: ";
        out += e.verifies;
        out += "\n";
    }
    return out;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    for (const Entry& e : entries())
        if (e.info.name == spec.name) return e.run(spec);
    throw std::invalid_argument("unknown experiment '" + spec.name + "' (see `list`)");
}

} // namespace sdelab
