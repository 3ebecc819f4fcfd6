#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdelab/experiments.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t c = text.find(',', pos);
        std::string tok = text.substr(pos, c - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (...) {
            throw std::invalid_argument(flag + ": expected a comma-separated integer list, got '" +
                                        text + "'");
        }
        if (c == std::string::npos) break;
        pos = c + 1;
    }
    return out;
}

// Plain key=value configuration; '#' starts a comment. Keys use the long
// flag names without dashes. Values for keys also given on the command line
// are ignored (flags take precedence).
std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto strip = [](std::string s) {
            std::size_t b = s.find_first_not_of(" \t\r");
            std::size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string stripped = strip(line);
        if (stripped.empty()) continue;
        std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        kv[strip(stripped.substr(0, eq))] = strip(stripped.substr(eq + 1));
    }
    return kv;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulation lab for deep residual networks at random initialization and their "
                 "infinite-depth diffusion limits"};
    app.require_subcommand(1);

    CLI::App* list_cmd = app.add_subcommand("list", "print the experiment catalog");

    sdelab::ExperimentSpec spec;
    std::string widths_text, depths_text, steps_list_text, out_text, config_path;
    CLI::App* run = app.add_subcommand("run", "run one experiment; emits CSV and a JSON verdict");
    run->add_option("experiment", spec.name, "experiment name (see `list`)")->required();
    run->add_option("--width,-n,--dims", spec.width, "network width / state dimension");
    run->add_option("--depth,-L", spec.depth, "network depth (0 is the initial-state surrogate)");
    run->add_option("--input-dim,-d", spec.input_dim, "input dimension");
    run->add_option("--samples,-N", spec.samples, "Monte Carlo sample count");
    run->add_option("--steps", spec.steps, "SDE grid steps per unit time");
    run->add_option("--seed", spec.seed, "root seed; everything else derives from it");
    run->add_option("--activation", spec.activation,
                    "relu | identity | piecewise:a:b | linear:a:b | smooth_relu:m | exotic:a:b | "
                    "tanh | gelu | swish");
    run->add_option("--variant", spec.variant, "main | appendix | as-stated | reconciled");
    run->add_option("--radius", spec.radius,
                    "stopped-process radius for locally Lipschitz activations (default 10)");
    run->add_option("--threads", spec.threads, "sample-level worker count (0 = hardware)");
    run->add_option("--widths", widths_text, "comma list overriding a width grid");
    run->add_option("--depths", depths_text, "comma list overriding a depth grid");
    run->add_option("--step-list", steps_list_text, "comma list of step counts (euler-order)");
    run->add_option("--out", out_text, "output directory (default ./out)");
    run->add_option("--config", config_path,
                    "key=value file; keys are the long flag names; command-line flags take "
                    "precedence");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    if (list_cmd->parsed()) {
        std::cout << sdelab::catalog_text();
        std::cout << "(" << sdelab::experiment_catalog().size() << " experiments)\n";
        return 0;
    }

    try {
        if (!config_path.empty()) {
            auto kv = read_config(config_path);
            auto take = [&](const char* flag, const char* key, auto parse) {
                auto it = kv.find(key);
                if (it == kv.end()) return;
                if (run->count(flag) == 0) parse(it->second);  // flag beats config
                kv.erase(it);
            };
            take("--width", "width", [&](const std::string& v) { spec.width = std::stoi(v); });
            take("--depth", "depth", [&](const std::string& v) { spec.depth = std::stoi(v); });
            take("--input-dim", "input-dim",
                 [&](const std::string& v) { spec.input_dim = std::stoi(v); });
            take("--samples", "samples",
                 [&](const std::string& v) { spec.samples = std::stol(v); });
            take("--steps", "steps", [&](const std::string& v) { spec.steps = std::stoi(v); });
            take("--seed", "seed", [&](const std::string& v) { spec.seed = std::stoull(v); });
            take("--activation", "activation", [&](const std::string& v) { spec.activation = v; });
            take("--variant", "variant", [&](const std::string& v) { spec.variant = v; });
            take("--radius", "radius", [&](const std::string& v) { spec.radius = std::stod(v); });
            take("--threads", "threads",
                 [&](const std::string& v) { spec.threads = std::stoi(v); });
            take("--widths", "widths", [&](const std::string& v) { widths_text = v; });
            take("--depths", "depths", [&](const std::string& v) { depths_text = v; });
            take("--step-list", "step-list",
                 [&](const std::string& v) { steps_list_text = v; });
            take("--out", "out", [&](const std::string& v) { out_text = v; });
            if (!kv.empty())
                throw std::invalid_argument("config: unknown key '" + kv.begin()->first + "'");
        }
        if (!widths_text.empty()) spec.widths = parse_int_list(widths_text, "--widths");
        if (!depths_text.empty()) spec.depths = parse_int_list(depths_text, "--depths");
        if (!steps_list_text.empty())
            spec.steps_list = parse_int_list(steps_list_text, "--step-list");
        spec.out_dir = out_text.empty() ? "out" : out_text;

        sdelab::ExperimentResult result = sdelab::run_experiment(spec);
        for (const auto& check : result.report["checks"])
            std::printf("[%s] %s (observed %.6g)\n",
                        check["pass"].get<bool>() ? "PASS" : "FAIL",
                        check["name"].get<std::string>().c_str(),
                        check["observed"].get<double>());
        std::printf("%s: %s -> %s, %s\n", spec.name.c_str(),
                    result.pass ? "PASS" : "FAIL", result.csv_path.string().c_str(),
                    result.json_path.string().c_str());
        return result.pass ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
