#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace sdelab {

// One entry of the experiment catalog with the parameters a user may pin.
// Zero / negative / empty fields fall back to the experiment's defaults;
// every resolved value is echoed into the JSON report.
struct ExperimentSpec {
    std::string name;
    int width = 0;
    int depth = -1;  // -1: default (0 is a legal depth for the collapse surrogate)
    int input_dim = 0;
    long samples = 0;
    int steps = 0;
    std::uint64_t seed = 1;
    std::string activation;  // CLI spelling; empty: experiment default
    std::string variant;     // main | appendix | as-stated | reconciled
    double radius = 0.0;     // stopped-process radius; 0: default 10
    int threads = 0;         // 0: hardware concurrency
    std::vector<int> widths;
    std::vector<int> depths;
    std::vector<int> steps_list;
    std::filesystem::path out_dir = "out";
};

struct ExperimentInfo {
    std::string name;
    std::string summary;
    std::string verifies;  // the closed-form law or qualitative claim it reproduces
};

struct ExperimentResult {
    nlohmann::json report;
    bool pass = false;
    std::filesystem::path csv_path;
    std::filesystem::path json_path;
};

const std::vector<ExperimentInfo>& experiment_catalog();
std::string catalog_text();

// Runs one experiment, writes <out>/<name>.csv and <out>/<name>.report.json,
// and returns the verdict. Unknown names and invalid parameter combinations
// raise std::invalid_argument (usage errors).
ExperimentResult run_experiment(const ExperimentSpec& spec);

} // namespace sdelab
