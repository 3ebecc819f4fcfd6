#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sdelab/stats.hpp"
#include "sdelab/theory.hpp"

namespace sdelab {

// CSV emitter with the versioned schema comment line. Numeric cells are
// written with "%.17g" so reruns are byte-identical.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::string& experiment,
              const std::vector<std::string>& columns);

    void cell(const std::string& v);
    void cell(double v);
    void cell(long v);
    void cell(int v) { cell(static_cast<long>(v)); }
    void end_row();

private:
    std::ofstream out_;
    bool row_started_ = false;
};

std::string format_double(double v);
std::string utc_timestamp();

nlohmann::json to_json(const MonteCarloSummary& s);
nlohmann::json to_json(const KsResult& k);
nlohmann::json to_json(const TheoryPrediction& p);

// Appends a named pass/fail entry and folds it into the overall verdict.
void add_check(nlohmann::json& checks, bool& all_pass, const std::string& name, bool pass,
               double observed, const std::string& detail);

void write_json_report(const std::filesystem::path& path, const nlohmann::json& report);

} // namespace sdelab
