#include "sdelab/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <stdexcept>

namespace sdelab {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::string& experiment,
                     const std::vector<std::string>& columns) {
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    out_.open(path, std::ios::binary | std::ios::trunc);
    if (!out_) throw std::runtime_error("cannot open " + path.string());
    out_ << "# schema=1 experiment=" << experiment << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out_ << ',';
        out_ << columns[i];
    }
    out_ << '\n';
}

void CsvWriter::cell(const std::string& v) {
    if (row_started_) out_ << ',';
    out_ << v;
    row_started_ = true;
}

void CsvWriter::cell(double v) { cell(format_double(v)); }

void CsvWriter::cell(long v) { cell(std::to_string(v)); }

void CsvWriter::end_row() {
    out_ << '\n';
    row_started_ = false;
}

nlohmann::json to_json(const MonteCarloSummary& s) {
    return {{"n", s.n_samples},
            {"n_excluded", s.n_excluded},
            {"mean", s.mean},
            {"variance", s.variance},
            {"std_error", s.std_error},
            {"quantiles",
             {{"q005", s.quantiles[0]},
              {"q025", s.quantiles[1]},
              {"q50", s.quantiles[2]},
              {"q975", s.quantiles[3]},
              {"q995", s.quantiles[4]}}}};
}

nlohmann::json to_json(const KsResult& k) {
    return {{"D", k.statistic}, {"p", k.p_value}, {"n_effective", k.n_effective}};
}

nlohmann::json to_json(const TheoryPrediction& p) {
    nlohmann::json j{{"label", p.label}, {"kind", p.kind}, {"source", p.source}};
    if (p.values.size() == 1)
        j["value"] = p.values[0];
    else
        j["value"] = p.values;
    return j;
}

void add_check(nlohmann::json& checks, bool& all_pass, const std::string& name, bool pass,
               double observed, const std::string& detail) {
    checks.push_back({{"name", name}, {"pass", pass}, {"observed", observed}, {"detail", detail}});
    all_pass = all_pass && pass;
}

void write_json_report(const std::filesystem::path& path, const nlohmann::json& report) {
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << report.dump(2) << "\n";
}

} // namespace sdelab
