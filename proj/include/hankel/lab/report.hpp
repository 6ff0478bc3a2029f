#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hankel/lab/config.hpp"

namespace hankel::lab {

/// One gated threshold: passed iff `value relation threshold`.
struct Check {
    std::string name;
    double value = 0;
    std::string relation;  // "<=", ">=", "<", ">"
    double threshold = 0;
    bool passed = false;

    static Check make(std::string name, double value, std::string relation, double threshold);
};

struct Chart {
    std::string title;
    std::string xlabel;
    std::string ylabel;
    std::vector<double> xs;
    std::vector<double> ys;
};

///
/// Rows are kept as text so that the CSV is byte-identical across reruns and
/// summaries can be recomputed from exactly what was written.
///
struct ExperimentReport {
    ExperimentConfig config;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    json summary = json::object();
    std::vector<Check> checks;
    std::vector<Chart> charts;
    std::map<std::string, json> artifacts;  // extra JSON files, e.g. failing witnesses
    double wall_clock_seconds = 0;

    bool passed() const;
    std::size_t column_index(std::string_view name) const;
    std::vector<double> numeric_column(std::string_view name) const;
    const std::string& cell(std::size_t row, std::string_view name) const;
    double number(std::size_t row, std::string_view name) const;
};

std::string cell(double v);
std::string cell(long long v);
inline std::string cell(long v) { return cell(static_cast<long long>(v)); }
inline std::string cell(int v) { return cell(static_cast<long long>(v)); }
inline std::string cell(std::string s) { return s; }

std::string rows_csv(const ExperimentReport& r);
json summary_json(const ExperimentReport& r);
std::string svg_line_chart(const Chart& c);

/// Writes rows.csv, summary.json, any artifacts and (when enabled) one SVG per chart.
void write_report(const ExperimentReport& r, const std::filesystem::path& dir);

/// Ordinary least squares y = a + b x.
struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double r2 = 0;
    double slope_stderr = 0;
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hankel::lab
