#include "hankel/lab/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hankel/errors.hpp"
#include "hankel/io.hpp"

namespace hankel::lab {

Check Check::make(std::string name, double value, std::string relation, double threshold)
{
    bool ok = false;
    if (relation == "<=") ok = value <= threshold;
    else if (relation == ">=") ok = value >= threshold;
    else if (relation == "<") ok = value < threshold;
    else if (relation == ">") ok = value > threshold;
    else throw DomainError("unknown relation " + relation);
    return {std::move(name), value, std::move(relation), threshold, ok};
}

bool ExperimentReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::size_t ExperimentReport::column_index(std::string_view name) const
{
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw DomainError("report has no column " + std::string(name));
    return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> ExperimentReport::numeric_column(std::string_view name) const
{
    const std::size_t i = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(std::stod(r[i]));
    return out;
}

const std::string& ExperimentReport::cell(std::size_t row, std::string_view name) const
{
    return rows.at(row).at(column_index(name));
}

double ExperimentReport::number(std::size_t row, std::string_view name) const { return std::stod(cell(row, name)); }

std::string cell(double v) { return format_double(v); }
std::string cell(long long v) { return std::to_string(v); }

std::string rows_csv(const ExperimentReport& r)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
    os << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << '\n';
    }
    return os.str();
}

json summary_json(const ExperimentReport& r)
{
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"value", c.value},
                          {"relation", c.relation},
                          {"threshold", c.threshold},
                          {"passed", c.passed}});
    return {{"experiment", to_string(r.config.id)},
            {"config", to_json(r.config)},
            {"rows", r.rows.size()},
            {"summary", r.summary},
            {"checks", checks},
            {"passed", r.passed()},
            {"wall_clock_seconds", r.wall_clock_seconds}};
}

std::string svg_line_chart(const Chart& c)
{
    const double W = 640, H = 400, left = 70, right = 20, top = 40, bottom = 50;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
       << c.title << "</text>\n";
    if (c.xs.empty()) {
        os << "</svg>\n";
        return os.str();
    }
    auto [xmin_it, xmax_it] = std::minmax_element(c.xs.begin(), c.xs.end());
    auto [ymin_it, ymax_it] = std::minmax_element(c.ys.begin(), c.ys.end());
    double xmin = *xmin_it, xmax = *xmax_it, ymin = std::min(0.0, *ymin_it), ymax = *ymax_it;
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    ymax += 0.05 * (ymax - ymin);
    auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (W - left - right); };
    auto py = [&](double y) { return H - bottom - (y - ymin) / (ymax - ymin) * (H - top - bottom); };

    os << "<g stroke=\"black\" stroke-width=\"1\">\n";
    os << "<line x1=\"" << left << "\" y1=\"" << H - bottom << "\" x2=\"" << W - right << "\" y2=\"" << H - bottom
       << "\"/>\n";
    os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << H - bottom << "\"/>\n";
    os << "</g>\n";
    for (int t = 0; t <= 4; ++t) {
        const double xv = xmin + (xmax - xmin) * t / 4, yv = ymin + (ymax - ymin) * t / 4;
        os << "<text x=\"" << px(xv) << "\" y=\"" << H - bottom + 18
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << format_double(std::round(xv * 1000) / 1000)
           << "</text>\n";
        os << "<text x=\"" << left - 6 << "\" y=\"" << py(yv) + 4
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << format_double(std::round(yv * 1000) / 1000)
           << "</text>\n";
    }
    os << "<text x=\"" << W / 2 << "\" y=\"" << H - 10
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << c.xlabel << "</text>\n";
    os << "<text x=\"16\" y=\"" << H / 2 << "\" transform=\"rotate(-90 16 " << H / 2
       << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << c.ylabel << "</text>\n";

    os << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < c.xs.size(); ++i) os << (i ? " " : "") << px(c.xs[i]) << ',' << py(c.ys[i]);
    os << "\"/>\n";
    for (std::size_t i = 0; i < c.xs.size(); ++i)
        os << "<circle cx=\"" << px(c.xs[i]) << "\" cy=\"" << py(c.ys[i]) << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
    os << "</svg>\n";
    return os.str();
}

void write_report(const ExperimentReport& r, const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream os(dir / name, std::ios::binary);
        if (!os) throw Error("cannot write " + (dir / name).string());
        os << text;
    };
    write("rows.csv", rows_csv(r));
    write("summary.json", summary_json(r).dump(2) + "\n");
    for (const auto& [name, j] : r.artifacts) write(name, j.dump(2) + "\n");
    if (r.config.svg)
        for (std::size_t i = 0; i < r.charts.size(); ++i)
            write("chart" + std::to_string(i + 1) + ".svg", svg_line_chart(r.charts[i]));
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2) throw DomainError("a line fit needs at least two points");
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0) throw DomainError("a line fit needs at least two distinct abscissae");
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    const double sse = std::max(0.0, syy - f.slope * sxy);
    f.r2 = syy > 0 ? 1 - sse / syy : 1.0;
    f.slope_stderr = x.size() > 2 ? std::sqrt(sse / (n - 2) / sxx) : 0.0;
    return f;
}

}  // namespace hankel::lab
