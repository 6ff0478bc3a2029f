#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"

#include "hankel/hankel.hpp"
#include "hankel/opnorm.hpp"
#include "hankel/spaces.hpp"
#include "hankel/trig_poly.hpp"

namespace hankel {

using json = nlohmann::json;

/// [[n, re, im], ...] in increasing frequency, zero coefficients omitted.
json to_json(const TrigPoly& f);
TrigPoly trig_poly_from_json(const json& j);

void save_trig_poly(const std::filesystem::path& path, const TrigPoly& f);
TrigPoly load_trig_poly(const std::filesystem::path& path);

json to_json(const NormEstimate& e);
json to_json(const LipschitzNorm& n);

std::string to_string(NormMethod m);
std::string to_string(LipschitzMethod m);

/// Long-format CSV "m,n,re,im", one entry per line in row-major order.
void write_section_csv(std::ostream& os, const MatrixSection& A);

/// CSV row "alpha,method,value,grid" (grid = 0 when not applicable).
std::string norm_csv_row(const LipschitzNorm& n, std::size_t grid = 0);

/// Shortest decimal text that round-trips the double.
std::string format_double(double v);

}  // namespace hankel
