#include "hankel/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <vector>

namespace hankel {

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

json to_json(const TrigPoly& f)
{
    json arr = json::array();
    f.for_each_term([&](Freq n, cplx c) { arr.push_back(json::array({n, c.real(), c.imag()})); });
    return arr;
}

TrigPoly trig_poly_from_json(const json& j)
{
    if (!j.is_array()) throw DomainError("a polynomial must be a JSON array of [frequency, re, im] triples");
    std::vector<std::pair<Freq, cplx>> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer())
            throw DomainError("malformed polynomial term: " + t.dump());
        terms.emplace_back(t[0].get<Freq>(), cplx(t[1].get<double>(), t[2].get<double>()));
    }
    return TrigPoly::from_terms(terms);
}

void save_trig_poly(const std::filesystem::path& path, const TrigPoly& f)
{
    std::ofstream os(path);
    if (!os) throw Error("cannot write " + path.string());
    os << to_json(f).dump() << '\n';
}

TrigPoly load_trig_poly(const std::filesystem::path& path)
{
    std::ifstream is(path);
    if (!is) throw Error("cannot read " + path.string());
    return trig_poly_from_json(json::parse(is));
}

std::string to_string(NormMethod m)
{
    switch (m) {
    case NormMethod::power_iteration: return "power_iteration";
    case NormMethod::ratio_search: return "ratio_search";
    case NormMethod::quadrature: return "quadrature";
    }
    return "unknown";
}

std::string to_string(LipschitzMethod m)
{
    return m == LipschitzMethod::lp_block ? "lp_block" : "difference_quotient";
}

json to_json(const NormEstimate& e)
{
    json j{{"value", e.value},
           {"method", to_string(e.method)},
           {"iterations", e.iterations},
           {"residual", e.residual},
           {"converged", e.converged},
           {"degenerate", e.degenerate}};
    if (e.witness_poly) {
        j["witness"] = to_json(*e.witness_poly);
    } else if (e.witness_vector.size() > 0) {
        json w = json::array();
        for (Eigen::Index i = 0; i < e.witness_vector.size(); ++i)
            w.push_back(json::array({e.witness_vector(i).real(), e.witness_vector(i).imag()}));
        j["witness"] = std::move(w);
    }
    return j;
}

json to_json(const LipschitzNorm& n)
{
    json certs = json::array();
    for (const auto& c : n.certificates) certs.push_back(json::array({c.block, c.weighted_sup}));
    return {{"alpha", n.alpha}, {"value", n.value}, {"method", to_string(n.method)}, {"certificates", certs}};
}

void write_section_csv(std::ostream& os, const MatrixSection& A)
{
    os << "m,n,re,im\n";
    for (Eigen::Index m = 0; m < A.rows(); ++m)
        for (Eigen::Index n = 0; n < A.cols(); ++n)
            os << m << ',' << n << ',' << format_double(A(m, n).real()) << ',' << format_double(A(m, n).imag())
               << '\n';
}

std::string norm_csv_row(const LipschitzNorm& n, std::size_t grid)
{
    return format_double(n.alpha) + ',' + to_string(n.method) + ',' + format_double(n.value) + ',' +
           std::to_string(grid);
}

}  // namespace hankel
