#include "hankel/lab/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <thread>

#include "hankel/errors.hpp"
#include "hankel/grid.hpp"
#include "hankel/hankel.hpp"

namespace hankel::lab {

namespace {

const std::pair<ExperimentId, const char*> kNames[] = {
    {ExperimentId::identity_suite, "identity_suite"},
    {ExperimentId::bht_consistency, "bht_consistency"},
    {ExperimentId::truncation_uniformity, "truncation_uniformity"},
    {ExperimentId::log_growth, "log_growth"},
    {ExperimentId::constant_stability, "constant_stability"},
    {ExperimentId::lemma_lipschitz_sweep, "lemma_lipschitz_sweep"},
};

std::vector<double> integer_range(int lo, int hi)
{
    std::vector<double> v;
    for (int g = lo; g <= hi; ++g) v.push_back(g);
    return v;
}

std::vector<Freq> powers_of_two(Freq lo, Freq hi)
{
    std::vector<Freq> v;
    for (Freq n = lo; n <= hi; n *= 2) v.push_back(n);
    return v;
}

const std::vector<KLPair> kCorpusPairs{{1, 1}, {1, 2}, {2, 1}, {-1, 2}, {3, -1}, {-2, 3}};

std::vector<double> read_grid(const json& v)
{
    if (v.is_array()) return v.get<std::vector<double>>();
    if (v.is_object()) {
        const double from = v.at("from").get<double>(), to = v.at("to").get<double>();
        const double step = v.value("step", 1.0);
        if (!(step > 0)) throw DomainError("grid step must be positive");
        std::vector<double> out;
        for (long i = 0; from + static_cast<double>(i) * step <= to + 1e-12; ++i)
            out.push_back(from + static_cast<double>(i) * step);
        return out;
    }
    throw DomainError("a grid is a list of numbers or {\"from\", \"to\", \"step\"}");
}

std::vector<KLPair> read_pairs(const json& v)
{
    std::vector<KLPair> out;
    for (const auto& p : v) {
        if (!p.is_array() || p.size() != 2) throw DomainError("(k, l) pairs are two-element lists");
        out.push_back({p[0].get<Freq>(), p[1].get<Freq>()});
    }
    return out;
}

json write_pairs(const std::vector<KLPair>& pairs)
{
    json out = json::array();
    for (const auto& p : pairs) out.push_back({p.k, p.l});
    return out;
}

}  // namespace

const std::vector<ExperimentId>& all_experiments()
{
    static const std::vector<ExperimentId> ids = [] {
        std::vector<ExperimentId> v;
        for (const auto& [id, name] : kNames) v.push_back(id);
        return v;
    }();
    return ids;
}

std::string to_string(ExperimentId id)
{
    for (const auto& [i, name] : kNames)
        if (i == id) return name;
    return "unknown";
}

std::optional<ExperimentId> parse_experiment_id(std::string_view name)
{
    for (const auto& [id, n] : kNames)
        if (name == n) return id;
    return std::nullopt;
}

std::string describe(ExperimentId id)
{
    switch (id) {
    case ExperimentId::identity_suite:
        return "exact truncation identities, multilinear reduction, link identity and translation law";
    case ExperimentId::bht_consistency: return "Fourier multipliers vs p.v. quadrature for the bilinear transforms";
    case ExperimentId::truncation_uniformity: return "truncated/full 2->2 section norms across gamma sweeps";
    case ExperimentId::log_growth: return "S_N^+ on Lipschitz spaces, Lebesgue constants, beta = -1 sections";
    case ExperimentId::constant_stability: return "bilinear transform ratios across mu and compact k/l bands";
    case ExperimentId::lemma_lipschitz_sweep: return "norms of reduced, modulated symbols";
    }
    return "";
}

ExperimentConfig default_config(ExperimentId id)
{
    ExperimentConfig c;
    c.id = id;
    switch (id) {
    case ExperimentId::identity_suite:
        c.seeds = 50;
        c.max_degree = 32;
        c.betas = {-3, -2, -1.5, -0.5, 0.5, 1, 2, 3};
        c.kl_pairs = kCorpusPairs;
        c.arity = 3;
        break;
    case ExperimentId::bht_consistency:
        c.seeds = 1;
        c.max_degree = 32;
        c.kl_pairs = kCorpusPairs;
        c.quadrature_grid = 1 << 14;
        break;
    case ExperimentId::truncation_uniformity:
        c.seeds = 4;
        c.section_size = 512;
        c.max_block = 9;
        c.alphas = {0.0};
        c.betas = {-3, -2, -0.5, 0.5, 1, 2};
        c.gammas = integer_range(-64, 64);
        break;
    case ExperimentId::log_growth:
        c.alphas = {0.5};
        c.ns = powers_of_two(8, 1024);
        c.lebesgue_ns = powers_of_two(1, 1 << 12);
        c.section_size = 512;
        c.max_block = 9;
        break;
    case ExperimentId::constant_stability: {
        c.seeds = 24;
        c.max_degree = 16;
        c.max_block = 5;
        c.alphas = {0.5};
        c.q = 1;
        c.p = 2;
        for (Freq l = 1; l <= 8; ++l)
            for (Freq k = -3 * l; k <= 3 * l; ++k) {
                const double r = static_cast<double>(k) / static_cast<double>(l);
                const bool in_band = (r >= -3 && r <= -1.2) || (r >= -0.8 && r <= -0.1) || (r >= 0.1 && r <= 3);
                if (in_band && std::gcd(k, l) == 1) c.kl_pairs.push_back({k, l});
            }
        c.exploratory_pairs = {{-9, 10}, {-11, 10}};
        break;
    }
    case ExperimentId::lemma_lipschitz_sweep:
        c.seeds = 20;
        c.alphas = {0.5, 1.0};
        c.ns = powers_of_two(8, 1024);
        c.m_factors = {0, 0.5, 1, 4};
        c.max_block = 11;
        break;
    }
    return c;
}

void ExperimentConfig::validate() const
{
    auto fail = [this](const std::string& what) {
        throw DomainError(to_string(id) + ": " + what);
    };
    if (seeds < 1) fail("seeds must be at least 1");
    if (max_degree < 0 || max_degree > 4096) fail("max_degree must lie in [0, 4096]");
    if (max_block < 0 || max_block > 14) fail("max_block must lie in [0, 14]");

    switch (id) {
    case ExperimentId::identity_suite:
        if (betas.empty()) fail("the multilinear slope grid is empty");
        if (kl_pairs.empty()) fail("the (k, l) grid is empty");
        if (arity < 1 || arity > 3) fail("arity must lie in [1, 3]");
        for (const auto& p : kl_pairs)
            if (p.l == 0 || p.k == -p.l) fail("(k, l) pairs need l != 0 and k != -l");
        break;
    case ExperimentId::bht_consistency:
        if (kl_pairs.empty()) fail("the (k, l) grid is empty");
        if (!is_power_of_two(quadrature_grid) || quadrature_grid < 64 || quadrature_grid > (1u << 16))
            fail("quadrature_grid must be a power of two in [64, 65536]");
        for (const auto& p : kl_pairs)
            if (p.l == 0 || p.k == -p.l) fail("(k, l) pairs need l != 0 and k != -l");
        break;
    case ExperimentId::truncation_uniformity:
        if (betas.empty() || gammas.empty()) fail("beta and gamma grids must be non-empty");
        for (double b : betas)
            if (std::abs(b + 1) < 0.1 || std::abs(b) < 0.1)
                fail("beta = " + std::to_string(b) + " lies within 0.1 of -1 or 0");
        if (alphas.size() != 1 || alphas[0] < 0) fail("exactly one nonnegative alpha is required");
        if (section_size < 2 || section_size > kMaxSection) fail("section_size must lie in [2, 4096]");
        break;
    case ExperimentId::log_growth:
        if (ns.size() < 2 || lebesgue_ns.empty()) fail("N grids must be non-empty (two points for a fit)");
        for (Freq n : ns)
            if (n < 8 || !is_power_of_two(static_cast<std::size_t>(n))) fail("N must be 4 * 2^n with n >= 1");
        if (alphas.empty() || alphas[0] <= 0) fail("a positive alpha is required");
        if (section_size < 2 || section_size > kMaxSection) fail("section_size must lie in [2, 4096]");
        break;
    case ExperimentId::constant_stability:
        if (kl_pairs.empty()) fail("the (k, l) grid is empty");
        for (const auto& p : kl_pairs) {
            if (p.l == 0 || p.k == -p.l) fail("(k, l) pairs need l != 0 and k != -l");
            if (std::abs(p.l) > 64) fail("|l| must not exceed 64");
        }
        if (alphas.empty() || alphas[0] <= 0) fail("a positive alpha is required");
        if (!(p > 0 && q > 0)) fail("p and q must be positive");
        break;
    case ExperimentId::lemma_lipschitz_sweep:
        if (ns.empty() || m_factors.empty() || alphas.empty()) fail("N, M and alpha grids must be non-empty");
        for (double a : alphas)
            if (!(a > 0)) fail("alpha must be positive");
        for (double m : m_factors)
            if (m < 0 || m > 64) fail("M factors must lie in [0, 64]");
        for (Freq n : ns)
            if (n < 0 || n > (1 << 16)) fail("N must lie in [0, 65536]");
        break;
    }
}

json to_json(const ExperimentConfig& c)
{
    return {{"experiment", to_string(c.id)},
            {"seed", c.seed},
            {"seeds", c.seeds},
            {"max_degree", c.max_degree},
            {"max_block", c.max_block},
            {"section_size", c.section_size},
            {"quadrature_grid", c.quadrature_grid},
            {"betas", c.betas},
            {"gammas", c.gammas},
            {"kl_pairs", write_pairs(c.kl_pairs)},
            {"exploratory_pairs", write_pairs(c.exploratory_pairs)},
            {"mu_policy", c.mu_policy == MuPolicy::all ? "all" : "zero"},
            {"alphas", c.alphas},
            {"p", c.p},
            {"q", c.q},
            {"arity", c.arity},
            {"ns", c.ns},
            {"lebesgue_ns", c.lebesgue_ns},
            {"m_factors", c.m_factors},
            {"spot_checks", c.spot_checks},
            {"beta_zero_control", c.beta_zero_control},
            {"svg", c.svg}};
}

ExperimentConfig config_from_json(const json& j, std::optional<ExperimentId> id)
{
    if (!j.is_object()) throw DomainError("a config file must hold a JSON object");
    if (!id) {
        if (!j.contains("experiment")) throw DomainError("config does not name an experiment");
        id = parse_experiment_id(j.at("experiment").get<std::string>());
        if (!id) throw DomainError("unknown experiment " + j.at("experiment").dump());
    } else if (j.contains("experiment") && parse_experiment_id(j.at("experiment").get<std::string>()) != id) {
        throw DomainError("config is for " + j.at("experiment").dump() + ", not " + to_string(*id));
    }

    ExperimentConfig c = default_config(*id);
    for (const auto& [key, v] : j.items()) {
        if (key == "experiment") continue;
        else if (key == "seed") c.seed = v.get<std::uint64_t>();
        else if (key == "seeds") c.seeds = v.get<int>();
        else if (key == "max_degree") c.max_degree = v.get<Freq>();
        else if (key == "max_block") c.max_block = v.get<int>();
        else if (key == "section_size") c.section_size = v.get<long>();
        else if (key == "quadrature_grid") c.quadrature_grid = v.get<std::size_t>();
        else if (key == "betas") c.betas = read_grid(v);
        else if (key == "gammas") c.gammas = read_grid(v);
        else if (key == "kl_pairs") c.kl_pairs = read_pairs(v);
        else if (key == "exploratory_pairs") c.exploratory_pairs = read_pairs(v);
        else if (key == "mu_policy") {
            const auto s = v.get<std::string>();
            if (s != "all" && s != "zero") throw DomainError("mu_policy is \"all\" or \"zero\"");
            c.mu_policy = s == "all" ? MuPolicy::all : MuPolicy::zero;
        }
        else if (key == "alphas") c.alphas = read_grid(v);
        else if (key == "p") c.p = v.get<double>();
        else if (key == "q") c.q = v.get<double>();
        else if (key == "arity") c.arity = v.get<int>();
        else if (key == "ns") c.ns = v.get<std::vector<Freq>>();
        else if (key == "lebesgue_ns") c.lebesgue_ns = v.get<std::vector<Freq>>();
        else if (key == "m_factors") c.m_factors = read_grid(v);
        else if (key == "spot_checks") c.spot_checks = v.get<bool>();
        else if (key == "beta_zero_control") c.beta_zero_control = v.get<bool>();
        else if (key == "svg") c.svg = v.get<bool>();
        else throw DomainError("unknown config key \"" + key + "\"");
    }
    c.validate();
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path, std::optional<ExperimentId> id)
{
    std::ifstream is(path);
    if (!is) throw Error("cannot read config " + path.string());
    return config_from_json(json::parse(is, nullptr, true, true), id);
}

unsigned thread_count()
{
    if (const char* env = std::getenv("HANKEL_LAB_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n >= 1) return static_cast<unsigned>(std::min(n, 256L));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace hankel::lab
