#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hankel/trig_poly.hpp"

namespace hankel::lab {

using json = nlohmann::json;

enum class ExperimentId {
    identity_suite,
    bht_consistency,
    truncation_uniformity,
    log_growth,
    constant_stability,
    lemma_lipschitz_sweep
};

const std::vector<ExperimentId>& all_experiments();
std::string to_string(ExperimentId id);
std::optional<ExperimentId> parse_experiment_id(std::string_view name);
std::string describe(ExperimentId id);

struct KLPair {
    Freq k = 1;
    Freq l = 1;

    friend bool operator==(const KLPair&, const KLPair&) = default;
};

enum class MuPolicy { all, zero };

///
/// Parameters of one experiment. Fields that an experiment does not use are
/// ignored by it but still echoed into its report.
///
struct ExperimentConfig {
    ExperimentId id = ExperimentId::identity_suite;
    std::uint64_t seed = 1;
    int seeds = 50;                        // random instances per grid point
    Freq max_degree = 32;                  // degree budget for random inputs
    int max_block = 9;                     // top dyadic block of random symbols
    long section_size = 512;               // M = N of finite sections
    std::size_t quadrature_grid = 1 << 14;
    std::vector<double> betas;             // truncation slopes (identity suite: multilinear nu)
    std::vector<double> gammas;            // truncation offsets
    std::vector<KLPair> kl_pairs;
    std::vector<KLPair> exploratory_pairs; // reported, never gated
    MuPolicy mu_policy = MuPolicy::all;
    std::vector<double> alphas;
    double p = 2;
    double q = 2;
    int arity = 3;                         // largest multilinear order
    std::vector<Freq> ns;                  // N sweep
    std::vector<Freq> lebesgue_ns;
    std::vector<double> m_factors;         // M = factor * N
    bool spot_checks = true;               // (q, p) = (2/3, 2) ratio searches
    bool beta_zero_control = true;         // adds the beta = 0 rows
    bool svg = true;

    /// Throws DomainError on empty grids or budgets beyond the library guards.
    void validate() const;
};

/// Settings used by the acceptance runs.
ExperimentConfig default_config(ExperimentId id);

///
/// Reads a JSON object on top of default_config(id). The id is taken from the
/// "experiment" key when `id` is empty. Keys that are not recognised are an
/// error, so typos do not silently fall back to defaults.
///
ExperimentConfig config_from_json(const json& j, std::optional<ExperimentId> id = std::nullopt);
ExperimentConfig load_config(const std::filesystem::path& path, std::optional<ExperimentId> id = std::nullopt);
json to_json(const ExperimentConfig& c);

/// Worker threads for experiment grids: HANKEL_LAB_THREADS, else the hardware count.
unsigned thread_count();

}  // namespace hankel::lab
