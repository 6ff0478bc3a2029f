#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "hankel/lab/config.hpp"
#include "hankel/lab/report.hpp"

namespace hankel::lab {

/// Gate thresholds applied by the experiment summaries.
namespace thresholds {
inline constexpr double identity_residual = 1e-10;
inline constexpr double quadrature_error = 1e-6;
inline constexpr double gamma_slope = 0.05;
inline constexpr double beta_zero_excess = 1e-10;
inline constexpr double mu_spread = 0.10;
inline constexpr double band_ratio = 10;
inline constexpr double band_trend = 0.25;   // slope of log sup vs log(|k| + |l|)
inline constexpr double lemma_sup = 10;
inline constexpr double lemma_trend = 0.1;   // slope of log sup vs log N and vs log(1 + M/N)
inline constexpr double lebesgue_closed_form = 1e-6;
inline constexpr double lebesgue_ratio = 0.05;
inline constexpr double growth_r2 = 0.9;
}  // namespace thresholds

ExperimentReport run_experiment(const ExperimentConfig& config);

ExperimentReport run_identity_suite(const ExperimentConfig& config);
ExperimentReport run_bht_consistency(const ExperimentConfig& config);
ExperimentReport run_truncation_uniformity(const ExperimentConfig& config);
ExperimentReport run_log_growth(const ExperimentConfig& config);
ExperimentReport run_constant_stability(const ExperimentConfig& config);
ExperimentReport run_lemma_lipschitz_sweep(const ExperimentConfig& config);

/// Recomputes summary, checks and charts of a report from its rows and config alone.
void summarize(ExperimentReport& report);

///
/// Calls fn(i) for i in [0, n) on thread_count() workers. Callers write results
/// into slot i, so output order never depends on scheduling. The first
/// exception thrown by a task is rethrown after all workers stop.
///
template <typename F>
void parallel_for(std::size_t n, F&& fn)
{
    const std::size_t workers = std::min<std::size_t>(thread_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace hankel::lab
