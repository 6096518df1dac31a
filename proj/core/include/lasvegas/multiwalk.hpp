#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lasvegas/empirical.hpp"
#include "lasvegas/min_transform.hpp"
#include "lasvegas/solver.hpp"

namespace lasvegas {

/// Nonparametric estimate of E[min of n draws] by resampling.
struct BootstrapEstimate {
    int n = 1;
    double mean_min = 0.0;
    double std_error = 0.0;
    std::size_t resamples = 0;
};

/// Repeats `resamples` times: draw n values uniformly with replacement
/// from the sample and record the minimum. Deterministic given seed
/// (each n gets its own derived substream).
BootstrapEstimate bootstrap_min(const EmpiricalSample& sample, int n,
                                std::size_t resamples, std::uint64_t seed);

/// Empirical speedup curve: sample mean over bootstrapped minimum mean,
/// one point per core count. No limit field. Per-point estimates are
/// appended to `details` when given.
SpeedupCurve bootstrap_speedup(const EmpiricalSample& sample, const std::vector<int>& cores,
                               std::size_t resamples, std::uint64_t seed,
                               std::vector<BootstrapEstimate>* details = nullptr);

/// One first-wins parallel execution of the solver.
struct ParallelRunRecord {
    int workers = 0;
    int winner_worker = -1;
    std::uint64_t winner_seed = 0;
    std::uint64_t winner_iterations = 0;
    double wall_time = 0.0;  // seconds, whole parallel run
    std::uint64_t total_iterations_all_workers = 0;
    std::vector<std::string> worker_failures;
};

/// Runs `workers` independent solver instances concurrently, worker i
/// seeded with params.rng_seed + i. Workers share only a winning-
/// iteration bound: each stops once its own iteration count reaches the
/// best announced count, so winner_iterations equals the minimum of the
/// sequential iteration counts over the same seeds, exactly. A worker
/// failure is recorded and the rest continue; if every worker fails the
/// call throws.
ParallelRunRecord parallel_solve(const PermutationProblem& problem,
                                 const SolverParams& params, int workers);

struct ParallelSpeedup {
    double mean_speedup = 0.0;
    std::pair<double, double> confidence_interval{0.0, 0.0};  // 95%, normal approx
    double baseline_mean_iterations = 0.0;
    double mean_winner_iterations = 0.0;
    std::vector<ParallelRunRecord> trials;
};

using TrialProgress =
    std::function<void(std::size_t done, std::size_t total, const ParallelRunRecord& last)>;

/// Measured speedup over `trials` parallel runs (trial t uses base seed
/// params.rng_seed + t * workers): baseline mean iterations divided by
/// the mean winner iteration count, with a 95% normal-approximation
/// confidence interval. The baseline sample must be in iterations.
ParallelSpeedup measure_parallel_speedup(const PermutationProblem& problem,
                                         const SolverParams& params, int workers,
                                         std::size_t trials, const EmpiricalSample& baseline,
                                         const TrialProgress& progress = {});

/// The same statistics computed from already-collected trials.
ParallelSpeedup summarize_parallel_speedup(std::vector<ParallelRunRecord> trials,
                                           const EmpiricalSample& baseline);

}  // namespace lasvegas
