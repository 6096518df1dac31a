#include "lasvegas/multiwalk.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "lasvegas/errors.hpp"
#include "lasvegas/special.hpp"

namespace lasvegas {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class StopAtBound final : public StopSignal {
public:
    explicit StopAtBound(const std::atomic<std::uint64_t>* bound) : bound_(bound) {}
    bool stop_requested(std::uint64_t iterations_done) const override {
        return iterations_done >= bound_->load(std::memory_order_relaxed);
    }

private:
    const std::atomic<std::uint64_t>* bound_;
};

}  // namespace

BootstrapEstimate bootstrap_min(const EmpiricalSample& sample, int n,
                                std::size_t resamples, std::uint64_t seed) {
    if (n < 1) throw invalid_parameters("bootstrap_min: n must be >= 1");
    if (resamples < 2) {
        throw undersized_sample("bootstrap_min: need at least 2 resamples");
    }

    // derived substream per n, so curves over several n stay independent
    std::mt19937_64 rng(splitmix64(seed ^ (0x51ed2701a9b5e0cdULL * static_cast<std::uint64_t>(n))));
    const auto& v = sample.values();
    const auto size = static_cast<std::uint64_t>(v.size());

    double mean = 0.0, m2 = 0.0;  // Welford
    for (std::size_t r = 0; r < resamples; ++r) {
        double lo = std::numeric_limits<double>::infinity();
        for (int k = 0; k < n; ++k) {
            double draw = v[static_cast<std::size_t>(special::uniform_index(rng, size))];
            lo = std::min(lo, draw);
        }
        double d = lo - mean;
        mean += d / static_cast<double>(r + 1);
        m2 += d * (lo - mean);
    }

    BootstrapEstimate est;
    est.n = n;
    est.mean_min = mean;
    est.std_error = std::sqrt(m2 / static_cast<double>(resamples - 1) /
                              static_cast<double>(resamples));
    est.resamples = resamples;
    return est;
}

SpeedupCurve bootstrap_speedup(const EmpiricalSample& sample, const std::vector<int>& cores,
                               std::size_t resamples, std::uint64_t seed,
                               std::vector<BootstrapEstimate>* details) {
    if (cores.empty()) throw invalid_parameters("bootstrap_speedup: core list is empty");
    for (std::size_t i = 0; i < cores.size(); ++i) {
        if (cores[i] < 1) {
            throw invalid_parameters("bootstrap_speedup: core counts must be positive");
        }
        if (i > 0 && cores[i] <= cores[i - 1]) {
            throw invalid_parameters("bootstrap_speedup: core counts must be strictly increasing");
        }
    }

    double mean = sample.mean();
    SpeedupCurve curve;
    for (int n : cores) {
        BootstrapEstimate est = bootstrap_min(sample, n, resamples, seed);
        curve.points.push_back({n, mean / est.mean_min});
        if (details != nullptr) details->push_back(est);
    }
    return curve;
}

ParallelRunRecord parallel_solve(const PermutationProblem& problem,
                                 const SolverParams& params, int workers) {
    if (workers < 1) throw invalid_parameters("parallel_solve: workers must be >= 1");

    const auto start = std::chrono::steady_clock::now();

    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    struct Outcome {
        bool solved = false;
        std::uint64_t iterations = 0;
        std::string failure;
    };
    std::vector<Outcome> outcomes(static_cast<std::size_t>(workers));

    auto body = [&](int w) {
        Outcome& out = outcomes[static_cast<std::size_t>(w)];
        try {
            SolverParams p = params;
            p.rng_seed = params.rng_seed + static_cast<std::uint64_t>(w);
            StopAtBound stop(&best);
            RunSample r = solve(problem, p, &stop);
            out.solved = r.solved;
            out.iterations = r.iterations;
            if (r.solved) {
                std::uint64_t current = best.load();
                while (r.iterations < current &&
                       !best.compare_exchange_weak(current, r.iterations)) {
                }
            }
        } catch (const std::exception& e) {
            // record and let the remaining workers race on
            out.failure = e.what();
        }
    };

    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
        for (auto& t : pool) t.join();
    }

    ParallelRunRecord record;
    record.workers = workers;
    for (int w = 0; w < workers; ++w) {
        const Outcome& out = outcomes[static_cast<std::size_t>(w)];
        record.total_iterations_all_workers += out.iterations;
        if (!out.failure.empty()) {
            record.worker_failures.push_back("worker " + std::to_string(w) + ": " + out.failure);
        }
        if (out.solved && (record.winner_worker < 0 ||
                           out.iterations < record.winner_iterations)) {
            record.winner_worker = w;
            record.winner_iterations = out.iterations;
            record.winner_seed = params.rng_seed + static_cast<std::uint64_t>(w);
        }
    }
    record.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (record.winner_worker < 0) {
        std::string what = "parallel_solve: all workers failed";
        for (const auto& f : record.worker_failures) what += "; " + f;
        throw error(what);
    }
    return record;
}

ParallelSpeedup summarize_parallel_speedup(std::vector<ParallelRunRecord> trials,
                                           const EmpiricalSample& baseline) {
    if (trials.empty()) {
        throw invalid_parameters("summarize_parallel_speedup: no trials");
    }
    if (baseline.unit() != Unit::iterations) {
        throw invalid_parameters("summarize_parallel_speedup: baseline must be in iterations");
    }

    ParallelSpeedup result;
    result.baseline_mean_iterations = baseline.mean();

    double mean = 0.0, m2 = 0.0;
    std::size_t count = 0;
    for (const ParallelRunRecord& rec : trials) {
        double w = static_cast<double>(rec.winner_iterations);
        ++count;
        double d = w - mean;
        mean += d / static_cast<double>(count);
        m2 += d * (w - mean);
    }

    result.mean_winner_iterations = mean;
    result.mean_speedup = result.baseline_mean_iterations / mean;

    double se = count > 1 ? std::sqrt(m2 / static_cast<double>(count - 1) /
                                      static_cast<double>(count))
                          : 0.0;
    double lo_iter = mean - 1.959963984540054 * se;
    double hi_iter = mean + 1.959963984540054 * se;
    double ci_hi = lo_iter > 0.0 ? result.baseline_mean_iterations / lo_iter
                                 : std::numeric_limits<double>::infinity();
    double ci_lo = result.baseline_mean_iterations / hi_iter;
    result.confidence_interval = {ci_lo, ci_hi};
    result.trials = std::move(trials);
    return result;
}

ParallelSpeedup measure_parallel_speedup(const PermutationProblem& problem,
                                         const SolverParams& params, int workers,
                                         std::size_t trials, const EmpiricalSample& baseline,
                                         const TrialProgress& progress) {
    if (trials == 0) throw invalid_parameters("measure_parallel_speedup: trials must be positive");
    if (baseline.unit() != Unit::iterations) {
        throw invalid_parameters("measure_parallel_speedup: baseline sample must be in iterations");
    }

    std::vector<ParallelRunRecord> records;
    records.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        SolverParams p = params;
        p.rng_seed = params.rng_seed +
                     static_cast<std::uint64_t>(t) * static_cast<std::uint64_t>(workers);
        records.push_back(parallel_solve(problem, p, workers));
        if (progress) progress(t + 1, trials, records.back());
    }
    return summarize_parallel_speedup(std::move(records), baseline);
}

}  // namespace lasvegas
