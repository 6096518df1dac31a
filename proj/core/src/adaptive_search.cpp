#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "lasvegas/errors.hpp"
#include "lasvegas/solver.hpp"
#include "lasvegas/special.hpp"

namespace lasvegas {

namespace {

using special::uniform_index;

void validate_problem(const PermutationProblem& problem) {
    int min_n = problem.kind == ProblemKind::MagicSquare ? 3 : 2;
    if (problem.n < min_n) {
        throw invalid_parameters(problem.name() + ": order too small");
    }
}

void validate_params(const SolverParams& params) {
    if (params.tabu_tenure < 0) {
        throw invalid_parameters("solver: tabu_tenure must be nonnegative");
    }
    if (!(params.reset_fraction > 0.0 && params.reset_fraction <= 1.0)) {
        throw invalid_parameters("solver: reset_fraction must lie in (0, 1]");
    }
    if (params.reset_trigger < 0) {
        throw invalid_parameters("solver: reset_trigger must be positive (or 0 for auto)");
    }
}

std::vector<int> random_permutation(const PermutationProblem& problem,
                                    std::mt19937_64& rng) {
    int v = problem.variable_count();
    int lo = problem.kind == ProblemKind::AllInterval ? 0 : 1;
    std::vector<int> a(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) a[static_cast<std::size_t>(i)] = lo + i;
    for (int i = v - 1; i > 0; --i) {
        auto j = static_cast<std::size_t>(
            uniform_index(rng, static_cast<std::uint64_t>(i) + 1));
        std::swap(a[static_cast<std::size_t>(i)], a[j]);
    }
    return a;
}

// Shuffle the values held by a random subset of positions: the reset
// transition, kept permutation-safe.
void partial_reshuffle(std::vector<int>& a, double fraction, std::mt19937_64& rng) {
    int v = static_cast<int>(a.size());
    int k = std::max(2, static_cast<int>(std::lround(fraction * v)));
    k = std::min(k, v);

    std::vector<int> positions(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) positions[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i) {
        auto j = i + static_cast<int>(uniform_index(
                         rng, static_cast<std::uint64_t>(v - i)));
        std::swap(positions[static_cast<std::size_t>(i)],
                  positions[static_cast<std::size_t>(j)]);
    }
    for (int i = k - 1; i > 0; --i) {
        auto j = static_cast<std::size_t>(
            uniform_index(rng, static_cast<std::uint64_t>(i) + 1));
        std::swap(a[static_cast<std::size_t>(positions[static_cast<std::size_t>(i)])],
                  a[static_cast<std::size_t>(positions[j])]);
    }
}

}  // namespace

RunSample solve(const PermutationProblem& problem, const SolverParams& params,
                const StopSignal* stop) {
    validate_problem(problem);
    validate_params(params);

    const auto start = std::chrono::steady_clock::now();
    auto finish = [&](std::uint64_t iterations, bool solved) {
        RunSample r;
        r.seed = params.rng_seed;
        r.iterations = iterations;
        r.wall_time = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start).count();
        r.solved = solved;
        r.problem = problem;
        return r;
    };

    const int v = problem.variable_count();
    const int trigger = params.reset_trigger > 0
                            ? params.reset_trigger
                            : std::max(1, v / 10);
    std::mt19937_64 rng(params.rng_seed);

    auto state = make_search_state(problem, random_permutation(problem, rng));
    std::vector<std::uint64_t> tabu_until(static_cast<std::size_t>(v), 0);
    std::uint64_t iterations = 0;
    std::uint64_t since_restart = 0;

    auto verified = [&] {
        if (!check_solution(problem, state->assignment())) {
            throw std::logic_error(problem.name() +
                                   ": zero-cost configuration failed the independent checker");
        }
        return true;
    };

    if (state->total_cost() == 0) return finish(iterations, verified());

    while (true) {
        if (stop != nullptr && stop->stop_requested(iterations)) {
            return finish(iterations, false);
        }
        if (params.max_iterations > 0 && since_restart >= params.max_iterations) {
            state->reassign(random_permutation(problem, rng));
            std::fill(tabu_until.begin(), tabu_until.end(), 0);
            since_restart = 0;
            if (state->total_cost() == 0) return finish(iterations, verified());
        }

        // culprit: the non-frozen variable with the worst projected error,
        // ties broken uniformly at random
        int culprit = -1;
        Cost worst = -1;
        std::uint64_t ties = 0;
        for (int i = 0; i < v; ++i) {
            if (tabu_until[static_cast<std::size_t>(i)] > iterations) continue;
            Cost e = state->variable_error(i);
            if (e > worst) {
                worst = e;
                culprit = i;
                ties = 1;
            } else if (e == worst) {
                ++ties;
                if (uniform_index(rng, ties) == 0) culprit = i;
            }
        }

        bool reset_now = false;
        if (culprit < 0) {
            reset_now = true;  // every variable frozen: escape as a reset would
        } else {
            // min-conflict over permutation-preserving swaps of the culprit
            int best_pos = -1;
            Cost best_delta = 0;
            std::uint64_t move_ties = 0;
            for (int p = 0; p < v; ++p) {
                if (p == culprit) continue;
                Cost d = state->swap_delta(culprit, p);
                if (best_pos < 0 || d < best_delta) {
                    best_delta = d;
                    best_pos = p;
                    move_ties = 1;
                } else if (d == best_delta) {
                    ++move_ties;
                    if (uniform_index(rng, move_ties) == 0) best_pos = p;
                }
            }

            if (best_delta <= 0) {
                state->apply_swap(culprit, best_pos);
            }
            if (best_delta >= 0) {
                // sideways moves are taken but freeze the culprit, so a
                // plateau cannot be walked in circles; a strictly worse
                // best move freezes without moving
                tabu_until[static_cast<std::size_t>(culprit)] =
                    iterations + 1 + static_cast<std::uint64_t>(params.tabu_tenure);
            }
            ++iterations;
            ++since_restart;
            if (state->total_cost() == 0) return finish(iterations, verified());
            if (best_delta >= 0) {
                int frozen = 0;
                for (int i = 0; i < v; ++i) {
                    if (tabu_until[static_cast<std::size_t>(i)] > iterations) ++frozen;
                }
                if (frozen >= trigger) reset_now = true;
            }
        }

        if (reset_now) {
            std::vector<int> a = state->assignment();
            partial_reshuffle(a, params.reset_fraction, rng);
            state->reassign(std::move(a));
            std::fill(tabu_until.begin(), tabu_until.end(), 0);
            if (state->total_cost() == 0) return finish(iterations, verified());
        }
    }
}

EmpiricalSample CollectedRuns::iteration_sample(const std::string& label) const {
    std::vector<double> v;
    v.reserve(runs.size());
    for (const RunSample& r : runs) v.push_back(static_cast<double>(r.iterations));
    return EmpiricalSample(std::move(v), Unit::iterations, label);
}

EmpiricalSample CollectedRuns::wall_time_sample(const std::string& label) const {
    std::vector<double> v;
    v.reserve(runs.size());
    for (const RunSample& r : runs) v.push_back(r.wall_time);
    return EmpiricalSample(std::move(v), Unit::seconds, label);
}

CollectedRuns collect(const PermutationProblem& problem, const SolverParams& params,
                      std::size_t runs, unsigned jobs, const CollectProgress& progress) {
    validate_problem(problem);
    validate_params(params);
    if (runs == 0) throw invalid_parameters("collect: runs must be positive");
    if (jobs == 0) jobs = 1;

    CollectedRuns out;
    out.runs.resize(runs);

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= runs) return;
            try {
                SolverParams p = params;
                p.rng_seed = params.rng_seed + i;
                out.runs[i] = solve(problem, p);
                std::size_t d = done.fetch_add(1) + 1;
                if (progress) {
                    std::lock_guard<std::mutex> lock(progress_mutex);
                    progress(d, runs, out.runs[i]);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace lasvegas
