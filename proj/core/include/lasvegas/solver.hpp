#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "lasvegas/empirical.hpp"

namespace lasvegas {

enum class ProblemKind { MagicSquare, AllInterval, Costas };

/// One of the three permutation benchmark models.
///   MagicSquare: permutation of {1..N^2} on an NxN grid, every row,
///                column and main diagonal summing to N(N^2+1)/2.
///   AllInterval: permutation of {0..N-1} whose consecutive absolute
///                differences are a permutation of {1..N-1}.
///   Costas:      permutation of {1..N} with all difference-triangle
///                rows free of duplicates.
struct PermutationProblem {
    ProblemKind kind;
    int n;

    int variable_count() const;
    std::string name() const;  // e.g. "magic-square 10"
};

using Cost = long long;

struct ConstraintEval {
    Cost total = 0;
    std::vector<Cost> per_variable;
};

/// Full recomputation of the constraint errors and their projection onto
/// the variables. Rejects non-permutation assignments.
ConstraintEval constraint_errors(const PermutationProblem& problem,
                                 const std::vector<int>& assignment);

/// Independent zero-knowledge checker: recomputes every constraint from
/// scratch, sharing no state with the search.
bool check_solution(const PermutationProblem& problem, const std::vector<int>& assignment);

/// Incrementally maintained evaluation of a configuration under swap
/// moves. This is the state the solver iterates on; exposed so tests can
/// verify incremental costs against full recomputation.
class SearchState {
public:
    virtual ~SearchState() = default;

    virtual Cost total_cost() const = 0;
    virtual Cost variable_error(int i) const = 0;
    /// Change of total cost if positions a and b were swapped.
    virtual Cost swap_delta(int a, int b) const = 0;
    virtual void apply_swap(int a, int b) = 0;
    virtual const std::vector<int>& assignment() const = 0;
    /// Replace the whole assignment (restart / reset bookkeeping).
    virtual void reassign(std::vector<int> fresh) = 0;
};

std::unique_ptr<SearchState> make_search_state(const PermutationProblem& problem,
                                               std::vector<int> assignment);

struct SolverParams {
    int tabu_tenure = 10;         // iterations a variable stays frozen
    double reset_fraction = 0.25; // share of variables re-randomized on reset
    int reset_trigger = 0;        // tabu-variable count triggering a reset; 0 = max(1, V/10)
    std::uint64_t max_iterations = 0;  // per-restart limit; 0 = never restart
    std::uint64_t rng_seed = 0;
};

struct RunSample {
    std::uint64_t seed = 0;
    std::uint64_t iterations = 0;
    double wall_time = 0.0;  // seconds
    bool solved = false;
    PermutationProblem problem{ProblemKind::Costas, 0};
};

/// External stop condition polled once per iteration.
class StopSignal {
public:
    virtual ~StopSignal() = default;
    virtual bool stop_requested(std::uint64_t iterations_done) const = 0;
};

/// Adaptive Search: repair the worst non-frozen variable with the
/// min-conflict swap, freeze it when no move helps, partially reset when
/// too many variables are frozen, restart from scratch past
/// max_iterations. Runs until the cost hits zero (checker-verified)
/// or `stop` fires; without a stop signal and with the default
/// max_iterations the run is unbounded, as a Las Vegas solver should be.
RunSample solve(const PermutationProblem& problem, const SolverParams& params,
                const StopSignal* stop = nullptr);

struct CollectedRuns {
    std::vector<RunSample> runs;

    EmpiricalSample iteration_sample(const std::string& label) const;
    EmpiricalSample wall_time_sample(const std::string& label) const;
};

using CollectProgress =
    std::function<void(std::size_t done, std::size_t total, const RunSample& last)>;

/// `runs` independent solves with seeds seed, seed+1, ... Runs execute on
/// `jobs` threads; per-run results are identical to a sequential pass
/// because each run owns its seed.
CollectedRuns collect(const PermutationProblem& problem, const SolverParams& params,
                      std::size_t runs, unsigned jobs = 1,
                      const CollectProgress& progress = {});

}  // namespace lasvegas
