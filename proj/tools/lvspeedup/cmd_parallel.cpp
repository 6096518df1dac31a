#include <cstdio>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "lasvegas/io.hpp"
#include "lasvegas/multiwalk.hpp"
#include "util.hpp"

namespace lvspeedup {

namespace {

struct ParallelOptions {
    std::string problem;
    int n = 0;
    int workers = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 1;
    lasvegas::SolverParams params;
    std::string baseline;
    std::string output = "parallel.csv";
    bool quiet = false;
};

void run_parallel(const ParallelOptions& opt) {
    using namespace lasvegas;

    PermutationProblem problem = problem_from_flags(opt.problem, opt.n);
    SolverParams params = opt.params;
    params.rng_seed = opt.seed;

    std::optional<EmpiricalSample> baseline;
    if (!opt.baseline.empty()) {
        std::istringstream csv(io::read_file(opt.baseline));
        baseline = io::read_sample_csv(csv, Unit::iterations, opt.baseline);
    }

    std::vector<ParallelRunRecord> records;
    records.reserve(opt.trials);
    for (std::size_t t = 0; t < opt.trials; ++t) {
        SolverParams p = params;
        p.rng_seed = opt.seed + static_cast<std::uint64_t>(t) *
                                    static_cast<std::uint64_t>(opt.workers);
        records.push_back(parallel_solve(problem, p, opt.workers));
        if (!opt.quiet) {
            std::fprintf(stderr, "\r[%zu/%zu] winner: seed=%llu iterations=%llu", t + 1,
                         opt.trials,
                         static_cast<unsigned long long>(records.back().winner_seed),
                         static_cast<unsigned long long>(records.back().winner_iterations));
            if (t + 1 == opt.trials) std::fprintf(stderr, "\n");
        }
        for (const std::string& f : records.back().worker_failures) {
            std::fprintf(stderr, "warning: trial %zu: %s\n", t, f.c_str());
        }
    }

    io::MetadataList metadata = {
        {"problem", opt.problem},
        {"n", std::to_string(opt.n)},
        {"workers", std::to_string(opt.workers)},
        {"trials", std::to_string(opt.trials)},
        {"base_seed", std::to_string(opt.seed)},
    };
    for (auto& kv : solver_params_metadata(params)) metadata.push_back(kv);

    if (baseline) {
        ParallelSpeedup stats = summarize_parallel_speedup(records, *baseline);
        metadata.push_back({"baseline", opt.baseline});
        metadata.push_back(
            {"baseline_mean_iterations", io::format_double(stats.baseline_mean_iterations)});
        metadata.push_back({"measured_speedup", io::format_double(stats.mean_speedup)});
        metadata.push_back({"ci_low", io::format_double(stats.confidence_interval.first)});
        metadata.push_back({"ci_high", io::format_double(stats.confidence_interval.second)});
        std::printf("measured speedup at %d workers: %.5g  (95%% CI [%.5g, %.5g])\n",
                    opt.workers, stats.mean_speedup, stats.confidence_interval.first,
                    stats.confidence_interval.second);
    }

    std::ostringstream out;
    io::write_parallel_csv(out, records, metadata);
    io::write_file(opt.output, out.str());
    std::printf("wrote %zu trials to %s\n", records.size(), opt.output.c_str());
}

}  // namespace

void register_parallel(CLI::App& app) {
    auto opt = std::make_shared<ParallelOptions>();
    CLI::App* cmd = app.add_subcommand(
        "parallel", "Run first-solution-wins multi-walk trials of the solver");

    cmd->add_option("--problem", opt->problem, "magic-square | all-interval | costas")
        ->required()
        ->check(CLI::IsMember({"magic-square", "all-interval", "costas"}));
    cmd->add_option("--n", opt->n, "Problem order")->required()->check(CLI::Range(2, 100000));
    cmd->add_option("--workers", opt->workers, "Concurrent solver instances per trial")
        ->required()
        ->check(CLI::Range(1, 4096));
    cmd->add_option("--trials", opt->trials, "Number of parallel trials")
        ->required()
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
    cmd->add_option("--seed", opt->seed,
                    "Base seed; trial t / worker i uses seed + t*workers + i");
    cmd->add_option("--tabu", opt->params.tabu_tenure, "Tabu tenure in iterations")
        ->check(CLI::Range(0, 1000000000));
    cmd->add_option("--reset-fraction", opt->params.reset_fraction,
                    "Share of variables re-randomized on reset")
        ->check(CLI::Range(1e-9, 1.0));
    cmd->add_option("--reset-trigger", opt->params.reset_trigger,
                    "Tabu count triggering a reset (0 = variables/10)")
        ->check(CLI::Range(0, 1000000000));
    cmd->add_option("--max-iterations", opt->params.max_iterations,
                    "Restart from scratch after this many iterations (0 = never)");
    cmd->add_option("--baseline", opt->baseline,
                    "Sequential runs CSV for the measured speedup");
    cmd->add_option("--output,-o", opt->output, "Parallel trials CSV path");
    cmd->add_flag("--quiet", opt->quiet, "Suppress per-trial progress on stderr");

    cmd->callback([opt] { run_parallel(*opt); });
}

}  // namespace lvspeedup
