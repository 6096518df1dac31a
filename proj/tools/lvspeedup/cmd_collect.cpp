#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "lasvegas/errors.hpp"
#include "lasvegas/io.hpp"
#include "lasvegas/solver.hpp"
#include "util.hpp"

namespace lvspeedup {

namespace {

struct CollectOptions {
    std::string problem;
    int n = 0;
    std::size_t runs = 0;
    std::uint64_t seed = 1;
    lasvegas::SolverParams params;
    unsigned jobs = 1;
    std::string output = "runs.csv";
    bool quiet = false;
};

void run_collect(const CollectOptions& opt) {
    using namespace lasvegas;

    PermutationProblem problem = problem_from_flags(opt.problem, opt.n);
    SolverParams params = opt.params;
    params.rng_seed = opt.seed;

    CollectProgress progress;
    if (!opt.quiet) {
        progress = [&](std::size_t done, std::size_t total, const RunSample& last) {
            std::fprintf(stderr, "\r[%zu/%zu] last: seed=%llu iterations=%llu", done, total,
                         static_cast<unsigned long long>(last.seed),
                         static_cast<unsigned long long>(last.iterations));
            if (done == total) std::fprintf(stderr, "\n");
        };
    }

    CollectedRuns collected = collect(problem, params, opt.runs, opt.jobs, progress);

    io::MetadataList metadata = {
        {"problem", opt.problem},
        {"n", std::to_string(opt.n)},
        {"runs", std::to_string(opt.runs)},
        {"seed", std::to_string(opt.seed)},
        {"jobs", std::to_string(opt.jobs)},
    };
    for (auto& kv : solver_params_metadata(params)) metadata.push_back(kv);

    std::ostringstream csv;
    io::write_runs_csv(csv, collected.runs, metadata);
    io::write_file(opt.output, csv.str());

    std::string label = problem.name();
    print_sample_summary(collected.iteration_sample(label));
    print_sample_summary(collected.wall_time_sample(label));
    std::printf("wrote %zu runs to %s\n", collected.runs.size(), opt.output.c_str());
}

}  // namespace

void register_collect(CLI::App& app) {
    auto opt = std::make_shared<CollectOptions>();
    CLI::App* cmd =
        app.add_subcommand("collect", "Run the solver sequentially and record runtimes");

    cmd->add_option("--problem", opt->problem, "magic-square | all-interval | costas")
        ->required()
        ->check(CLI::IsMember({"magic-square", "all-interval", "costas"}));
    cmd->add_option("--n", opt->n, "Problem order")->required()->check(CLI::Range(2, 100000));
    cmd->add_option("--runs", opt->runs, "Number of independent runs")
        ->required()
        ->check(CLI::Range(std::size_t{1}, std::size_t{10000000}));
    cmd->add_option("--seed", opt->seed, "Base RNG seed; run i uses seed+i");
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
    cmd->add_option("--jobs", opt->jobs, "Worker threads for independent runs")
        ->check(CLI::Range(1u, 1024u));
    cmd->add_option("--output,-o", opt->output, "Runs CSV path");
    cmd->add_flag("--quiet", opt->quiet, "Suppress per-run progress on stderr");

    cmd->callback([opt] { run_collect(*opt); });
}

}  // namespace lvspeedup
