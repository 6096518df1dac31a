#include <cstdio>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "lasvegas/errors.hpp"
#include "lasvegas/io.hpp"
#include "lasvegas/multiwalk.hpp"
#include "util.hpp"

namespace lvspeedup {

namespace {

struct SimulateOptions {
    std::string input;
    std::string unit = "iterations";
    std::string cores_spec;
    int cores_upto_value = 0;
    std::size_t resamples = 100000;
    std::uint64_t seed = 1;
    std::string output = "bootstrap.csv";
};

void run_simulate(const SimulateOptions& opt) {
    using namespace lasvegas;

    if (opt.cores_spec.empty() == (opt.cores_upto_value == 0)) {
        throw data_error("simulate: exactly one of --cores / --cores-upto is required");
    }
    std::vector<int> cores = opt.cores_spec.empty() ? cores_upto(opt.cores_upto_value)
                                                    : parse_cores(opt.cores_spec);

    std::istringstream csv(io::read_file(opt.input));
    Unit unit = opt.unit == "seconds" ? Unit::seconds : Unit::iterations;
    EmpiricalSample sample = io::read_sample_csv(csv, unit, opt.input);

    std::vector<BootstrapEstimate> details;
    SpeedupCurve curve = bootstrap_speedup(sample, cores, opt.resamples, opt.seed, &details);

    double mean = sample.mean();
    std::vector<io::BootstrapRow> rows;
    for (std::size_t i = 0; i < details.size(); ++i) {
        const BootstrapEstimate& est = details[i];
        // s.e. of mean/mean_min, first order in the minimum's s.e.
        double se = mean * est.std_error / (est.mean_min * est.mean_min);
        rows.push_back({est.n, curve.points[i].speedup, se});
    }

    io::MetadataList metadata = {
        {"input", opt.input},
        {"unit", unit_name(unit)},
        {"resamples", std::to_string(opt.resamples)},
        {"seed", std::to_string(opt.seed)},
        {"sample_size", std::to_string(sample.size())},
        {"sample_mean", io::format_double(mean)},
    };
    std::ostringstream out;
    io::write_bootstrap_csv(out, rows, metadata);
    io::write_file(opt.output, out.str());

    for (const auto& r : rows) {
        std::printf("n = %-5d bootstrap speedup = %-10.5g (s.e. %.3g)\n", r.n, r.speedup,
                    r.std_error);
    }
    std::printf("wrote %s\n", opt.output.c_str());
}

}  // namespace

void register_simulate(CLI::App& app) {
    auto opt = std::make_shared<SimulateOptions>();
    CLI::App* cmd = app.add_subcommand(
        "simulate", "Bootstrap the multi-walk speedup from an empirical sample");

    cmd->add_option("--input,-i", opt->input, "Runs CSV with the observation column")
        ->required();
    cmd->add_option("--unit", opt->unit, "Observation column")
        ->check(CLI::IsMember({"iterations", "seconds"}));
    cmd->add_option("--cores", opt->cores_spec, "Comma-separated core counts");
    cmd->add_option("--cores-upto", opt->cores_upto_value, "Simulate for n = 1..K")
        ->check(CLI::Range(1, 100000));
    cmd->add_option("--resamples", opt->resamples, "Bootstrap resamples per core count")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000000}));
    cmd->add_option("--seed", opt->seed, "Bootstrap RNG seed");
    cmd->add_option("--output,-o", opt->output, "Bootstrap CSV path");

    cmd->callback([opt] { run_simulate(*opt); });
}

}  // namespace lvspeedup
