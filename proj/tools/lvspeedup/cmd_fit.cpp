#include <cstdio>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "lasvegas/errors.hpp"
#include "lasvegas/fitting.hpp"
#include "lasvegas/io.hpp"
#include "util.hpp"

namespace lvspeedup {

namespace {

struct FitOptions {
    std::string input;
    std::string family = "all";
    std::string unit = "iterations";
    double threshold = 0.05;
    std::string label;
    std::string output = "fit.json";
};

void run_fit(const FitOptions& opt) {
    using namespace lasvegas;

    std::istringstream csv(io::read_file(opt.input));
    Unit unit = opt.unit == "seconds" ? Unit::seconds : Unit::iterations;
    std::string label = opt.label.empty() ? opt.input : opt.label;
    EmpiricalSample sample = io::read_sample_csv(csv, unit, label);

    std::vector<Family> families;
    if (opt.family == "all") {
        families = {Family::ShiftedExponential, Family::ShiftedLognormal,
                    Family::ShiftedGaussian};
    } else if (opt.family == "exp" || opt.family == "exponential") {
        families = {Family::ShiftedExponential};
    } else if (opt.family == "lognormal") {
        families = {Family::ShiftedLognormal};
    } else {
        families = {Family::ShiftedGaussian};
    }

    std::vector<FitOutcome> outcomes = fit_all(sample, families, opt.threshold);

    for (const FitOutcome& o : outcomes) {
        if (o.report) {
            const FitReport& r = *o.report;
            std::printf("%-12s D = %-10.6g p = %-10.6g %s\n", family_name(o.family),
                        r.ks_statistic, r.p_value, verdict_name(r.verdict).c_str());
        } else {
            std::printf("%-12s error: %s\n", family_name(o.family), o.error.c_str());
        }
    }

    std::string json = outcomes.size() == 1 && outcomes.front().report
                           ? io::fit_report_to_json(*outcomes.front().report)
                           : io::fit_outcomes_to_json(outcomes);
    io::write_file(opt.output, json + "\n");
    std::printf("wrote %s\n", opt.output.c_str());
}

}  // namespace

void register_fit(CLI::App& app) {
    auto opt = std::make_shared<FitOptions>();
    CLI::App* cmd = app.add_subcommand(
        "fit", "Estimate distribution parameters and run the Kolmogorov-Smirnov test");

    cmd->add_option("--input,-i", opt->input, "Runs CSV (or any CSV with the unit column)")
        ->required();
    cmd->add_option("--family", opt->family, "exp | lognormal | gaussian | all")
        ->check(CLI::IsMember({"exp", "exponential", "lognormal", "gaussian", "all"}));
    cmd->add_option("--unit", opt->unit, "Observation column to fit")
        ->check(CLI::IsMember({"iterations", "seconds"}));
    cmd->add_option("--threshold", opt->threshold, "Rejection threshold for the p-value")
        ->check(CLI::Range(1e-12, 1.0 - 1e-12));
    cmd->add_option("--label", opt->label, "Sample label stored in the report");
    cmd->add_option("--output,-o", opt->output, "Fit report JSON path");

    cmd->callback([opt] { run_fit(*opt); });
}

}  // namespace lvspeedup
