#include <cstdio>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "commands.hpp"
#include "lasvegas/errors.hpp"
#include "lasvegas/io.hpp"
#include "lasvegas/min_transform.hpp"
#include "util.hpp"

namespace lvspeedup {

namespace {

struct PredictOptions {
    std::string fit_path;
    std::string cores_spec;
    int cores_upto_value = 0;
    std::string output = "curve.csv";
    bool force = false;
};

struct FitInput {
    lasvegas::RuntimeDistribution dist;
    std::optional<lasvegas::Verdict> verdict;
    std::optional<double> p_value;
    std::string label;
};

// Accepts a fit-report object, a fit-report array (first usable entry
// wins; they are ordered by descending p-value), or a bare distribution.
FitInput parse_fit_input(const std::string& text, const std::string& path) {
    using nlohmann::json;
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw lasvegas::data_error(path + ": not valid JSON");

    if (j.is_array()) {
        for (const auto& entry : j) {
            if (entry.contains("dist")) {
                lasvegas::FitReport r = lasvegas::io::fit_report_from_json(entry.dump());
                return {r.dist, r.verdict, r.p_value, r.sample_label};
            }
        }
        throw lasvegas::data_error(path + ": no usable fit report in array");
    }
    if (j.contains("dist")) {
        lasvegas::FitReport r = lasvegas::io::fit_report_from_json(text);
        return {r.dist, r.verdict, r.p_value, r.sample_label};
    }
    if (j.contains("family")) {
        return {lasvegas::io::distribution_from_json(text), std::nullopt, std::nullopt, ""};
    }
    throw lasvegas::data_error(path + ": neither a fit report nor a distribution");
}

void run_predict(const PredictOptions& opt) {
    using namespace lasvegas;

    if (opt.cores_spec.empty() == (opt.cores_upto_value == 0)) {
        throw data_error("predict: exactly one of --cores / --cores-upto is required");
    }
    std::vector<int> cores = opt.cores_spec.empty() ? cores_upto(opt.cores_upto_value)
                                                    : parse_cores(opt.cores_spec);

    FitInput input = parse_fit_input(io::read_file(opt.fit_path), opt.fit_path);
    if (input.verdict && *input.verdict == Verdict::rejected) {
        if (!opt.force) {
            throw rejected_fit_error(opt.fit_path +
                                     ": fit was rejected by the KS test; pass --force to "
                                     "predict from it anyway");
        }
        std::fprintf(stderr, "warning: predicting from a rejected fit (--force)\n");
    }

    SpeedupCurve curve = speedup_curve(input.dist, cores);
    if (!curve.limit) curve.limit = speedup_limit(input.dist);

    io::MetadataList metadata = {{"source", opt.fit_path},
                                 {"family", family_name(input.dist.family)},
                                 {"x0", io::format_double(input.dist.x0)}};
    if (input.dist.family == Family::ShiftedExponential) {
        metadata.push_back({"lambda", io::format_double(input.dist.lambda)});
    } else {
        metadata.push_back({"mu", io::format_double(input.dist.mu)});
        metadata.push_back({"sigma", io::format_double(input.dist.sigma)});
    }
    if (!input.label.empty()) metadata.push_back({"label", input.label});
    if (input.verdict) metadata.push_back({"verdict", verdict_name(*input.verdict)});
    if (input.p_value) metadata.push_back({"p_value", io::format_double(*input.p_value)});

    std::ostringstream csv;
    io::write_speedup_curve_csv(csv, curve, metadata);
    io::write_file(opt.output, csv.str());

    if (curve.limit) {
        std::printf("asymptotic speedup limit: %s\n", io::format_double(*curve.limit).c_str());
    } else {
        std::printf("asymptotic speedup limit: unbounded (x0 = 0)\n");
    }
    std::printf("wrote %zu points to %s\n", curve.points.size(), opt.output.c_str());
}

}  // namespace

void register_predict(CLI::App& app) {
    auto opt = std::make_shared<PredictOptions>();
    CLI::App* cmd = app.add_subcommand(
        "predict", "Predict multi-walk speedups from a fitted distribution");

    cmd->add_option("--fit,-f", opt->fit_path,
                    "Fit report JSON (from `fit`) or a bare distribution JSON")
        ->required();
    cmd->add_option("--cores", opt->cores_spec, "Comma-separated core counts, e.g. 16,32,64");
    cmd->add_option("--cores-upto", opt->cores_upto_value, "Predict for n = 1..K")
        ->check(CLI::Range(1, 1000000));
    cmd->add_option("--output,-o", opt->output, "Speedup curve CSV path");
    cmd->add_flag("--force", opt->force, "Predict even from a rejected fit");

    cmd->callback([opt] { run_predict(*opt); });
}

}  // namespace lvspeedup
