#include <algorithm>
#include <cstdio>
#include <ctime>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "commands.hpp"
#include "lasvegas/errors.hpp"
#include "lasvegas/io.hpp"
#include "lasvegas/multiwalk.hpp"
#include "util.hpp"

namespace lvspeedup {

namespace {

using lasvegas::data_error;
using lasvegas::join_error;
using nlohmann::json;

struct ReportOptions {
    std::string predicted;
    std::string bootstrap;
    std::vector<std::string> parallel;
    std::string baseline;
    std::string fit;
    std::string label;
    std::string out_csv;
    std::string out_json;
};

struct Row {
    int n;
    double predicted;
    std::optional<double> bootstrap;
    std::optional<double> measured;
};

std::string timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

json metadata_to_json(const lasvegas::io::Metadata& m) {
    json j = json::object();
    for (const auto& [k, v] : m) j[k] = v;
    return j;
}

void run_report(const ReportOptions& opt) {
    using namespace lasvegas;

    io::CurveFile predicted = [&] {
        std::istringstream is(io::read_file(opt.predicted));
        return io::read_speedup_curve_csv(is);
    }();
    if (predicted.curve.points.empty()) {
        throw data_error(opt.predicted + ": no predicted points");
    }

    std::map<int, Row> rows;
    for (const SpeedupPoint& p : predicted.curve.points) {
        rows[p.cores] = Row{p.cores, p.speedup, std::nullopt, std::nullopt};
    }

    json inputs;
    inputs["predicted"] = metadata_to_json(predicted.metadata);

    // bootstrap core list must match the predicted one exactly
    if (!opt.bootstrap.empty()) {
        std::istringstream is(io::read_file(opt.bootstrap));
        io::BootstrapFile boot = io::read_bootstrap_csv(is);
        std::vector<int> missing;
        for (const auto& [n, row] : rows) {
            bool found = false;
            for (const auto& b : boot.rows) found |= b.n == n;
            if (!found) missing.push_back(n);
        }
        for (const auto& b : boot.rows) {
            if (rows.find(b.n) == rows.end()) missing.push_back(b.n);
        }
        if (!missing.empty()) {
            std::sort(missing.begin(), missing.end());
            std::string list;
            for (int n : missing) list += (list.empty() ? "" : ", ") + std::to_string(n);
            throw join_error("core lists of " + opt.predicted + " and " + opt.bootstrap +
                                 " do not match; unmatched n: " + list,
                             missing);
        }
        for (const auto& b : boot.rows) rows[b.n].bootstrap = b.speedup;
        inputs["bootstrap"] = metadata_to_json(boot.metadata);
    }

    // each parallel file contributes the measured point at its worker count
    std::optional<EmpiricalSample> baseline;
    if (!opt.baseline.empty()) {
        std::istringstream is(io::read_file(opt.baseline));
        baseline = io::read_sample_csv(is, Unit::iterations, opt.baseline);
        inputs["baseline"] = json{{"path", opt.baseline},
                                  {"sample_size", baseline->size()},
                                  {"mean_iterations", baseline->mean()}};
    }
    inputs["parallel"] = json::array();
    for (const std::string& path : opt.parallel) {
        std::istringstream is(io::read_file(path));
        io::ParallelFile par = io::read_parallel_csv(is);
        if (par.records.empty()) throw data_error(path + ": no trials");
        int workers = par.records.front().workers;
        auto it = rows.find(workers);
        if (it == rows.end()) {
            throw join_error(path + ": worker count " + std::to_string(workers) +
                                 " is absent from the predicted core list",
                             {workers});
        }
        double measured;
        if (auto meta = par.metadata.find("measured_speedup"); meta != par.metadata.end()) {
            measured = std::stod(meta->second);
        } else if (baseline) {
            measured = summarize_parallel_speedup(par.records, *baseline).mean_speedup;
        } else {
            throw data_error(path +
                             ": no measured_speedup metadata and no --baseline to compute it");
        }
        it->second.measured = measured;
        inputs["parallel"].push_back(metadata_to_json(par.metadata));
    }

    // fit summary, from --fit when given, else from the predicted metadata
    std::optional<FitReport> fit;
    if (!opt.fit.empty()) {
        std::string text = io::read_file(opt.fit);
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) throw data_error(opt.fit + ": not valid JSON");
        if (j.is_array()) {
            for (const auto& entry : j) {
                if (entry.contains("dist")) {
                    fit = io::fit_report_from_json(entry.dump());
                    break;
                }
            }
        } else if (j.contains("dist")) {
            fit = io::fit_report_from_json(text);
        }
    }

    std::string label = opt.label;
    if (label.empty()) {
        if (auto it = predicted.metadata.find("label"); it != predicted.metadata.end()) {
            label = it->second;
        } else if (fit) {
            label = fit->sample_label;
        } else {
            label = opt.predicted;
        }
    }

    // ---- text table: series as rows, core counts as columns
    std::printf("Problem: %s\n\n", label.c_str());
    std::printf("  %-10s", "n");
    for (const auto& [n, row] : rows) std::printf(" %10d", n);
    std::printf("\n");
    auto print_series = [&](const char* name, auto get) {
        std::printf("  %-10s", name);
        for (const auto& [n, row] : rows) {
            std::optional<double> v = get(row);
            if (v) {
                std::printf(" %10.4g", *v);
            } else {
                std::printf(" %10s", "-");
            }
        }
        std::printf("\n");
    };
    print_series("predicted", [](const Row& r) { return std::optional<double>(r.predicted); });
    print_series("bootstrap", [](const Row& r) { return r.bootstrap; });
    print_series("measured", [](const Row& r) { return r.measured; });
    std::printf("\n");

    if (fit) {
        std::printf("fit: %s, p-value = %.6g (%s)\n", family_name(fit->dist.family),
                    fit->p_value, verdict_name(fit->verdict).c_str());
    } else if (auto v = predicted.metadata.find("verdict"); v != predicted.metadata.end()) {
        std::printf("fit: %s (%s)\n", predicted.metadata["family"].c_str(),
                    v->second.c_str());
    }
    if (predicted.curve.limit) {
        std::printf("predicted limit: %.6g\n", *predicted.curve.limit);
    }

    // ---- CSV
    if (!opt.out_csv.empty()) {
        std::ostringstream os;
        os << "# problem = " << label << "\n";
        os << "n,predicted_speedup,bootstrap_speedup,measured_speedup\n";
        for (const auto& [n, row] : rows) {
            os << n << "," << io::format_double(row.predicted) << ",";
            if (row.bootstrap) os << io::format_double(*row.bootstrap);
            os << ",";
            if (row.measured) os << io::format_double(*row.measured);
            os << "\n";
        }
        io::write_file(opt.out_csv, os.str());
        std::printf("wrote %s\n", opt.out_csv.c_str());
    }

    // ---- JSON
    if (!opt.out_json.empty()) {
        json j;
        j["problem"] = label;
        j["rows"] = json::array();
        for (const auto& [n, row] : rows) {
            json r;
            r["n"] = n;
            r["predicted"] = row.predicted;
            if (row.bootstrap) r["bootstrap"] = *row.bootstrap;
            if (row.measured) r["measured"] = *row.measured;
            j["rows"].push_back(r);
        }
        if (fit) j["fit"] = json::parse(io::fit_report_to_json(*fit));
        if (predicted.curve.limit) j["predicted_limit"] = *predicted.curve.limit;
        j["metadata"] = {{"generated_at", timestamp()}, {"inputs", inputs}};
        io::write_file(opt.out_json, j.dump(2) + "\n");
        std::printf("wrote %s\n", opt.out_json.c_str());
    }
}

}  // namespace

void register_report(CLI::App& app) {
    auto opt = std::make_shared<ReportOptions>();
    CLI::App* cmd = app.add_subcommand(
        "report", "Join predicted, bootstrapped and measured speedups into one comparison");

    cmd->add_option("--predicted", opt->predicted, "Speedup curve CSV from `predict`")
        ->required();
    cmd->add_option("--bootstrap", opt->bootstrap, "Bootstrap CSV from `simulate`");
    cmd->add_option("--parallel", opt->parallel,
                    "Parallel trials CSV from `parallel` (repeatable, one per worker count)");
    cmd->add_option("--baseline", opt->baseline,
                    "Sequential runs CSV (to compute measured speedup when the parallel "
                    "CSV lacks it)");
    cmd->add_option("--fit", opt->fit, "Fit report JSON for the fit summary line");
    cmd->add_option("--label", opt->label, "Problem label for the report");
    cmd->add_option("--out-csv", opt->out_csv, "Write the comparison as CSV");
    cmd->add_option("--out-json", opt->out_json, "Write the comparison as JSON");

    cmd->callback([opt] { run_report(*opt); });
}

}  // namespace lvspeedup
