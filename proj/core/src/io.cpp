#include "lasvegas/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "lasvegas/errors.hpp"

namespace lasvegas::io {

namespace {

using nlohmann::json;

Family family_from_name(const std::string& name) {
    if (name == "exponential") return Family::ShiftedExponential;
    if (name == "lognormal") return Family::ShiftedLognormal;
    if (name == "gaussian") return Family::ShiftedGaussian;
    throw data_error("unknown distribution family '" + name + "'");
}

json distribution_to_json_obj(const RuntimeDistribution& d) {
    json j;
    j["family"] = family_name(d.family);
    j["x0"] = d.x0;
    if (d.family == Family::ShiftedExponential) {
        j["lambda"] = d.lambda;
    } else {
        j["mu"] = d.mu;
        j["sigma"] = d.sigma;
    }
    return j;
}

RuntimeDistribution distribution_from_json_obj(const json& j) {
    try {
        Family family = family_from_name(j.at("family").get<std::string>());
        double x0 = j.value("x0", 0.0);
        switch (family) {
            case Family::ShiftedExponential:
                return RuntimeDistribution::shifted_exponential(
                    x0, j.at("lambda").get<double>());
            case Family::ShiftedLognormal:
                return RuntimeDistribution::shifted_lognormal(
                    x0, j.at("mu").get<double>(), j.at("sigma").get<double>());
            case Family::ShiftedGaussian:
                return RuntimeDistribution::shifted_gaussian(
                    x0, j.at("mu").get<double>(), j.at("sigma").get<double>());
        }
    } catch (const json::exception& e) {
        throw data_error(std::string("distribution JSON: ") + e.what());
    }
    throw data_error("distribution JSON: unreachable family");
}

json fit_report_to_json_obj(const FitReport& r) {
    json j;
    j["sample_label"] = r.sample_label;
    j["sample_size"] = r.sample_size;
    j["dist"] = distribution_to_json_obj(r.dist);
    j["ks_statistic"] = r.ks_statistic;
    j["p_value"] = r.p_value;
    j["threshold"] = r.threshold;
    j["verdict"] = r.verdict == Verdict::accepted ? "accepted" : "rejected";
    j["params_estimated_from_sample"] = r.params_estimated_from_sample;
    j["x0_offset"] = r.x0_offset;
    return j;
}

FitReport fit_report_from_json_obj(const json& j) {
    try {
        FitReport r;
        r.sample_label = j.value("sample_label", std::string{});
        r.sample_size = j.at("sample_size").get<std::size_t>();
        r.dist = distribution_from_json_obj(j.at("dist"));
        r.ks_statistic = j.at("ks_statistic").get<double>();
        r.p_value = j.at("p_value").get<double>();
        r.threshold = j.at("threshold").get<double>();
        std::string v = j.at("verdict").get<std::string>();
        if (v != "accepted" && v != "rejected") {
            throw data_error("fit report JSON: bad verdict '" + v + "'");
        }
        r.verdict = v == "accepted" ? Verdict::accepted : Verdict::rejected;
        r.params_estimated_from_sample = j.value("params_estimated_from_sample", false);
        r.x0_offset = j.value("x0_offset", 0.0);
        return r;
    } catch (const json::exception& e) {
        throw data_error(std::string("fit report JSON: ") + e.what());
    }
}

// --- CSV helpers ---------------------------------------------------------

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

double parse_double(const std::string& field, std::size_t row) {
    const char* begin = field.data();
    const char* end = begin + field.size();
    while (begin < end && *begin == ' ') ++begin;
    double value{};
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw data_error("row " + std::to_string(row) + ": cannot parse number from '" +
                         field + "'");
    }
    return value;
}

long long parse_int(const std::string& field, std::size_t row) {
    const char* begin = field.data();
    const char* end = begin + field.size();
    while (begin < end && *begin == ' ') ++begin;
    long long value{};
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw data_error("row " + std::to_string(row) + ": cannot parse integer from '" +
                         field + "'");
    }
    return value;
}

// Reads metadata comments and the header row; leaves `is` at the first
// data row. Returns header fields.
std::vector<std::string> read_csv_preamble(std::istream& is, Metadata& metadata,
                                           std::size_t& row) {
    std::string line;
    while (std::getline(is, line)) {
        ++row;
        strip_cr(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::size_t eq = line.find('=');
            if (eq != std::string::npos) {
                auto trim = [](std::string s) {
                    std::size_t a = s.find_first_not_of(" \t#");
                    std::size_t b = s.find_last_not_of(" \t");
                    if (a == std::string::npos) return std::string{};
                    return s.substr(a, b - a + 1);
                };
                metadata[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
            }
            continue;
        }
        return split_csv(line);
    }
    throw data_error("CSV: missing header row");
}

void write_metadata(std::ostream& os, const MetadataList& metadata) {
    for (const auto& [key, value] : metadata) {
        os << "# " << key << " = " << value << "\n";
    }
}

int column_index(const std::vector<std::string>& header, const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return static_cast<int>(i);
    }
    return -1;
}

int require_column(const std::vector<std::string>& header, const std::string& name) {
    int idx = column_index(header, name);
    if (idx < 0) throw data_error("CSV: missing required column '" + name + "'");
    return idx;
}

ProblemKind problem_kind_from_name(const std::string& name) {
    if (name == "magic-square") return ProblemKind::MagicSquare;
    if (name == "all-interval") return ProblemKind::AllInterval;
    if (name == "costas") return ProblemKind::Costas;
    throw data_error("unknown problem '" + name + "'");
}

const char* problem_kind_name(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::MagicSquare: return "magic-square";
        case ProblemKind::AllInterval: return "all-interval";
        case ProblemKind::Costas: return "costas";
    }
    return "?";
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    // shortest representation that round-trips
    for (int precision : {15, 16, 17}) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
        double back{};
        auto [ptr, ec] = std::from_chars(buf, buf + std::char_traits<char>::length(buf), back);
        (void)ptr;
        if (ec == std::errc{} && back == v) break;
    }
    return buf;
}

std::string distribution_to_json(const RuntimeDistribution& dist) {
    return distribution_to_json_obj(dist).dump(2);
}

RuntimeDistribution distribution_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw data_error("distribution JSON: parse failure");
    return distribution_from_json_obj(j);
}

std::string fit_report_to_json(const FitReport& report) {
    return fit_report_to_json_obj(report).dump(2);
}

FitReport fit_report_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw data_error("fit report JSON: parse failure");
    return fit_report_from_json_obj(j);
}

std::string fit_outcomes_to_json(const std::vector<FitOutcome>& outcomes) {
    json arr = json::array();
    for (const FitOutcome& o : outcomes) {
        if (o.report) {
            arr.push_back(fit_report_to_json_obj(*o.report));
        } else {
            arr.push_back(json{{"family", family_name(o.family)}, {"error", o.error}});
        }
    }
    return arr.dump(2);
}

void write_speedup_curve_csv(std::ostream& os, const SpeedupCurve& curve,
                             const MetadataList& metadata) {
    write_metadata(os, metadata);
    if (curve.limit) os << "# limit = " << format_double(*curve.limit) << "\n";
    if (curve.origin_slope) {
        os << "# origin_slope = " << format_double(*curve.origin_slope) << "\n";
    }
    os << "n,speedup\n";
    for (const SpeedupPoint& p : curve.points) {
        os << p.cores << "," << format_double(p.speedup) << "\n";
    }
}

CurveFile read_speedup_curve_csv(std::istream& is) {
    CurveFile out;
    std::size_t row = 0;
    auto header = read_csv_preamble(is, out.metadata, row);
    int n_col = require_column(header, "n");
    int s_col = require_column(header, "speedup");

    std::string line;
    while (std::getline(is, line)) {
        ++row;
        strip_cr(line);
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_csv(line);
        if (static_cast<int>(fields.size()) <= std::max(n_col, s_col)) {
            throw data_error("row " + std::to_string(row) + ": too few columns");
        }
        out.curve.points.push_back(
            {static_cast<int>(parse_int(fields[static_cast<std::size_t>(n_col)], row)),
             parse_double(fields[static_cast<std::size_t>(s_col)], row)});
    }
    if (auto it = out.metadata.find("limit"); it != out.metadata.end()) {
        out.curve.limit = parse_double(it->second, 0);
    }
    if (auto it = out.metadata.find("origin_slope"); it != out.metadata.end()) {
        out.curve.origin_slope = parse_double(it->second, 0);
    }
    return out;
}

EmpiricalSample read_sample_csv(std::istream& is, Unit unit, const std::string& label) {
    Metadata metadata;
    std::size_t row = 0;
    auto header = read_csv_preamble(is, metadata, row);

    int col = -1;
    if (unit == Unit::iterations) {
        col = column_index(header, "iterations");
        if (col < 0) throw data_error("CSV: no 'iterations' column");
    } else {
        col = column_index(header, "seconds");
        if (col < 0) col = column_index(header, "wall_time_s");
        if (col < 0) throw data_error("CSV: no 'seconds' or 'wall_time_s' column");
    }

    std::vector<double> values;
    std::string line;
    while (std::getline(is, line)) {
        ++row;
        strip_cr(line);
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_csv(line);
        if (static_cast<int>(fields.size()) <= col) {
            throw data_error("row " + std::to_string(row) + ": too few columns");
        }
        values.push_back(parse_double(fields[static_cast<std::size_t>(col)], row));
    }
    if (values.empty()) throw data_error("CSV: no observations");
    return EmpiricalSample(std::move(values), unit, label);
}

void write_runs_csv(std::ostream& os, const std::vector<RunSample>& runs,
                    const MetadataList& metadata) {
    write_metadata(os, metadata);
    os << "run_id,seed,problem,n,iterations,wall_time_s,solved\n";
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const RunSample& r = runs[i];
        os << i << "," << r.seed << "," << problem_kind_name(r.problem.kind) << ","
           << r.problem.n << "," << r.iterations << "," << format_double(r.wall_time)
           << "," << (r.solved ? 1 : 0) << "\n";
    }
}

RunsFile read_runs_csv(std::istream& is) {
    RunsFile out;
    std::size_t row = 0;
    auto header = read_csv_preamble(is, out.metadata, row);
    int seed_col = require_column(header, "seed");
    int problem_col = require_column(header, "problem");
    int n_col = require_column(header, "n");
    int iter_col = require_column(header, "iterations");
    int wall_col = require_column(header, "wall_time_s");
    int solved_col = require_column(header, "solved");

    std::string line;
    while (std::getline(is, line)) {
        ++row;
        strip_cr(line);
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_csv(line);
        if (fields.size() < header.size()) {
            throw data_error("row " + std::to_string(row) + ": too few columns");
        }
        RunSample r;
        r.seed = static_cast<std::uint64_t>(
            parse_int(fields[static_cast<std::size_t>(seed_col)], row));
        r.problem.kind = problem_kind_from_name(fields[static_cast<std::size_t>(problem_col)]);
        r.problem.n = static_cast<int>(parse_int(fields[static_cast<std::size_t>(n_col)], row));
        r.iterations = static_cast<std::uint64_t>(
            parse_int(fields[static_cast<std::size_t>(iter_col)], row));
        r.wall_time = parse_double(fields[static_cast<std::size_t>(wall_col)], row);
        r.solved = parse_int(fields[static_cast<std::size_t>(solved_col)], row) != 0;
        out.runs.push_back(r);
    }
    return out;
}

void write_bootstrap_csv(std::ostream& os, const std::vector<BootstrapRow>& rows,
                         const MetadataList& metadata) {
    write_metadata(os, metadata);
    os << "n,bootstrap_speedup,std_error\n";
    for (const BootstrapRow& r : rows) {
        os << r.n << "," << format_double(r.speedup) << "," << format_double(r.std_error)
           << "\n";
    }
}

BootstrapFile read_bootstrap_csv(std::istream& is) {
    BootstrapFile out;
    std::size_t row = 0;
    auto header = read_csv_preamble(is, out.metadata, row);
    int n_col = require_column(header, "n");
    int s_col = require_column(header, "bootstrap_speedup");
    int e_col = require_column(header, "std_error");

    std::string line;
    while (std::getline(is, line)) {
        ++row;
        strip_cr(line);
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_csv(line);
        if (fields.size() < header.size()) {
            throw data_error("row " + std::to_string(row) + ": too few columns");
        }
        out.rows.push_back(
            {static_cast<int>(parse_int(fields[static_cast<std::size_t>(n_col)], row)),
             parse_double(fields[static_cast<std::size_t>(s_col)], row),
             parse_double(fields[static_cast<std::size_t>(e_col)], row)});
    }
    return out;
}

void write_parallel_csv(std::ostream& os, const std::vector<ParallelRunRecord>& records,
                        const MetadataList& metadata) {
    write_metadata(os, metadata);
    os << "trial_id,workers,winner_seed,winner_iterations,wall_time_s\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const ParallelRunRecord& r = records[i];
        os << i << "," << r.workers << "," << r.winner_seed << "," << r.winner_iterations
           << "," << format_double(r.wall_time) << "\n";
    }
}

ParallelFile read_parallel_csv(std::istream& is) {
    ParallelFile out;
    std::size_t row = 0;
    auto header = read_csv_preamble(is, out.metadata, row);
    int w_col = require_column(header, "workers");
    int seed_col = require_column(header, "winner_seed");
    int iter_col = require_column(header, "winner_iterations");
    int wall_col = require_column(header, "wall_time_s");

    std::string line;
    while (std::getline(is, line)) {
        ++row;
        strip_cr(line);
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_csv(line);
        if (fields.size() < header.size()) {
            throw data_error("row " + std::to_string(row) + ": too few columns");
        }
        ParallelRunRecord r;
        r.workers = static_cast<int>(parse_int(fields[static_cast<std::size_t>(w_col)], row));
        r.winner_seed = static_cast<std::uint64_t>(
            parse_int(fields[static_cast<std::size_t>(seed_col)], row));
        r.winner_iterations = static_cast<std::uint64_t>(
            parse_int(fields[static_cast<std::size_t>(iter_col)], row));
        r.wall_time = parse_double(fields[static_cast<std::size_t>(wall_col)], row);
        out.records.push_back(std::move(r));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw data_error("failed writing '" + path + "'");
}

}  // namespace lasvegas::io
