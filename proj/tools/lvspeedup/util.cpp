#include "util.hpp"

#include <charconv>
#include <cstdio>

#include "lasvegas/errors.hpp"

namespace lvspeedup {

using lasvegas::data_error;

std::vector<int> parse_cores(const std::string& spec) {
    std::vector<int> cores;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        std::string field = spec.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        int value{};
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size() || value < 1) {
            throw data_error("--cores: '" + field + "' is not a positive integer");
        }
        if (!cores.empty() && value <= cores.back()) {
            throw data_error("--cores: values must be strictly increasing");
        }
        cores.push_back(value);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (cores.empty()) throw data_error("--cores: empty list");
    return cores;
}

std::vector<int> cores_upto(int upto) {
    if (upto < 1) throw data_error("--cores-upto: must be positive");
    std::vector<int> cores;
    cores.reserve(static_cast<std::size_t>(upto));
    for (int n = 1; n <= upto; ++n) cores.push_back(n);
    return cores;
}

lasvegas::PermutationProblem problem_from_flags(const std::string& kind, int n) {
    lasvegas::ProblemKind k;
    if (kind == "magic-square") {
        k = lasvegas::ProblemKind::MagicSquare;
    } else if (kind == "all-interval") {
        k = lasvegas::ProblemKind::AllInterval;
    } else if (kind == "costas") {
        k = lasvegas::ProblemKind::Costas;
    } else {
        throw data_error("unknown problem '" + kind + "'");
    }
    return {k, n};
}

lasvegas::io::MetadataList solver_params_metadata(const lasvegas::SolverParams& params) {
    return {
        {"tabu_tenure", std::to_string(params.tabu_tenure)},
        {"reset_fraction", lasvegas::io::format_double(params.reset_fraction)},
        {"reset_trigger", std::to_string(params.reset_trigger)},
        {"max_iterations", std::to_string(params.max_iterations)},
    };
}

void print_sample_summary(const lasvegas::EmpiricalSample& sample) {
    std::printf("%-12s %14s %14s %14s %14s\n", sample.label().c_str(), "min", "mean",
                "median", "max");
    std::printf("%-12s %14.6g %14.6g %14.6g %14.6g\n",
                lasvegas::unit_name(sample.unit()), sample.min(), sample.mean(),
                sample.median(), sample.max());
}

std::string verdict_name(lasvegas::Verdict v) {
    return v == lasvegas::Verdict::accepted ? "accepted" : "rejected";
}

}  // namespace lvspeedup
