#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lasvegas/fitting.hpp"
#include "lasvegas/io.hpp"
#include "lasvegas/solver.hpp"

namespace lvspeedup {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kUsageError = 2,
    kDataError = 3,
    kRejectedFit = 4,
};

/// Predicting from a rejected fit without --force.
struct rejected_fit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "16,32,64" -> {16, 32, 64}; must be positive and strictly increasing.
std::vector<int> parse_cores(const std::string& spec);

/// {1, 2, ..., upto}.
std::vector<int> cores_upto(int upto);

lasvegas::PermutationProblem problem_from_flags(const std::string& kind, int n);

lasvegas::io::MetadataList solver_params_metadata(const lasvegas::SolverParams& params);

/// One min/mean/median/max summary line for a collected sample.
void print_sample_summary(const lasvegas::EmpiricalSample& sample);

std::string verdict_name(lasvegas::Verdict v);

}  // namespace lvspeedup
