#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lasvegas/distribution.hpp"
#include "lasvegas/empirical.hpp"
#include "lasvegas/fitting.hpp"
#include "lasvegas/min_transform.hpp"
#include "lasvegas/multiwalk.hpp"
#include "lasvegas/solver.hpp"

/// File formats used between pipeline stages. All CSVs are UTF-8 with a
/// mandatory header row; lines starting with '#' carry "key = value"
/// metadata and are skipped by value readers.
namespace lasvegas::io {

using Metadata = std::map<std::string, std::string>;
using MetadataList = std::vector<std::pair<std::string, std::string>>;

// --- JSON -------------------------------------------------------------

/// {"family","x0","lambda"} or {"family","x0","mu","sigma"}; fields not
/// used by the family are omitted.
std::string distribution_to_json(const RuntimeDistribution& dist);
RuntimeDistribution distribution_from_json(const std::string& text);

std::string fit_report_to_json(const FitReport& report);
FitReport fit_report_from_json(const std::string& text);

/// JSON array; failed families appear as {"family","error"} entries.
std::string fit_outcomes_to_json(const std::vector<FitOutcome>& outcomes);

// --- speedup curve CSV (columns n,speedup) ------------------------------

void write_speedup_curve_csv(std::ostream& os, const SpeedupCurve& curve,
                             const MetadataList& metadata = {});

struct CurveFile {
    SpeedupCurve curve;
    Metadata metadata;
};
CurveFile read_speedup_curve_csv(std::istream& is);

// --- runtime observations ----------------------------------------------

/// Reads the column named "iterations" (unit iterations) or "seconds" /
/// "wall_time_s" (unit seconds) from any headed CSV, one observation per
/// row. Parse failures name the offending row.
EmpiricalSample read_sample_csv(std::istream& is, Unit unit, const std::string& label);

// --- solver runs CSV (run_id,seed,problem,n,iterations,wall_time_s,solved)

void write_runs_csv(std::ostream& os, const std::vector<RunSample>& runs,
                    const MetadataList& metadata = {});

struct RunsFile {
    std::vector<RunSample> runs;
    Metadata metadata;
};
RunsFile read_runs_csv(std::istream& is);

// --- bootstrap CSV (n,bootstrap_speedup,std_error) -----------------------

struct BootstrapRow {
    int n;
    double speedup;
    double std_error;  // of the speedup, propagated from the minimum's s.e.
};
void write_bootstrap_csv(std::ostream& os, const std::vector<BootstrapRow>& rows,
                         const MetadataList& metadata = {});

struct BootstrapFile {
    std::vector<BootstrapRow> rows;
    Metadata metadata;
};
BootstrapFile read_bootstrap_csv(std::istream& is);

// --- parallel trials CSV (trial_id,workers,winner_seed,winner_iterations,wall_time_s)

void write_parallel_csv(std::ostream& os, const std::vector<ParallelRunRecord>& records,
                        const MetadataList& metadata = {});

struct ParallelFile {
    std::vector<ParallelRunRecord> records;
    Metadata metadata;
};
ParallelFile read_parallel_csv(std::istream& is);

// --- helpers -------------------------------------------------------------

/// Shortest decimal form that round-trips a double.
std::string format_double(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace lasvegas::io
