#pragma once

#include <CLI11.hpp>

namespace lvspeedup {

// Each register_* wires one subcommand (flags + callback) into the app.
// Callbacks throw: lasvegas::data_error -> exit 3, rejected_fit_error ->
// exit 4; flag validation failures surface as CLI::ParseError -> exit 2.
void register_collect(CLI::App& app);
void register_fit(CLI::App& app);
void register_predict(CLI::App& app);
void register_simulate(CLI::App& app);
void register_parallel(CLI::App& app);
void register_report(CLI::App& app);

}  // namespace lvspeedup
