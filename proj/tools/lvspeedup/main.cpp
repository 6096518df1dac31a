#include <cstdio>
#include <exception>

#include <CLI11.hpp>

#include "commands.hpp"
#include "lasvegas/errors.hpp"
#include "util.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Multi-walk speedup prediction and measurement for Las Vegas solvers"};
    app.set_version_flag("--version", std::string("lvspeedup ") + LVSPEEDUP_VERSION);
    app.set_config("--config", "", "Flat key=value config file");
    app.require_subcommand(1);

    lvspeedup::register_collect(app);
    lvspeedup::register_fit(app);
    lvspeedup::register_predict(app);
    lvspeedup::register_simulate(app);
    lvspeedup::register_parallel(app);
    lvspeedup::register_report(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the parse failure
        return code == 0 ? lvspeedup::kOk : lvspeedup::kUsageError;
    } catch (const lvspeedup::rejected_fit_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return lvspeedup::kRejectedFit;
    } catch (const lasvegas::data_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return lvspeedup::kDataError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return lvspeedup::kFailure;
    }
    return lvspeedup::kOk;
}
