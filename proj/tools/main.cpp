// clonot — batch verifier for the cloning / universal-NOT bookkeeping.
//
// Subcommands: relation, optimal, equivalence, sweep, ledger. Reports go to
// stdout (or --output) as CSV or JSON; exit 0 means every check passed, 1
// means a check failed, 2 means the invocation was invalid.

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "clonot/runner.hpp"

namespace {

using clonot::runner::Command;
using clonot::runner::Format;
using clonot::runner::RunConfig;

struct CliOptions {
    std::string n = "1";
    std::string m = "2";
    std::string copies = "2";
    int samples = 1000;
    std::uint64_t seed = 1;
    double tolerance = -1.0;  // < 0 means per-check default
    std::string format = "csv";
    std::string output;
};

void add_common_flags(CLI::App* cmd, CliOptions& opt, bool wants_nm, bool wants_copies,
                      bool wants_samples) {
    if (wants_nm) {
        cmd->add_option("--n", opt.n, "input clone count or range lo:hi");
        cmd->add_option("--m", opt.m, "output clone count or range lo:hi");
    }
    if (wants_copies)
        cmd->add_option("--copies", opt.copies, "copy count or range lo:hi");
    if (wants_samples) {
        cmd->add_option("--samples", opt.samples, "random samples per cell");
        cmd->add_option("--seed", opt.seed, "RNG seed (echoed in the report)");
    }
    cmd->add_option("--tolerance", opt.tolerance, "override the per-check tolerance");
    cmd->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output,-o", opt.output,
                    "write the report to this file instead of stdout; relative paths "
                    "resolve under $CLONOT_OUTPUT_DIR when it is set");
}

RunConfig to_config(Command command, const CliOptions& opt) {
    RunConfig config;
    config.command = command;
    config.n = clonot::runner::parse_range(opt.n);
    config.m = clonot::runner::parse_range(opt.m);
    config.copies = clonot::runner::parse_range(opt.copies);
    config.samples = opt.samples;
    config.seed = opt.seed;
    if (opt.tolerance >= 0.0)
        config.tolerance = opt.tolerance;
    config.format = opt.format == "json" ? Format::kJson : Format::kCsv;
    return config;
}

std::filesystem::path resolve_output(const std::string& output) {
    std::filesystem::path path(output);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("CLONOT_OUTPUT_DIR"))
            path = std::filesystem::path(dir) / path;
    }
    return path;
}

int execute(Command command, const CliOptions& opt) {
    const RunConfig config = to_config(command, opt);
    const clonot::runner::RunResult result = clonot::runner::run(config);

    if (opt.output.empty()) {
        clonot::runner::write_report(config, result, std::cout);
    } else {
        const std::filesystem::path path = resolve_output(opt.output);
        std::ofstream out(path);
        if (!out)
            throw std::invalid_argument("cannot open output file: " + path.string());
        clonot::runner::write_report(config, result, out);
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification runs for cloning / universal-NOT conservation bookkeeping"};
    app.require_subcommand(1);

    CliOptions relation_opt, optimal_opt, equivalence_opt, sweep_opt, ledger_opt;
    optimal_opt.m = "2:10";

    CLI::App* relation = app.add_subcommand(
        "relation", "residual of (m-n) f_not - (m f_clone - n) over random distributions");
    add_common_flags(relation, relation_opt, true, false, true);

    CLI::App* optimal = app.add_subcommand(
        "optimal", "reproduce the optimal cloning / NOT fidelities from the projection channel");
    add_common_flags(optimal, optimal_opt, true, false, false);

    CLI::App* equivalence = app.add_subcommand(
        "equivalence", "overlap between the tensor-power and mode-occupation expansions");
    add_common_flags(equivalence, equivalence_opt, false, true, true);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "per-cell summary over an (n, m) grid: residual maxima plus fidelities");
    add_common_flags(sweep, sweep_opt, true, false, true);

    CLI::App* ledger = app.add_subcommand(
        "ledger", "integer conservation audits of randomly sampled cloning outputs");
    add_common_flags(ledger, ledger_opt, true, false, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)  // --help
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (relation->parsed())
            return execute(Command::kRelation, relation_opt);
        if (optimal->parsed())
            return execute(Command::kOptimal, optimal_opt);
        if (equivalence->parsed())
            return execute(Command::kEquivalence, equivalence_opt);
        if (sweep->parsed())
            return execute(Command::kSweep, sweep_opt);
        if (ledger->parsed())
            return execute(Command::kLedger, ledger_opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
