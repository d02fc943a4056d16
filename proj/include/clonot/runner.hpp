#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace clonot::runner {

enum class Command { kRelation, kOptimal, kEquivalence, kSweep, kLedger };
enum class Format { kCsv, kJson };

struct Range {
    int lo = 1;
    int hi = 1;
};

// Parses "lo" or "lo:hi"; throws std::invalid_argument on malformed input.
Range parse_range(const std::string& text);

/**
 * One batch verification run. Ranges are inclusive. When `tolerance` is not
 * set, each row kind uses its own default: 1e-12 for relation and equivalence
 * rows, 1e-9 for quantum-layer rows, 0 for integer ledger rows. A set value
 * overrides all rows.
 */
struct RunConfig {
    Command command = Command::kRelation;
    Range n{1, 1};
    Range m{2, 2};
    Range copies{2, 2};
    int samples = 1000;
    std::uint64_t seed = 1;
    std::optional<double> tolerance;
    Format format = Format::kCsv;
};

/**
 * One report row. `check` fills the `command` CSV column and names the
 * quantity being verified (relation, optimal_clone, optimal_not, equivalence,
 * sweep_relation_max, sweep_clone, sweep_not, ledger_audit, ledger_emission).
 * For equivalence rows `n` carries the copy count and `m` is empty; `a` is
 * the sample index where one applies.
 */
struct ReportRow {
    std::string check;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> a;
    double value = 0.0;
    double expected = 0.0;
    double deviation = 0.0;
    bool pass = false;
};

struct RunResult {
    std::vector<ReportRow> rows;
    bool all_pass = false;
    int exit_code = 1;  // 0 iff all rows pass
};

// Executes the configured verification. Throws std::invalid_argument on an
// invalid configuration (empty ranges, bad sample counts, ranges beyond the
// quantum-layer caps); the CLI maps that to exit code 2.
RunResult run(const RunConfig& config);

// Deterministic report writers: identical (config, seed) gives byte-identical
// output. The leading comment line / config object echoes the full
// configuration including the seed.
void write_csv(const RunConfig& config, const RunResult& result, std::ostream& out);
void write_json(const RunConfig& config, const RunResult& result, std::ostream& out);
void write_report(const RunConfig& config, const RunResult& result, std::ostream& out);

const char* command_name(Command command);

}  // namespace clonot::runner
