#include "clonot/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iterator>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "clonot/cloning.hpp"
#include "clonot/conservation.hpp"
#include "clonot/fock.hpp"
#include "clonot/rng.hpp"
#include "clonot/universal.hpp"

namespace clonot::runner {

namespace {

constexpr double kRelationTol = 1e-12;
constexpr double kEquivalenceTol = 1e-12;
constexpr double kQuantumTol = 1e-9;
constexpr int kQuantumCap = 10;

struct Cell {
    int n;
    int m;
};

double row_tolerance(const RunConfig& config, double fallback) {
    return config.tolerance ? *config.tolerance : fallback;
}

ReportRow make_row(std::string check, std::optional<int> n, std::optional<int> m,
                   std::optional<int> a, double value, double expected, double tol) {
    ReportRow row;
    row.check = std::move(check);
    row.n = n;
    row.m = m;
    row.a = a;
    row.value = value;
    row.expected = expected;
    row.deviation = value - expected;
    row.pass = std::abs(row.deviation) <= tol;
    return row;
}

void validate_range(const Range& r, const char* name) {
    if (r.lo < 1 || r.hi < r.lo)
        throw std::invalid_argument(std::string("run: empty or invalid range for ") + name);
}

// (n, m) grid cells with n < m, row-major in (n, m).
std::vector<Cell> grid_cells(const RunConfig& config) {
    std::vector<Cell> cells;
    for (int n = config.n.lo; n <= config.n.hi; ++n)
        for (int m = std::max(config.m.lo, n + 1); m <= config.m.hi; ++m)
            cells.push_back({n, m});
    if (cells.empty())
        throw std::invalid_argument("run: no (n, m) pairs with n < m in the given ranges");
    return cells;
}

// Largest per-term deviation, over both states, from the input's leading
// totals; zero exactly when the audit is clean.
long long audit_defect(const fock::SectorState& in, const fock::SectorState& out) {
    const auto ref = conservation::term_totals(in).front();
    long long defect = 0;
    for (const fock::SectorState* state : {&in, &out})
        for (const auto& t : conservation::term_totals(*state))
            defect = std::max(defect, std::llabs(t.particles - ref.particles) +
                                          std::llabs(t.angular_momentum - ref.angular_momentum));
    return defect;
}

std::vector<ReportRow> relation_cell(const RunConfig& config, Cell cell) {
    const double tol = row_tolerance(config, kRelationTol);
    const auto spec = conservation::CloneSpec::minimal(cell.n, cell.m, cell.m - cell.n);
    std::vector<ReportRow> rows;
    rows.reserve(static_cast<std::size_t>(config.samples));
    for (int j = 0; j < config.samples; ++j) {
        rng::Stream stream(rng::derive(config.seed, {static_cast<std::uint64_t>(cell.n),
                                                     static_cast<std::uint64_t>(cell.m),
                                                     static_cast<std::uint64_t>(j)}));
        const auto dist = cloning::random_outcome_distribution(spec, stream);
        rows.push_back(make_row("relation", cell.n, cell.m, j,
                                cloning::clonot_residual(dist), 0.0, tol));
    }
    return rows;
}

std::vector<ReportRow> optimal_cell(const RunConfig& config, Cell cell) {
    const double tol = row_tolerance(config, kQuantumTol);
    const fock::QubitAmplitudes zero_state(1.0, 0.0);
    const auto output = universal::projection_cloner(cell.n, cell.m, zero_state);
    const double f_clone = universal::single_copy_fidelity(output, zero_state);

    const auto spec = conservation::CloneSpec::minimal(cell.n, cell.m, cell.m - cell.n);
    const double f_not =
        cloning::fidelity_not(universal::zeros_distribution(output, spec));

    return {make_row("optimal_clone", cell.n, cell.m, std::nullopt, f_clone,
                     universal::optimal_clone_fidelity(cell.n, cell.m), tol),
            make_row("optimal_not", cell.n, cell.m, std::nullopt, f_not,
                     universal::optimal_not_fidelity(cell.n), tol)};
}

std::vector<ReportRow> equivalence_cell(const RunConfig& config, int copies) {
    const double tol = row_tolerance(config, kEquivalenceTol);
    std::vector<ReportRow> rows;
    rows.reserve(static_cast<std::size_t>(config.samples));
    for (int j = 0; j < config.samples; ++j) {
        rng::Stream stream(rng::derive(config.seed, {static_cast<std::uint64_t>(copies),
                                                     static_cast<std::uint64_t>(j)}));
        const auto psi = universal::haar_qubit(stream);
        rows.push_back(make_row("equivalence", copies, std::nullopt, j,
                                fock::equivalence_overlap(psi, copies), 1.0, tol));
    }
    return rows;
}

std::vector<ReportRow> sweep_cell(const RunConfig& config, Cell cell) {
    double max_residual = 0.0;
    const auto spec = conservation::CloneSpec::minimal(cell.n, cell.m, cell.m - cell.n);
    for (int j = 0; j < config.samples; ++j) {
        rng::Stream stream(rng::derive(config.seed, {static_cast<std::uint64_t>(cell.n),
                                                     static_cast<std::uint64_t>(cell.m),
                                                     static_cast<std::uint64_t>(j)}));
        const auto dist = cloning::random_outcome_distribution(spec, stream);
        max_residual = std::max(max_residual, std::abs(cloning::clonot_residual(dist)));
    }

    std::vector<ReportRow> rows;
    rows.push_back(make_row("sweep_relation_max", cell.n, cell.m, std::nullopt, max_residual,
                            0.0, row_tolerance(config, kRelationTol)));
    if (cell.m <= kQuantumCap) {
        for (ReportRow& row : optimal_cell(config, cell)) {
            row.check = row.check == "optimal_clone" ? "sweep_clone" : "sweep_not";
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<ReportRow> ledger_cell(const RunConfig& config, Cell cell) {
    const double tol = row_tolerance(config, 0.0);
    const int l = cell.m - cell.n;  // smallest reservoir that is not exhausted
    const auto spec = conservation::CloneSpec::minimal(cell.n, cell.m, l);
    const auto in = cloning::initial_state(cell.n, l);

    std::vector<ReportRow> rows;
    rows.reserve(static_cast<std::size_t>(config.samples) + 1);
    for (int j = 0; j < config.samples; ++j) {
        rng::Stream stream(rng::derive(config.seed, {static_cast<std::uint64_t>(cell.n),
                                                     static_cast<std::uint64_t>(cell.m),
                                                     static_cast<std::uint64_t>(j)}));
        const auto coeffs = cloning::random_coefficient_vector(spec, stream);
        const auto out = cloning::build_output_state(coeffs, l);
        rows.push_back(make_row("ledger_audit", cell.n, cell.m, j,
                                static_cast<double>(audit_defect(in, out)), 0.0, tol));
    }

    const auto emission =
        conservation::validate_emission_ledger(l, spec.lprime(), cell.n, cell.m);
    rows.push_back(make_row("ledger_emission", cell.n, cell.m, std::nullopt,
                            static_cast<double>(std::llabs(emission.n_in - emission.n_out)),
                            0.0, tol));
    return rows;
}

// Cells are independent; run them in parallel, then splice in grid order so
// the report is identical however the work was scheduled.
template <typename CellT, typename Fn>
std::vector<ReportRow> run_cells(const std::vector<CellT>& cells, Fn&& fn) {
    std::vector<std::vector<ReportRow>> per_cell(cells.size());
    const std::int64_t count = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i)
        per_cell[static_cast<std::size_t>(i)] = fn(cells[static_cast<std::size_t>(i)]);

    std::vector<ReportRow> rows;
    for (std::vector<ReportRow>& chunk : per_cell)
        rows.insert(rows.end(), std::make_move_iterator(chunk.begin()),
                    std::make_move_iterator(chunk.end()));
    return rows;
}

void validate(const RunConfig& config) {
    validate_range(config.n, "--n");
    validate_range(config.m, "--m");
    validate_range(config.copies, "--copies");
    if (config.samples < 1)
        throw std::invalid_argument("run: samples must be >= 1");
    if (config.tolerance && !(*config.tolerance > 0.0))
        throw std::invalid_argument("run: tolerance must be > 0");
    if (config.command == Command::kOptimal && config.m.hi > kQuantumCap)
        throw std::invalid_argument("run: optimal needs m <= 10");
    if (config.command == Command::kEquivalence && config.copies.hi > 16)
        throw std::invalid_argument("run: equivalence needs copies <= 16");
    if ((config.command == Command::kRelation || config.command == Command::kSweep ||
         config.command == Command::kLedger) &&
        config.m.hi > 1000)
        throw std::invalid_argument("run: m <= 1000");
}

}  // namespace

Range parse_range(const std::string& text) {
    const auto colon = text.find(':');
    try {
        std::size_t used = 0;
        Range r;
        if (colon == std::string::npos) {
            r.lo = r.hi = std::stoi(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
        } else {
            r.lo = std::stoi(text.substr(0, colon), &used);
            if (used != colon)
                throw std::invalid_argument(text);
            const std::string hi = text.substr(colon + 1);
            r.hi = std::stoi(hi, &used);
            if (used != hi.size())
                throw std::invalid_argument(text);
        }
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("range must be 'lo' or 'lo:hi', got '" + text + "'");
    }
}

const char* command_name(Command command) {
    switch (command) {
        case Command::kRelation: return "relation";
        case Command::kOptimal: return "optimal";
        case Command::kEquivalence: return "equivalence";
        case Command::kSweep: return "sweep";
        case Command::kLedger: return "ledger";
    }
    return "?";
}

RunResult run(const RunConfig& config) {
    validate(config);

    RunResult result;
    switch (config.command) {
        case Command::kRelation:
            result.rows = run_cells(grid_cells(config),
                                    [&](Cell c) { return relation_cell(config, c); });
            break;
        case Command::kOptimal:
            result.rows = run_cells(grid_cells(config),
                                    [&](Cell c) { return optimal_cell(config, c); });
            break;
        case Command::kEquivalence: {
            std::vector<int> copies;
            for (int c = config.copies.lo; c <= config.copies.hi; ++c)
                copies.push_back(c);
            result.rows = run_cells(copies, [&](int c) { return equivalence_cell(config, c); });
            break;
        }
        case Command::kSweep:
            result.rows = run_cells(grid_cells(config),
                                    [&](Cell c) { return sweep_cell(config, c); });
            break;
        case Command::kLedger:
            result.rows = run_cells(grid_cells(config),
                                    [&](Cell c) { return ledger_cell(config, c); });
            break;
    }

    result.all_pass = std::all_of(result.rows.begin(), result.rows.end(),
                                  [](const ReportRow& r) { return r.pass; });
    result.exit_code = result.all_pass ? 0 : 1;
    return result;
}

namespace {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string config_summary(const RunConfig& config) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "command=%s n=%d:%d m=%d:%d copies=%d:%d samples=%d seed=%llu",
                  command_name(config.command), config.n.lo, config.n.hi, config.m.lo,
                  config.m.hi, config.copies.lo, config.copies.hi, config.samples,
                  static_cast<unsigned long long>(config.seed));
    std::string s = buf;
    s += " tolerance=";
    s += config.tolerance ? format_double(*config.tolerance) : "default";
    return s;
}

}  // namespace

void write_csv(const RunConfig& config, const RunResult& result, std::ostream& out) {
    out << "# " << config_summary(config) << "\n";
    out << "command,N,M,a,value,expected,deviation,pass\n";
    for (const ReportRow& row : result.rows) {
        out << row.check << ',';
        if (row.n) out << *row.n;
        out << ',';
        if (row.m) out << *row.m;
        out << ',';
        if (row.a) out << *row.a;
        out << ',' << format_double(row.value) << ',' << format_double(row.expected) << ','
            << format_double(row.deviation) << ',' << (row.pass ? "true" : "false") << "\n";
    }
}

void write_json(const RunConfig& config, const RunResult& result, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["command"] = command_name(config.command);
    doc["config"] = {{"n", std::to_string(config.n.lo) + ":" + std::to_string(config.n.hi)},
                     {"m", std::to_string(config.m.lo) + ":" + std::to_string(config.m.hi)},
                     {"copies", std::to_string(config.copies.lo) + ":" +
                                    std::to_string(config.copies.hi)},
                     {"samples", config.samples},
                     {"seed", config.seed}};
    if (config.tolerance)
        doc["config"]["tolerance"] = *config.tolerance;
    else
        doc["config"]["tolerance"] = nullptr;

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const ReportRow& row : result.rows) {
        nlohmann::ordered_json r;
        r["command"] = row.check;
        r["N"] = row.n ? nlohmann::ordered_json(*row.n) : nlohmann::ordered_json(nullptr);
        r["M"] = row.m ? nlohmann::ordered_json(*row.m) : nlohmann::ordered_json(nullptr);
        r["a"] = row.a ? nlohmann::ordered_json(*row.a) : nlohmann::ordered_json(nullptr);
        r["value"] = row.value;
        r["expected"] = row.expected;
        r["deviation"] = row.deviation;
        r["pass"] = row.pass;
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    doc["all_pass"] = result.all_pass;
    out << doc.dump(2) << "\n";
}

void write_report(const RunConfig& config, const RunResult& result, std::ostream& out) {
    if (config.format == Format::kCsv)
        write_csv(config, result, out);
    else
        write_json(config, result, out);
}

}  // namespace clonot::runner
