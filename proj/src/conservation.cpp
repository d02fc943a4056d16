#include "clonot/conservation.hpp"

#include <stdexcept>

namespace clonot::conservation {

CloneSpec::CloneSpec(int n, int m, int k, int l, int lprime)
    : n_(n), m_(m), k_(k), l_(l), lprime_(lprime) {
    if (n < 1 || m <= n)
        throw std::invalid_argument("CloneSpec: need m > n >= 1");
    if (k < m - n)
        throw std::invalid_argument("CloneSpec: ancilla count below m - n");
    if ((n - m - k) % 2 != 0)
        throw std::invalid_argument("CloneSpec: n - m - k must be even");
    if (lprime != l + (n - m - k) / 2)
        throw std::invalid_argument("CloneSpec: final reservoir inconsistent with particle count");
    if (lprime < 0)
        throw std::invalid_argument("CloneSpec: reservoir exhausted");
    if (l < lprime)
        throw std::invalid_argument("CloneSpec: reservoir grew");
}

CloneSpec CloneSpec::minimal(int n, int m, int l) {
    const int k = min_ancillas(n, m);
    return CloneSpec(n, m, k, l, reservoir_after(l, n, m, k));
}

nlohmann::ordered_json LedgerReport::to_json() const {
    return {{"j_in", j_in}, {"j_out", j_out}, {"n_in", n_in}, {"n_out", n_out}, {"ok", ok}};
}

long long angular_momentum(const fock::CompositeConfig& configs) {
    long long j = 0;
    for (const fock::OccupationConfig& c : configs)
        j += c.n1() - c.n0();
    return j;
}

long long particle_count(const fock::CompositeConfig& configs) {
    long long n = 0;
    for (const fock::OccupationConfig& c : configs)
        n += c.particle_count();
    return n;
}

bool check_constraint(int a, int b, const CloneSpec& spec) {
    if (a < 0 || a > spec.m() || b < 0 || b > spec.k())
        throw std::out_of_range("check_constraint: outcome out of range");
    return 2 * (a + b) == spec.n() + spec.k() + spec.m();
}

int min_ancillas(int n, int m) {
    if (m <= n)
        throw std::invalid_argument("min_ancillas: need m > n");
    return m - n;
}

int reservoir_after(int l, int n, int m, int k) {
    if ((n - m - k) % 2 != 0)
        throw std::invalid_argument("reservoir_after: n - m - k must be even");
    const int lprime = l + (n - m - k) / 2;
    if (lprime < 0)
        throw std::invalid_argument("reservoir_after: reservoir exhausted");
    return lprime;
}

LedgerReport validate_emission_ledger(int l, int lprime, int n, int m) {
    if (l < 0 || lprime < 0 || n < 0 || m < 0)
        throw std::invalid_argument("validate_emission_ledger: negative count");
    LedgerReport report;
    report.n_in = n + 2ll * l;
    report.n_out = (2ll * m - n) + 2ll * lprime;
    report.j_in = 0;
    report.j_out = 0;
    report.ok = report.n_in == report.n_out;
    return report;
}

std::vector<TermTotals> term_totals(const fock::SectorState& state) {
    std::vector<TermTotals> totals;
    totals.reserve(state.terms().size());
    for (const fock::Term& t : state.terms())
        totals.push_back({particle_count(t.config), angular_momentum(t.config)});
    return totals;
}

LedgerReport audit(const fock::SectorState& state_in, const fock::SectorState& state_out) {
    const std::vector<TermTotals> in = term_totals(state_in);
    const std::vector<TermTotals> out = term_totals(state_out);

    LedgerReport report;
    report.n_in = in.front().particles;
    report.j_in = in.front().angular_momentum;
    report.n_out = out.front().particles;
    report.j_out = out.front().angular_momentum;

    report.ok = true;
    for (const TermTotals& t : in)
        if (t.particles != report.n_in || t.angular_momentum != report.j_in)
            report.ok = false;
    for (const TermTotals& t : out)
        if (t.particles != report.n_in || t.angular_momentum != report.j_in)
            report.ok = false;
    return report;
}

}  // namespace clonot::conservation
