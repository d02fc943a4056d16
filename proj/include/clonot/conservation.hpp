#pragma once

#include <vector>

#include <json.hpp>

#include "clonot/fock.hpp"

namespace clonot::conservation {

/**
 * Integer parameters of one N -> M cloning scenario:
 *   n       input clones
 *   m       output clones, m > n >= 1
 *   k       ancilla count, k >= m - n, with n - m - k even
 *   l       initial reservoir pairs
 *   lprime  final reservoir pairs, lprime = l + (n - m - k)/2 >= 0
 * The constructor enforces all of the above.
 */
class CloneSpec {
public:
    CloneSpec(int n, int m, int k, int l, int lprime);

    // Canonical scenario: k = m - n and lprime fixed by particle number.
    static CloneSpec minimal(int n, int m, int l);

    int n() const { return n_; }
    int m() const { return m_; }
    int k() const { return k_; }
    int l() const { return l_; }
    int lprime() const { return lprime_; }

private:
    int n_, m_, k_, l_, lprime_;
};

/**
 * Result of an integer conservation audit. `ok` holds exactly when both
 * tracked quantities agree between input and output.
 */
struct LedgerReport {
    long long j_in = 0;   // total angular momentum, +1 per |1> particle, -1 per |0>
    long long j_out = 0;
    long long n_in = 0;   // total particle / excitation count
    long long n_out = 0;
    bool ok = false;

    nlohmann::ordered_json to_json() const;
};

// Total angular momentum of a composite configuration: sum of (n1 - n0).
long long angular_momentum(const fock::CompositeConfig& configs);

// Total particle count of a composite configuration.
long long particle_count(const fock::CompositeConfig& configs);

// Angular-momentum constraint on an (a, b) outcome: 2(a + b) = n + k + m.
bool check_constraint(int a, int b, const CloneSpec& spec);

// Smallest ancilla count consistent with the conservation laws: m - n.
int min_ancillas(int n, int m);

// Final reservoir pairs l + (n - m - k)/2. Throws if n - m - k is odd or the
// result is negative (reservoir exhausted).
int reservoir_after(int l, int n, int m, int k);

/**
 * Count-level excitation ledger for the stimulated-emission picture: 2l
 * excited atoms plus n photons in, (2m - n) photons plus 2lprime excited
 * atoms out; ok iff 2l - 2lprime = 2m - 2n. Angular momentum is not tracked
 * at this level, so j_in = j_out = 0.
 */
LedgerReport validate_emission_ledger(int l, int lprime, int n, int m);

struct TermTotals {
    long long particles;
    long long angular_momentum;
};

// Per-term totals, in the state's deterministic term order.
std::vector<TermTotals> term_totals(const fock::SectorState& state);

/**
 * Full conservation audit between two states: ok iff every term of both
 * states carries the same particle count and angular momentum as the first
 * input term. Mixed-sector states make the audit fail but never throw;
 * term_totals() exposes the per-term breakdown.
 */
LedgerReport audit(const fock::SectorState& state_in, const fock::SectorState& state_out);

}  // namespace clonot::conservation
