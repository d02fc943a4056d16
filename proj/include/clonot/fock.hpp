#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

namespace clonot::fock {

enum class ParticleKind { kBoson, kFermionMode };

/**
 * Occupation numbers (n0, n1) of the two basis modes of one subsystem.
 * Fermionic modes hold at most one particle per mode; the constructor
 * rejects anything else.
 */
class OccupationConfig {
public:
    OccupationConfig(int n0, int n1, ParticleKind kind = ParticleKind::kBoson);

    int n0() const { return n0_; }
    int n1() const { return n1_; }
    ParticleKind kind() const { return kind_; }
    int particle_count() const { return n0_ + n1_; }

    friend bool operator==(const OccupationConfig&, const OccupationConfig&) = default;
    friend auto operator<=>(const OccupationConfig&, const OccupationConfig&) = default;

private:
    int n0_;
    int n1_;
    ParticleKind kind_;
};

// Ordered tuple of per-subsystem occupations.
using CompositeConfig = std::vector<OccupationConfig>;

struct Term {
    CompositeConfig config;
    std::complex<double> amplitude;
};

/**
 * Normalized superposition over composite occupation configurations.
 * Immutable after construction. Terms are kept sorted lexicographically by
 * configuration so serialization is deterministic; duplicate configurations
 * and mixed subsystem arity are rejected, and the squared norm must be 1
 * within 1e-12.
 *
 * The amplitudes are complex; the probability of a configuration is always
 * |amplitude|^2. A classical distribution is represented by real amplitudes
 * sqrt(p).
 */
class SectorState {
public:
    explicit SectorState(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t arity() const;
    double squared_norm() const;

    // JSON form: [{"config": [[n0, n1], ...], "re": x, "im": y}, ...],
    // in the deterministic term order.
    nlohmann::ordered_json to_json() const;

private:
    std::vector<Term> terms_;
};

// Distributive tensor product; amplitudes multiply, subsystem tuples
// concatenate. Product amplitudes below 1e-15 are pruned. Throws on an
// empty part list.
SectorState tensor(std::span<const SectorState> parts);

/// Single-qubit amplitude pair with |a|^2 + |b|^2 = 1 within 1e-12.
class QubitAmplitudes {
public:
    QubitAmplitudes(std::complex<double> a, std::complex<double> b);
    static QubitAmplitudes normalized(std::complex<double> a, std::complex<double> b);

    std::complex<double> a() const { return a_; }
    std::complex<double> b() const { return b_; }

private:
    std::complex<double> a_;
    std::complex<double> b_;
};

/**
 * Second-quantized expansion of `copies` identical particles prepared in the
 * qubit state (a, b), as occupations of the two modes:
 *
 *   sum_k sqrt(C(copies, k)) a^k b^(copies-k) |k, copies-k>
 *
 * Normalized for any normalized input. Fermionic modes admit only a single
 * particle, so kFermionMode with copies >= 2 is rejected.
 */
SectorState mode_expand(const QubitAmplitudes& q, int copies,
                        ParticleKind kind = ParticleKind::kBoson);

/**
 * First-quantized tensor-power expansion (a|0> + b|1>)^(x copies) as a
 * coefficient table over computational-basis strings. Basis index bit b set
 * means particle b is in state |1>; the coefficient of a string with k zeros
 * is a^k b^(copies-k).
 */
class SymExpansion {
public:
    SymExpansion(int copies, std::vector<std::complex<double>> coeffs);

    int copies() const { return copies_; }
    const std::vector<std::complex<double>>& coefficients() const { return coeffs_; }
    std::complex<double> coefficient(std::uint32_t basis_index) const;
    int zero_count(std::uint32_t basis_index) const;
    double squared_norm() const;

private:
    int copies_;
    std::vector<std::complex<double>> coeffs_;
};

SymExpansion sym_expand(const QubitAmplitudes& q, int copies);

/**
 * |inner product| between the two expansions of the same prepared state:
 * the first-quantized table is mapped onto the occupation basis by collapsing
 * equal-zero-count strings onto normalized symmetric (Dicke) components, then
 * overlapped with the mode expansion. Equals 1 within 1e-12 for every
 * normalized input; a deviation means the two descriptions stopped being
 * unitarily equivalent.
 */
double equivalence_overlap(const QubitAmplitudes& q, int copies);

}  // namespace clonot::fock
