#pragma once

#include <cstdint>

#include "clonot/cloning.hpp"
#include "clonot/conservation.hpp"
#include "clonot/fock.hpp"
#include "clonot/linalg.hpp"
#include "clonot/rng.hpp"

namespace clonot::universal {

/**
 * Dense Hermitian, unit-trace operator. Hermiticity and trace are checked at
 * construction (1e-12); positive semidefiniteness down to -1e-10 is part of
 * the contract and certified on demand by is_positive_semidefinite(), which
 * is O(dim^3) and therefore not run per construction.
 */
class DensityOperator {
public:
    explicit DensityOperator(linalg::CMatrix matrix);

    std::size_t dim() const { return matrix_.rows(); }
    const linalg::CMatrix& matrix() const { return matrix_; }

    bool is_positive_semidefinite(double tol = 1e-10) const;

private:
    linalg::CMatrix matrix_;
};

/// Orthogonal projector onto the permutation-symmetric subspace of `copies` qubits.
class SymmetricProjector {
public:
    int copies() const { return copies_; }
    const linalg::CMatrix& matrix() const { return matrix_; }

    // trace of a projector = rank
    int rank() const;
    // max |P^2 - P| entry; O(8^copies), test-scale sizes only
    double idempotency_defect() const;

private:
    friend SymmetricProjector sym_projector(int copies);
    SymmetricProjector(int copies, linalg::CMatrix matrix);

    int copies_;
    linalg::CMatrix matrix_;
};

// Projector onto the symmetric subspace; rank copies + 1. copies in [1, 12].
SymmetricProjector sym_projector(int copies);

// Average of |psi><psi|^(x copies) over uniformly random pure qubit states:
// the symmetric projector scaled to unit trace. copies in [1, 12].
DensityOperator haar_moment(int copies);

/**
 * Symmetric-projection cloning channel: forms rho^(x n) (x) I^(x (m-n)),
 * conjugates by the m-qubit symmetric projector and rescales to unit trace.
 * The pre-normalization trace is input-independent; each call checks it
 * against the structural value sum_k C(m-n, k-n)/C(m, k) and reports it
 * through *pre_trace when requested. Requires 1 <= n < m <= 10.
 */
DensityOperator projection_cloner(int n, int m, const fock::QubitAmplitudes& input,
                                  double* pre_trace = nullptr);

/**
 * <psi| rho_1 |psi> where rho_1 is the one-qubit reduction of `output`.
 * `output` must be permutation-symmetric (defect <= 1e-10), which makes the
 * choice of kept qubit irrelevant.
 */
double single_copy_fidelity(const DensityOperator& output, const fock::QubitAmplitudes& input);

/**
 * Probabilities q_a of measuring exactly a qubits of `output` in |0>,
 * restricted to a in [n, m]. Intended for outputs of channels fed |0>^n;
 * mass below n signals a channel that violates the conservation bookkeeping
 * and is rejected above 1e-10 (a smaller leak is renormalized away).
 */
cloning::OutcomeDistribution zeros_distribution(const DensityOperator& output,
                                                const conservation::CloneSpec& spec);

// (m(n+1) + n) / (m(n+2)), exact integer arithmetic before the division.
double optimal_clone_fidelity(long long n, long long m);

// (n+1) / (n+2), independent of m.
double optimal_not_fidelity(long long n);

// Max - min of single_copy_fidelity over `samples` Haar-random pure inputs
// run through projection_cloner(n, m, .). Deterministic for a fixed seed.
double universality_check(int n, int m, int samples, std::uint64_t seed);

// Haar-random pure qubit state (normalized pair of complex Gaussians).
fock::QubitAmplitudes haar_qubit(rng::Stream& stream);

}  // namespace clonot::universal
