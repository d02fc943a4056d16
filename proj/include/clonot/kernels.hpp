#pragma once

#include "clonot/linalg.hpp"

namespace clonot::kernels {

// Hot dense kernels, OpenMP-parallel. Each has a serial twin in
// kernels::reference used as the oracle in tests and benchmarks. Both paths
// produce bit-identical results for a fixed build, independent of thread
// count: every output element (or weight block) is accumulated by exactly one
// thread in a fixed order.

linalg::CMatrix matmul(const linalg::CMatrix& a, const linalg::CMatrix& b);

linalg::CMatrix kron(const linalg::CMatrix& a, const linalg::CMatrix& b);

// Conjugation P a P by the orthogonal projector onto the permutation-
// symmetric subspace of `qubits` qubits. Exploits the projector's structure:
// it is block rank-1 over Hamming-weight sectors, so the conjugation needs
// two O(4^qubits) passes instead of two dense matrix products.
linalg::CMatrix sym_conjugate(const linalg::CMatrix& a, int qubits);

namespace reference {

linalg::CMatrix matmul(const linalg::CMatrix& a, const linalg::CMatrix& b);
linalg::CMatrix kron(const linalg::CMatrix& a, const linalg::CMatrix& b);
linalg::CMatrix sym_conjugate(const linalg::CMatrix& a, int qubits);

}  // namespace reference

}  // namespace clonot::kernels
